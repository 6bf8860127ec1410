#include "balseg/counting.hpp"

#include <algorithm>
#include <stdexcept>

#include "balseg/errors.hpp"
#include "balseg/totient.hpp"

namespace balseg {

namespace {

// Representative of a mod m in [0, m), m > 0, any sign of a.
long long math_mod(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::optional<Family> parse_family(std::string_view text) {
  if (text == "s") return Family::balanced;
  if (text == "p") return Family::palindrome;
  return std::nullopt;
}

std::size_t Counter::PairHash::operator()(
    const std::pair<long long, long long>& k) const {
  auto mix = static_cast<unsigned long long>(k.first) * 0x9e3779b97f4a7c15ull;
  mix ^= static_cast<unsigned long long>(k.second) + (mix >> 23);
  return static_cast<std::size_t>(mix * 0xbf58476d1ce4e5b9ull);
}

// s satisfies, for 1 <= h <= L/2,
//
//   s(L,h) = s(L-h-1,h) + s(L-h,h) - s(L-2h-1,h) + s(h-1,L-2) + s(h-1,L-1),
//
// and every argument pair reduces into that wedge via the mod-L extension
// and the symmetry s(L,h) = s(L,L-h). The column of a fixed reduced height
// is filled by an ascending loop (the first three terms look down the same
// column); the last two terms recurse into columns of strictly smaller
// reduced height, so the recursion depth is bounded by the height, not the
// length.
Count Counter::s(long long length, long long h) {
  if (length < 0) return 0;
  if (length == 0) return h == 0 ? 1 : 0;
  h = math_mod(h, length);
  h = std::min(h, length - h);
  if (h == 0) return 1;
  const std::pair key{length, h};
  if (auto it = s_memo_.find(key); it != s_memo_.end()) return it->second;
  long long& next = s_next_.try_emplace(h, 2 * h).first->second;
  for (long long l = next; l <= length; ++l) {
    Count value = s(l - h - 1, h) + s(l - h, h) - s(l - 2 * h - 1, h) +
                  s(h - 1, l - 2) + s(h - 1, l - 1);
    s_memo_.emplace(std::pair{l, h}, std::move(value));
  }
  next = std::max(next, length + 1);
  return s_memo_.at(key);
}

// p satisfies p(L,h) = p(L-h-1,h) + p(h-1,L-1) for 0 < h < L, with the same
// mod-L extension. Same column-by-column filling scheme as s.
Count Counter::p(long long length, long long h) {
  if (length < 0) return 0;
  if (length == 0) return h == 0 ? 1 : 0;
  if (h < 0 || h > length) h = math_mod(h, length);
  if (h == 0 || h == length) return 1;
  const std::pair key{length, h};
  if (auto it = p_memo_.find(key); it != p_memo_.end()) return it->second;
  long long& next = p_next_.try_emplace(h, h + 1).first->second;
  for (long long l = next; l <= length; ++l) {
    Count value = p(l - h - 1, h) + p(h - 1, l - 1);
    p_memo_.emplace(std::pair{l, h}, std::move(value));
  }
  next = std::max(next, length + 1);
  return p_memo_.at(key);
}

Count Counter::count(Family family, long long length, long long h) {
  return family == Family::balanced ? s(length, h) : p(length, h);
}

Count Counter::s_affix(long long length, long long h, char first, char last) {
  if (length < 1)
    throw std::invalid_argument("affix counts require length >= 1");
  if (h < 0 || h > length)
    throw std::invalid_argument("height must lie in [0, length]");
  for (char c : {first, last})
    if (c != '0' && c != '1')
      throw std::invalid_argument("letters must be '0' or '1'");
  if (first == '0' && last == '0') return s(length - h - 1, h);
  if (first == '1' && last == '1') return s(h - 1, length - 1);
  // Reversal exchanges the 0...1 and 1...0 words, so the two mixed counts
  // are equal and their sum is everything minus the pure counts.
  Count mixed = s(length, h) - s(length - h - 1, h) - s(h - 1, length - 1);
  if (mixed % 2 != 0)
    throw inconsistency_error("mixed affix count is odd: length " +
                              std::to_string(length) + ", height " +
                              std::to_string(h));
  return mixed / 2;
}

std::vector<std::vector<Count>> Counter::s_table(long long max_length) {
  if (max_length < 0) throw std::invalid_argument("max length is negative");
  std::vector<std::vector<Count>> rows(max_length + 1);
  for (long long l = 0; l <= max_length; ++l)
    for (long long k = 0; k <= l; ++k) rows[l].push_back(s(l, k));
  return rows;
}

std::vector<std::vector<Count>> Counter::p_table(long long max_length) {
  if (max_length < 0) throw std::invalid_argument("max length is negative");
  std::vector<std::vector<Count>> rows(max_length + 1);
  for (long long l = 0; l <= max_length; ++l)
    for (long long k = 0; k <= l; ++k) rows[l].push_back(p(l, k));
  return rows;
}

Count s_total(long long length) {
  if (length < 0) throw std::invalid_argument("length must be nonnegative");
  Count total = 1;
  if (length >= 1) {
    const auto phi = totient_sieve(length);
    for (long long i = 1; i <= length; ++i)
      total += to_count(length - i + 1) * to_count(phi[i - 1]);
  }
  return total;
}

Count p_total(long long length) {
  if (length < 0) throw std::invalid_argument("length must be nonnegative");
  Count total = 1;
  for (long long i = 0; i < (length + 1) / 2; ++i)
    total += to_count(totient(length - 2 * i));
  return total;
}

Count s_height2(long long length) {
  if (length < 0) throw std::invalid_argument("length must be nonnegative");
  const Count base = to_count(length) + 1;
  return (base * base + 2) / 6;
}

}  // namespace balseg
