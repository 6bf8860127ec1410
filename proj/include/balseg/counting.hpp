#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace balseg {

using Count = mpz_class;

// The gmp classes convert from long but not long long; every quantity this
// library feeds them fits in long.
inline Count to_count(long long v) { return Count(static_cast<long>(v)); }

enum class Family { balanced, palindrome };

// "s" -> balanced, "p" -> palindrome.
std::optional<Family> parse_family(std::string_view text);

// Memoized evaluation of the two segment-counting functions, extended to all
// integer arguments:
//
//   s(L,h) = #{balanced words of length L and height h}   for 0 <= h <= L,
//   p(L,h) = the palindromic ones,
//
// with s(0,0) = p(0,0) = 1, zero for L < 0 or (L = 0, h != 0), and heights
// outside [0,L] reduced mod L (for L > 0). Columns are filled bottom-up per
// height, so deep argument chains never translate into deep recursion.
// An instance owns its caches; distinct instances are independent.
class Counter {
 public:
  Count s(long long length, long long h);
  Count p(long long length, long long h);
  Count count(Family family, long long length, long long h);

  // Balanced words with prescribed first and last letter. Each letter must be
  // '0' or '1'; requires length >= 1 and 0 <= h <= length.
  Count s_affix(long long length, long long h, char first, char last);

  // Rows 0..max_length of the triangle; row L holds heights 0..L.
  std::vector<std::vector<Count>> s_table(long long max_length);
  std::vector<std::vector<Count>> p_table(long long max_length);

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<long long, long long>& k) const;
  };
  using Memo = std::unordered_map<std::pair<long long, long long>, Count, PairHash>;

  Memo s_memo_;
  Memo p_memo_;
  // Per height, the first length whose column entry is not yet memoized.
  std::unordered_map<long long, long long> s_next_;
  std::unordered_map<long long, long long> p_next_;
};

// Row total: number of balanced words of length L (all heights),
// 1 + sum_{i=1..L} (L-i+1) phi(i).
Count s_total(long long length);

// Row total for palindromes: 1 + sum phi(L-2i) over 0 <= i < ceil(L/2).
Count p_total(long long length);

// Closed form floor(((L+1)^2 + 2) / 6) for height 2. Requires length >= 0;
// agrees with s(L,2) everywhere, extended values included.
Count s_height2(long long length);

}  // namespace balseg
