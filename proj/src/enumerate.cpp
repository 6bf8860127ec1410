#include "balseg/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace balseg {

namespace {

void check_arguments(long long length, long long height_, const Word& prefix,
                     const Word& suffix) {
  if (length < 0) throw std::invalid_argument("length must be nonnegative");
  if (height_ < 0 || height_ > length)
    throw std::invalid_argument("height must lie in [0, length]");
  if (static_cast<long long>(prefix.size()) > length ||
      static_cast<long long>(suffix.size()) > length)
    throw std::invalid_argument("affix longer than the word");
  for (const Word* affix : {&prefix, &suffix})
    for (char c : *affix)
      if (c != '0' && c != '1')
        throw std::invalid_argument("affixes must be words over {0,1}");
}

// Letter imposed at position i by the affixes: '0', '1', 0 when free, or 'x'
// when prefix and suffix overlap and disagree there.
char forced_letter(long long i, long long length, const Word& prefix,
                   const Word& suffix) {
  char c = 0;
  if (i < static_cast<long long>(prefix.size())) c = prefix[i];
  const long long from_end = length - 1 - i;
  if (from_end < static_cast<long long>(suffix.size())) {
    const char sc = suffix[suffix.size() - 1 - from_end];
    if (c != 0 && c != sc) return 'x';
    c = sc;
  }
  return c;
}

// Depth-first construction. For each window length k (1..length) the
// observed min/max ones-counts are maintained incrementally; a placement
// that stretches some window range beyond {m, m+1} is cut immediately, as is
// one that makes the target height unreachable.
class BalancedSearch {
 public:
  BalancedSearch(long long length, long long target, const Word& prefix,
                 const Word& suffix)
      : length_(length),
        target_(target),
        prefix_(prefix),
        suffix_(suffix),
        ones_(length + 1, 0),
        window_min_(length + 1, length + 1),
        window_max_(length + 1, -1),
        undo_(length) {
    current_.reserve(length);
  }

  std::vector<Word> run() {
    descend(0);
    return std::move(results_);
  }

 private:
  struct UndoEntry {
    long long k, min, max;
  };

  void descend(long long i) {
    if (i == length_) {
      results_.push_back(current_);
      return;
    }
    const char forced = forced_letter(i, length_, prefix_, suffix_);
    if (forced == 'x') return;
    for (char c : {'0', '1'}) {
      if (forced != 0 && c != forced) continue;
      const long long placed = ones_[i] + (c == '1');
      const long long rest = length_ - i - 1;
      if (placed > target_ || target_ - placed > rest) continue;
      if (try_place(i, c)) descend(i + 1);
      unplace(i);
    }
  }

  // Extends the word by c, updating every window ending at position i+1.
  // Returns false (with the undo log still filled) on a balance violation.
  bool try_place(long long i, char c) {
    current_.push_back(c);
    ones_[i + 1] = ones_[i] + (c == '1');
    auto& undo = undo_[i];
    undo.clear();
    for (long long k = 1; k <= i + 1; ++k) {
      const long long count = ones_[i + 1] - ones_[i + 1 - k];
      if (count >= window_min_[k] && count <= window_max_[k]) continue;
      undo.push_back({k, window_min_[k], window_max_[k]});
      window_min_[k] = std::min(window_min_[k], count);
      window_max_[k] = std::max(window_max_[k], count);
      if (window_max_[k] - window_min_[k] > 1) return false;
    }
    return true;
  }

  void unplace(long long i) {
    for (auto it = undo_[i].rbegin(); it != undo_[i].rend(); ++it) {
      window_min_[it->k] = it->min;
      window_max_[it->k] = it->max;
    }
    current_.pop_back();
  }

  long long length_;
  long long target_;
  const Word& prefix_;
  const Word& suffix_;
  Word current_;
  std::vector<long long> ones_;
  std::vector<long long> window_min_;
  std::vector<long long> window_max_;
  std::vector<std::vector<UndoEntry>> undo_;  // one log per position
  std::vector<Word> results_;
};

}  // namespace

std::vector<Word> enumerate_balanced(long long length, long long height_,
                                     const Word& prefix, const Word& suffix) {
  check_arguments(length, height_, prefix, suffix);
  return BalancedSearch(length, height_, prefix, suffix).run();
}

std::vector<Word> enumerate_balanced_naive(long long length, long long height_,
                                           const Word& prefix,
                                           const Word& suffix) {
  check_arguments(length, height_, prefix, suffix);
  if (length > 30)
    throw std::invalid_argument("naive enumeration is limited to length 30");
  std::vector<Word> out;
  for (unsigned long long mask = 0; mask < (1ull << length); ++mask) {
    Word w(length, '0');
    for (long long i = 0; i < length; ++i)
      if (mask >> (length - 1 - i) & 1) w[i] = '1';
    if (height(w) != height_) continue;
    if (!w.starts_with(prefix) || !w.ends_with(suffix)) continue;
    if (!is_balanced(w)) continue;
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Word> enumerate_balanced_palindromes(
    long long length, long long height_, std::optional<char> first_letter) {
  if (first_letter && *first_letter != '0' && *first_letter != '1')
    throw std::invalid_argument("first letter must be '0' or '1'");
  std::vector<Word> out;
  for (Word& w : enumerate_balanced(length, height_)) {
    if (!is_palindrome(w)) continue;
    if (first_letter && (w.empty() || w.front() != *first_letter)) continue;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace balseg
