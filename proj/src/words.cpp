#include "balseg/words.hpp"

#include <algorithm>
#include <vector>

namespace balseg {

long long height(const Word& w) {
  return std::count(w.begin(), w.end(), '1');
}

bool is_balanced(const Word& w) {
  const long long n = static_cast<long long>(w.size());
  std::vector<long long> ones(n + 1, 0);
  for (long long i = 0; i < n; ++i) ones[i + 1] = ones[i] + (w[i] == '1');
  for (long long k = 1; k < n; ++k) {
    long long lo = k, hi = 0;
    for (long long i = 0; i + k <= n; ++i) {
      const long long c = ones[i + k] - ones[i];
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    if (hi - lo > 1) return false;
  }
  return true;
}

bool is_palindrome(const Word& w) {
  return std::equal(w.begin(), w.begin() + w.size() / 2, w.rbegin());
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word complemented(const Word& w) {
  Word out = w;
  for (char& c : out) c = (c == '0') ? '1' : '0';
  return out;
}

Word insert_zeros(const Word& w) {
  Word out;
  out.reserve(w.size() * 2);
  for (char c : w) {
    if (c == '1') out.push_back('0');
    out.push_back(c);
  }
  return out;
}

Word erase_zeros(const Word& w) {
  Word out;
  out.reserve(w.size());
  bool run_head = true;  // next 0 starts a maximal run and is dropped
  for (char c : w) {
    if (c == '1') {
      out.push_back('1');
      run_head = true;
    } else {
      if (!run_head) out.push_back('0');
      run_head = false;
    }
  }
  return out;
}

}  // namespace balseg
