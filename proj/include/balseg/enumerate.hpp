#pragma once

#include <optional>
#include <vector>

#include "balseg/words.hpp"

namespace balseg {

// All balanced words of the given length and height that start with `prefix`
// and end with `suffix` (the two may overlap), in lexicographic order with
// '0' < '1'. Backtracking search that prunes on the sliding-window balance
// bounds and the remaining budget of 1s. Requires 0 <= height <= length and
// affixes no longer than the word.
std::vector<Word> enumerate_balanced(long long length, long long height,
                                     const Word& prefix = {},
                                     const Word& suffix = {});

// Same contract, by filtering all 2^length words. Reference implementation
// for cross-checks; refuses length > 30.
std::vector<Word> enumerate_balanced_naive(long long length, long long height,
                                           const Word& prefix = {},
                                           const Word& suffix = {});

// Balanced palindromes of the given length and height, in lexicographic
// order. When first_letter is set, keeps only words starting with it (the
// empty word never qualifies).
std::vector<Word> enumerate_balanced_palindromes(
    long long length, long long height,
    std::optional<char> first_letter = std::nullopt);

}  // namespace balseg
