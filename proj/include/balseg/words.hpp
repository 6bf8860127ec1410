#pragma once

#include <string>

namespace balseg {

// A word is a finite sequence over the alphabet {0,1}, stored as '0'/'1'
// characters. The empty word is allowed everywhere.
using Word = std::string;

// Number of occurrences of '1' (the height of the coded path).
long long height(const Word& w);

// A word is balanced when any two factors of equal length contain numbers of
// 1s differing by at most one. Quadratic sliding-window scan.
bool is_balanced(const Word& w);

bool is_palindrome(const Word& w);

Word reversed(const Word& w);

// Exchanges 0s and 1s.
Word complemented(const Word& w);

// The morphism 0 -> 0, 1 -> 01. Injective; preserves balance.
Word insert_zeros(const Word& w);

// Erases one 0 from every maximal run of 0s (1s are kept). Preserves balance
// and palindromicity; left inverse of insert_zeros on words ending in 1.
Word erase_zeros(const Word& w);

}  // namespace balseg
