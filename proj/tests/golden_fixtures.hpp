#pragma once

// Ground truth for the test binaries, frozen independently of the library
// sources: triangle values, row totals, reference generating functions, and
// small reference word sets. Tests compare against these literals; they never
// read expectations back out of the code under test.

#include <string>
#include <vector>

namespace fixtures {

inline const std::vector<std::vector<int>> s_rows = {
    {1},
    {1, 1},
    {1, 2, 1},
    {1, 3, 3, 1},
    {1, 4, 4, 4, 1},
    {1, 5, 6, 6, 5, 1},
    {1, 6, 8, 6, 8, 6, 1},
    {1, 7, 11, 8, 8, 11, 7, 1},
    {1, 8, 13, 12, 8, 12, 13, 8, 1},
    {1, 9, 17, 13, 12, 12, 13, 17, 9, 1},
    {1, 10, 20, 16, 16, 10, 16, 16, 20, 10, 1},
};

inline const std::vector<std::vector<int>> p_rows = {
    {1},
    {1, 1},
    {1, 0, 1},
    {1, 1, 1, 1},
    {1, 0, 2, 0, 1},
    {1, 1, 2, 2, 1, 1},
    {1, 0, 2, 0, 2, 0, 1},
    {1, 1, 3, 2, 2, 3, 1, 1},
    {1, 0, 3, 0, 2, 0, 3, 0, 1},
    {1, 1, 3, 3, 2, 2, 3, 3, 1, 1},
    {1, 0, 4, 0, 2, 0, 2, 0, 4, 0, 1},
};

inline const std::vector<int> s_totals = {1,  2,  4,  8,   14, 24,
                                                36, 54, 76, 104, 136};
inline const std::vector<int> p_totals = {1, 2, 2,  4,  4, 8,
                                                6, 14, 10, 20, 14};

struct GfFixture {
  long long h;
  std::vector<int> numerator;        // index = exponent
  std::vector<long long> orders;     // k of each 1-X^k factor
};

inline const std::vector<GfFixture> gf_s = {
    {2, {0, 1, 0, 1}, {1, 2, 3}},
    {3, {0, 1, 2, 0, 1, 2}, {2, 3, 4}},
    {4, {0, 1, 1, 3, 0, 3, 3, 3}, {3, 4, 5}},
    {5, {0, 1, 2, 3, 4, 0, 3, 5, 3, 4, 0, 0, 1}, {4, 5, 6}},
    {6, {0, 1, 1, 1, 4, 5, 0, 5, 10, 7, 6, 5, 0, 0, 1}, {5, 6, 7}},
};

inline const std::vector<GfFixture> gf_p = {
    {2, {0, 1}, {1, 3}},
    {3, {0, 1}, {2, 4}},
    {4, {0, 1, 1, 1}, {3, 5}},
    {5, {0, 1, 0, 1, 0, 0, 0, 1}, {4, 6}},
    {6, {0, 1, 1, 1, 2, 1, 0, 0, 1}, {5, 7}},
};

// The six balanced words of length 5 and height 2, and the palindromic two.
inline const std::vector<std::string> words_5_2 = {
    "00101", "01001", "01010", "10001", "10010", "10100"};
inline const std::vector<std::string> palindromes_5_2 = {"01010", "10001"};

}  // namespace fixtures
