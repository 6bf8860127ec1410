#pragma once

#include <string>

#include "balseg/words.hpp"

namespace balseg {

// naive:    0 steps right ('_'), 1 steps up ('|');   endpoint (|w|0, |w|1).
// standard: 0 steps right ('_'), 1 steps diagonally ('/'); endpoint (|w|, |w|1).
enum class PathStyle { naive, standard };

// ASCII picture of the lattice path coded by w, rows printed top to bottom
// with the origin at the bottom left. Trailing blanks are trimmed; rows are
// joined with '\n'; the empty word renders as the empty string.
std::string render_path(const Word& w, PathStyle style);

}  // namespace balseg
