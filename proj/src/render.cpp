#include "balseg/render.hpp"

#include <stdexcept>
#include <vector>

namespace balseg {

std::string render_path(const Word& w, PathStyle style) {
  for (char c : w)
    if (c != '0' && c != '1')
      throw std::invalid_argument("word must be over {0,1}");
  if (w.empty()) return {};
  const long long rows = height(w) + 1;
  const long long cols = static_cast<long long>(w.size()) + 1;
  std::vector<std::string> grid(rows, std::string(cols, ' '));
  long long x = 0, y = 0;  // origin bottom left
  for (char c : w) {
    if (c == '0') {
      grid[y][x + 1] = '_';
      x += 1;
    } else if (style == PathStyle::naive) {
      grid[y + 1][x] = '|';
      y += 1;
    } else {
      grid[y + 1][x + 1] = '/';
      x += 1;
      y += 1;
    }
  }
  std::vector<std::string> lines;
  for (long long r = rows - 1; r >= 0; --r) {
    std::string line = grid[r];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    lines.push_back(std::move(line));
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) out += '\n';
    out += lines[i];
  }
  return out;
}

}  // namespace balseg
