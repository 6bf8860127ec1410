#include "balseg/format.hpp"

#include <algorithm>
#include <sstream>

namespace balseg {

// mpq prints "n/d", or just "n" when the denominator is 1.
std::string to_string(const Rational& q) { return q.get_str(); }

std::string table_csv(const std::vector<std::vector<Count>>& rows,
                      const std::vector<Count>& totals) {
  const long long max_length = static_cast<long long>(rows.size()) - 1;
  std::ostringstream out;
  out << "L";
  for (long long k = 0; k <= max_length; ++k) out << ',' << k;
  out << ",total\n";
  for (long long l = 0; l <= max_length; ++l) {
    out << l;
    for (long long k = 0; k <= max_length; ++k) {
      out << ',';
      if (k <= l) out << rows[l][k].get_str();
    }
    out << ',' << totals[l].get_str() << '\n';
  }
  return out.str();
}

std::string table_pretty(const std::vector<std::vector<Count>>& rows,
                         const std::vector<Count>& totals) {
  const long long max_length = static_cast<long long>(rows.size()) - 1;
  std::size_t cell = 1;
  for (const auto& row : rows)
    for (const auto& v : row) cell = std::max(cell, v.get_str().size());
  cell = std::max(cell, std::to_string(max_length).size());
  std::size_t label = std::max<std::size_t>(3, std::to_string(max_length).size());
  std::size_t total_width = std::string("total").size();
  for (const auto& t : totals) total_width = std::max(total_width, t.get_str().size());

  auto pad = [](const std::string& s, std::size_t w) {
    return std::string(w - s.size(), ' ') + s;
  };

  std::ostringstream out;
  out << pad("L\\h", label);
  for (long long k = 0; k <= max_length; ++k)
    out << ' ' << pad(std::to_string(k), cell);
  out << " | " << pad("total", total_width) << '\n';
  for (long long l = 0; l <= max_length; ++l) {
    out << pad(std::to_string(l), label);
    for (long long k = 0; k <= max_length; ++k)
      out << ' ' << pad(k <= l ? rows[l][k].get_str() : "", cell);
    out << " | " << pad(totals[l].get_str(), total_width) << '\n';
  }
  return out.str();
}

std::string coefficient_list(const std::vector<Rational>& coefficients) {
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(coefficients[i]);
  }
  return out;
}

std::string denominator_factors(const std::vector<long long>& orders) {
  if (orders.empty()) return "1";
  std::string out;
  for (long long k : orders) out += "(1-X^" + std::to_string(k) + ")";
  return out;
}

}  // namespace balseg
