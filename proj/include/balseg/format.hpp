#pragma once

#include <string>
#include <vector>

#include "balseg/asymptotics.hpp"
#include "balseg/counting.hpp"
#include "balseg/genfun.hpp"

namespace balseg {

// Shared text renderings, used by both the command-line front end and the
// self-verification golden-table comparison. All numbers print in decimal;
// rationals print as "n" or "n/d".

// Header "L,0,1,...,max_length,total", then one row per length with empty
// cells after the diagonal.
std::string table_csv(const std::vector<std::vector<Count>>& rows,
                      const std::vector<Count>& totals);

// Right-aligned triangle with a trailing totals column.
std::string table_pretty(const std::vector<std::vector<Count>>& rows,
                         const std::vector<Count>& totals);

// "c0, c1, ..., cn"
std::string coefficient_list(const std::vector<Rational>& coefficients);

// "(1-X^a)(1-X^b)..."; "1" for the empty product.
std::string denominator_factors(const std::vector<long long>& orders);

}  // namespace balseg
