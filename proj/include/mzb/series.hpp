#pragma once

#include <vector>

namespace mzb {

/// Expected dimension tables from the three generating series, by truncated
/// power-series division.  d: coefficients of 1/(1 - X^2 - X^3).
/// c[k][r]: coefficients of 1/(1 - (X^2 + X^3) Y).  bk[k][r]: the
/// Broadhurst-Kreimer series (1 + E Y)/(1 - O Y + S Y^2 (1 - Y^2)) with
/// E = X^2/(1-X^2), O = X^3/(1-X^2), S = X^12/((1-X^4)(1-X^6)).
struct SeriesTable {
    std::vector<long long> d;                   // index k
    std::vector<std::vector<long long>> c;      // [k][r]
    std::vector<std::vector<long long>> bk;     // [k][r]
};

SeriesTable expected_tables(int k_max, int r_max);

long long binomial(long long n, long long r);

}  // namespace mzb
