#pragma once

#include <map>
#include <vector>

#include "qsymp/error.hpp"

namespace qsymp {

/// Root system of type C_n in the epsilon basis.  Positive roots:
/// 2e_i (1 <= i <= n) and e_j +- e_i (i < j); n^2 of them.  With this
/// choice a weight is dominant when its coordinates are non-decreasing.
struct RootSystemC {
    int n;
    std::vector<std::vector<int>> positive;
};

RootSystemC root_system_C(int n);

/// Dimension of the irreducible sp_2n module whose highest weight is given
/// in the coordinate order (r_n, ..., r_1), r_n >= ... >= r_1 >= 0.
long long weyl_dim_sp(const std::vector<int>& r_desc);

/// Full weight multiplicity table of the irreducible sp_2n module with
/// highest weight lambda (ascending epsilon coordinates, lambda_1 <= ... <=
/// lambda_n).  Computed by the Freudenthal recursion on dominant weights and
/// expanded over Weyl orbits (signed permutations).
std::map<std::vector<int>, long long> freudenthal_sp(const std::vector<int>& lambda_asc);

/// Number of multisets of at most max_parts positive roots of C_n summing to
/// each vector omega (the truncated Kostant count used as the Verma oracle).
std::map<std::vector<int>, long long> kostant_counts(int n, int max_parts);

} // namespace qsymp
