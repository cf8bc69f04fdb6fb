#pragma once

#include <map>
#include <utility>

#include "qsymp/matrix.hpp"

namespace qsymp {

/// R = q sum_i E_ii(x)E_ii + sum_{i!=j} E_ii(x)E_jj + (q-q^-1) sum_{i<j} E_ij(x)E_ji,
/// an N^2 x N^2 matrix.  Basis vector (i,j) of C^N(x)C^N maps to row (i-1)N + j
/// (1-based), i.e. row-major.
OpMatrix build_R(int N);

/// R' = same diagonal part with (q-q^-1) sum_{i<j} E_ji(x)E_ji;
/// equals the transpose of R in the first tensor factor.
OpMatrix build_Rprime(int N);

/// The 2n x 2n matrix G = q sum_k E_{2k-1,2k} - sum_k E_{2k,2k-1}.
OpMatrix build_G(int n);

/// Places a two-leg operator onto legs (legA, legB) of (C^N)^(x)nlegs,
/// identity elsewhere.  Legs are 0-based, legA < legB.
OpMatrix place_two_legs(const OpMatrix& op, int N, int legA, int legB, int nlegs);

/// Residual R12 R13 R23 - R23 R13 R12 on C^N tensor cubed; zero iff R
/// satisfies the constant Yang-Baxter equation.
OpMatrix check_yang_baxter(const OpMatrix& R, int N);

/// Residual of the reflection equation R S1 R' S2 - S2 R' S1 R acting on
/// (module (x) C^N (x) C^N).  S_ops maps 1-based (i,j) to the d x d matrix of
/// s_ij on the module; missing pairs act as zero.  A d = 0 module yields an
/// empty residual.
OpMatrix check_reflection(const OpMatrix& R, const OpMatrix& Rp,
                          const std::map<std::pair<int, int>, OpMatrix>& S_ops,
                          int N, int d);

} // namespace qsymp
