#pragma once

#include <vector>

#include "qsymp/word.hpp"

namespace qsymp {

/// Order in which reducible positions are attacked.  Any admissible strategy
/// must produce the same normal form; the test suite checks this on random
/// words.
enum class Strategy { Leftmost, Rightmost };

struct RewriteOptions {
    Strategy strategy = Strategy::Leftmost;
    long long step_budget = 0;  // 0 = use default_step_budget()
};

/// Default rewrite step budget: 10^6 rule applications per input word,
/// overridable through the QSYMP_STEP_BUDGET environment variable.
long long default_step_budget();

/// Reduces a linear combination of U'_q(sp_2n) words to the ordered basis:
/// even rows 2n, 2n-2, ..., 2 with columns 1..i-2 then i (s_{i,i-1} is
/// eliminated through the block relation), followed by odd rows 1, 3, ...,
/// 2n-1 with columns 1..i+1; only s_{i,i+1} with odd i carries negative
/// exponents.  Linear, idempotent, and consistent with every representation.
LinComb normalize_sp(const LinComb& x, int n, RewriteOptions opts = {});

/// Reduces a linear combination of U_q(gl_N) words (generators t_ij with
/// i >= j and tbar_ij with i <= j) to the ordered basis: strictly lower
/// t's in the order t_{N,N-1}, t_{N,N-2}, t_{N-1,N-2}, ..., t_{N1}, ...,
/// t_{21}; then diagonal Laurent powers t_ii^k; then strictly upper tbar's
/// row by row with ascending columns.
LinComb normalize_gl(const LinComb& x, int N, RewriteOptions opts = {});

/// Additive weight of an SP word: the vector (a_1, ..., a_n) with
/// s_{2k-1,2k} w = q^{a_k} w s_{2k-1,2k}.  Additive on concatenation.
std::vector<int> weight_of_word(const Word& w, int n);

/// Central element theta_i = s_{i+1,i+1} s_ii - q^2 s_{i+1,i} s_{i,i+1}
/// for odd i <= 2n-1; throws math_error otherwise.
LinComb theta(int i, int n);

} // namespace qsymp
