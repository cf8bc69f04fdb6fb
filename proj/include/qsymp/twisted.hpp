#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsymp/gt.hpp"
#include "qsymp/matrix.hpp"

namespace qsymp {

/// Highest weight lambda = (sigma_1 q^{m_1}, ..., sigma_n q^{m_n}) of
/// U'_q(sp_2n): positive integers m_i and signs sigma_i in {-1, +1}.
struct HighestWeight {
    std::vector<int> m;
    std::vector<int> signs;

    int n() const { return int(m.size()); }
    bool valid() const;
    /// The finiteness condition m_1 <= m_2 <= ... <= m_n.
    bool dominant() const;
    /// Name of the first violated inequality, empty when dominant.
    std::string violated_inequality() const;
    std::string str() const;
};

/// Finite-dimensional U'_q(sp_2n)-module: matrices for every generator in
/// the block-triangular support plus the inverses of s_{i,i+1} for odd i.
struct SPModule {
    int n = 0;
    int dim = 0;
    std::map<std::pair<int, int>, OpMatrix> s;  // (i,j) in support
    std::map<int, OpMatrix> sinv;               // odd i -> s_{i,i+1}^{-1}
    /// Multiplicity of each s_{2k-1,2k} joint eigenvalue vector
    /// (sigma_k q^{a_k})_k, keyed by the exponent vector (a_1, ..., a_n).
    std::map<std::vector<int>, int> weights;
    std::vector<int> m, signs;      // provenance when built from a highest weight
    std::vector<QScalar> highest;   // coordinates of the highest weight vector

    const OpMatrix& gen(int i, int j) const;
    OpMatrix gen_or_zero(int i, int j) const;  // zero matrix outside support
};

/// Matrices of all s_ij on V(nu) through s_ij -> q sum_k t_{i,2k-1} tbar_{j,2k}
/// - sum_k t_{i,2k} tbar_{j,2k-1} (the map S -> T G Tbar^t).  Requires even N.
/// Entries outside the block-triangular support are verified to vanish.
std::map<std::pair<int, int>, OpMatrix> embed_S(const GLModule& mod);

/// The gl weight nu = (r_n, ..., r_1, 0, ..., 0), r_i = m_i - 1.
GLWeight omega0_glweight(const HighestWeight& hw);

/// The pattern Omega^0: row 2k-1 from the bottom is (r_k, ..., r_1, 0^{k-1}),
/// row 2k is (r_k, ..., r_1, 0^k).
GTPattern omega0_pattern(const HighestWeight& hw);

/// The irreducible module L(lambda): cyclic span of zeta_{Omega^0} inside
/// V(nu) under the embedded generators, restricted and sign-twisted.
/// Throws math_error naming the violated inequality when hw is not dominant.
SPModule build_L(const HighestWeight& hw);

/// The m-dimensional U'_q(sp_2)-module in closed form: s_12 v_k = sigma
/// q^{m-2k} v_k, s_22 v_k = v_{k+1}, s_11 v_k = q^3 (1-q^{2m-2k})(1-q^{-2k})
/// v_{k-1}; s_21 is recovered from the block relation.
SPModule sp2_module(int m, int sigma);

/// Weight multiplicities of the degree <= d part of the Verma module
/// M(lambda): every PBW lowering monomial (generators s_{ij}, even i,
/// j in {1..i-2, i}) is enumerated and graded by its additive weight;
/// the table maps omega (lambda is lowered by q^{-omega}) to multiplicity.
std::map<std::vector<int>, long long> verma_truncated(const HighestWeight& hw, int d);

/// Evaluates a linear combination of SP words as an operator on the module;
/// negative exponents are resolved through the stored inverses.
OpMatrix eval_on_module(const SPModule& mod, const LinComb& x);

struct RelationFailure {
    std::string relation;      // "exchange", "inverse", "block"
    std::vector<int> indices;
    std::string detail;        // max |entry| of the residual at a sample q0
};

/// Checks every defining relation as an exact matrix identity; an empty
/// report means the module passes.
std::vector<RelationFailure> verify_module(const SPModule& mod);

} // namespace qsymp
