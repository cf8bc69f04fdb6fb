#pragma once

#include <map>
#include <vector>

#include "qsymp/matrix.hpp"
#include "qsymp/word.hpp"

namespace qsymp {

/// Weakly decreasing integer tuple: highest weight of a gl_N irreducible.
struct GLWeight {
    std::vector<int> nu;
    int N() const { return int(nu.size()); }
    bool valid() const;
    std::string str() const;
};

/// Triangular interlacing array; rows_[k] is row k+1 (length k+1, bottom
/// row first), so rows_.back() is the fixed top row nu.
class GTPattern {
public:
    GTPattern() = default;
    explicit GTPattern(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {}

    int N() const { return int(rows_.size()); }
    /// 1-based access: entry(k, i) = nu_{ki}, 1 <= i <= k <= N.
    int entry(int k, int i) const { return rows_[k - 1][i - 1]; }
    int& entry(int k, int i) { return rows_[k - 1][i - 1]; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    bool valid() const;  // interlacing everywhere

    /// Flattened bottom row up; patterns are ordered lexicographically
    /// by this key.
    std::vector<int> sort_key() const;

    bool operator==(const GTPattern& o) const { return rows_ == o.rows_; }
    bool operator<(const GTPattern& o) const { return sort_key() < o.sort_key(); }
    std::string str() const;

private:
    std::vector<std::vector<int>> rows_;
};

/// All patterns with top row nu, sorted by GTPattern::sort_key.
std::vector<GTPattern> enumerate_patterns(const GLWeight& nu);

/// Dimension of V(nu) by the classical product formula
/// prod_{i<j} (nu_i - nu_j + j - i)/(j - i).
long long weyl_dim_gl(const GLWeight& nu);

/// The irreducible U_q(gl_N)-module V(nu) in the Gelfand-Tsetlin basis,
/// with matrices for both presentations.
class GLModule {
public:
    explicit GLModule(const GLWeight& nu);

    const GLWeight& weight() const { return nu_; }
    int N() const { return nu_.N(); }
    int dim() const { return dim_; }
    const std::vector<GTPattern>& patterns() const { return patterns_; }
    int pattern_index(const GTPattern& p) const;  // -1 when absent

    const OpMatrix& t(int k) const;       // t_k, 1 <= k <= N (diagonal)
    const OpMatrix& e(int k) const;       // e_k, 1 <= k <= N-1
    const OpMatrix& f(int k) const;       // f_k
    const OpMatrix& e_root(int i, int j) const;  // e_ij, i != j
    /// t_ij (i >= j) and tbar_ij (i <= j); other index pairs return the
    /// zero matrix, matching t_ij = tbar_ji = 0 for i < j.
    OpMatrix t_rtf(int i, int j) const;
    OpMatrix tb_rtf(int i, int j) const;

private:
    GLWeight nu_;
    int dim_;
    std::vector<GTPattern> patterns_;
    std::map<std::vector<int>, int> index_;
    std::vector<OpMatrix> t_, e_, f_;
    std::map<std::pair<int, int>, OpMatrix> eij_;
    std::map<std::pair<int, int>, OpMatrix> trtf_, tbrtf_;

    void build_chevalley();
    void build_root_vectors();
    void build_rtf();
};

/// Evaluates a linear combination of GL words (t/tbar generators, negative
/// exponents on diagonals only) as an operator on V(nu).
OpMatrix eval_on_gl_module(const GLModule& mod, const LinComb& x);

} // namespace qsymp
