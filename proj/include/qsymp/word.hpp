#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qsymp/qscalar.hpp"

namespace qsymp {

enum class Algebra { GL, SP };
enum class Kind { T, TBar, S };

/// One generator symbol: t_ij, tbar_ij or s_ij.
struct Generator {
    Algebra alg;
    Kind kind;
    int i;  // row
    int j;  // column

    auto operator<=>(const Generator&) const = default;
    std::string str() const;
};

inline Generator gen_t(int i, int j) { return {Algebra::GL, Kind::T, i, j}; }
inline Generator gen_tb(int i, int j) { return {Algebra::GL, Kind::TBar, i, j}; }
inline Generator gen_s(int i, int j) { return {Algebra::SP, Kind::S, i, j}; }

/// True when s_ij is a generator of U'_q(sp_2n): j <= i, or j = i+1 with odd i.
bool sp_support(int n, int i, int j);
/// True for the invertible generators s_{i,i+1}, i odd.
bool sp_cartan(int i, int j);
/// True when t_ij or tbar_ij is a generator of U_q(gl_N).
bool gl_support(int N, Kind kind, int i, int j);
/// True for generators on which negative exponents are allowed.
bool invertible(int n_or_N, const Generator& g);

/// Product of generator powers.  Adjacent equal generators are merged and
/// zero exponents dropped; no other normalization happens here.
class Word {
public:
    Word() = default;
    Word(const Generator& g, int exp = 1);
    explicit Word(std::vector<std::pair<Generator, int>> factors);

    bool empty() const { return f_.empty(); }
    const std::vector<std::pair<Generator, int>>& factors() const { return f_; }
    int length() const;  // total |exponent| count

    Word operator*(const Word& o) const;
    Word pow(int k) const;  // k >= 0

    auto operator<=>(const Word&) const = default;
    std::string str() const;

private:
    std::vector<std::pair<Generator, int>> f_;
    void push(const Generator& g, int exp);
};

/// Finite linear combination of words with QScalar coefficients.
/// Invariant: no stored coefficient is zero.
class LinComb {
public:
    LinComb() = default;
    LinComb(const Word& w, const QScalar& c = QScalar(1));
    static LinComb scalar(const QScalar& c) { return LinComb(Word(), c); }

    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    const std::map<Word, QScalar>& terms() const { return t_; }
    QScalar coeff(const Word& w) const;
    void add_term(const Word& w, const QScalar& c);

    LinComb operator+(const LinComb& o) const;
    LinComb operator-(const LinComb& o) const;
    LinComb operator-() const;
    LinComb operator*(const LinComb& o) const;   // concatenation, bilinear
    LinComb scaled(const QScalar& c) const;

    bool operator==(const LinComb& o) const { return t_ == o.t_; }
    bool operator!=(const LinComb& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::map<Word, QScalar> t_;
};

} // namespace qsymp
