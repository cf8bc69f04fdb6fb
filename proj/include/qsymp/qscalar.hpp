#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "qsymp/error.hpp"

namespace qsymp {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Laurent polynomial in q with exact rational coefficients.
/// Invariant: no stored coefficient is zero; the zero polynomial has an
/// empty coefficient map.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly monomial(int exp, const Rational& coeff);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    int min_exp() const;  // throws on zero polynomial
    int max_exp() const;
    Rational coeff(int exp) const;
    const std::map<int, Rational>& coeffs() const { return c_; }
    void set_coeff(int exp, const Rational& v);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scaled(const Rational& c) const;
    LaurentPoly shifted(int k) const;  // multiply by q^k

    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

    Rational eval(const Rational& q0) const;  // q0 must be nonzero
    std::string str() const;

private:
    std::map<int, Rational> c_;
};

/// gcd of the underlying ordinary polynomials (q-power units discarded).
/// Result has min_exp 0 and is monic in its top coefficient; gcd with the
/// zero polynomial returns the other argument normalized the same way.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a/b; throws math_error if b does not divide a.
LaurentPoly poly_divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Element of the field Q(q) of rational functions, kept in canonical form:
/// gcd(num, den) = 1 and den has lowest term +1*q^0.  Structural equality
/// therefore coincides with mathematical equality.
class QScalar {
public:
    QScalar() : num_(), den_(LaurentPoly::one()) {}
    QScalar(long long v);
    QScalar(const Rational& v);
    explicit QScalar(const LaurentPoly& num);
    QScalar(const LaurentPoly& num, const LaurentPoly& den);

    static QScalar q(int k = 1);      // q^k
    static QScalar qdiff();           // q - q^-1

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    QScalar operator+(const QScalar& o) const;
    QScalar operator-(const QScalar& o) const;
    QScalar operator-() const;
    QScalar operator*(const QScalar& o) const;
    QScalar operator/(const QScalar& o) const;  // throws on zero divisor
    QScalar inverse() const;                    // throws on zero
    QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
    QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
    QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
    QScalar& operator/=(const QScalar& o) { return *this = *this / o; }

    bool operator==(const QScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QScalar& o) const { return !(*this == o); }
    bool operator<(const QScalar& o) const;  // arbitrary total order for map keys

    /// Exact substitution q = q0.  Throws math_error when q0 = 0 or q0 is a
    /// pole of the (already canonical) fraction.
    Rational eval_at(const Rational& q0) const;

    std::string str() const;

private:
    LaurentPoly num_, den_;
    void canonicalize();
};

/// Quantum integer [m] = (q^m - q^-m)/(q - q^-1), as a Laurent polynomial.
QScalar qint(long long m);

} // namespace qsymp
