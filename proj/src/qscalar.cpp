#include "qsymp/qscalar.hpp"

#include <sstream>
#include <vector>

namespace qsymp {

LaurentPoly LaurentPoly::monomial(int exp, const Rational& coeff) {
    LaurentPoly p;
    if (coeff != 0) p.c_[exp] = coeff;
    return p;
}

bool LaurentPoly::is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

int LaurentPoly::min_exp() const {
    if (is_zero()) throw math_error("min_exp of zero polynomial");
    return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (is_zero()) throw math_error("max_exp of zero polynomial");
    return c_.rbegin()->first;
}

Rational LaurentPoly::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set_coeff(int exp, const Rational& v) {
    if (v == 0)
        c_.erase(exp);
    else
        c_[exp] = v;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, v] : o.c_) {
        auto it = r.c_.find(e);
        if (it == r.c_.end()) {
            r.c_[e] = v;
        } else {
            it->second += v;
            if (it->second == 0) r.c_.erase(it);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) r.c_[e] = -v;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, v1] : c_)
        for (const auto& [e2, v2] : o.c_) {
            Rational& slot = r.c_[e1 + e2];
            slot += v1 * v2;
        }
    for (auto it = r.c_.begin(); it != r.c_.end();)
        it = (it->second == 0) ? r.c_.erase(it) : std::next(it);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, v] : c_) r.c_[e] = v * c;
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) r.c_[e + k] = v;
    return r;
}

Rational LaurentPoly::eval(const Rational& q0) const {
    if (q0 == 0) throw math_error("Laurent polynomial evaluated at q = 0");
    Rational acc = 0;
    for (const auto& [e, v] : c_) {
        Rational p = 1;
        int a = e < 0 ? -e : e;
        for (int k = 0; k < a; ++k) p *= q0;
        if (e < 0)
            acc += Rational(v / p);
        else
            acc += Rational(v * p);
    }
    return acc;
}

namespace {

std::string rational_str(const Rational& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// Dense coefficient vector, index 0 = lowest exponent.
std::vector<Rational> to_dense(const LaurentPoly& p) {
    std::vector<Rational> d(p.max_exp() - p.min_exp() + 1, Rational(0));
    for (const auto& [e, v] : p.coeffs()) d[e - p.min_exp()] = v;
    return d;
}

LaurentPoly from_dense(const std::vector<Rational>& d, int shift) {
    LaurentPoly p;
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) p.set_coeff(int(i) + shift, d[i]);
    return p;
}

void trim(std::vector<Rational>& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

// Remainder of a by b over Q[x]; a is consumed.
std::vector<Rational> poly_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
    const Rational& lead = b.back();
    while (a.size() >= b.size()) {
        Rational f = a.back() / lead;
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

} // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    auto normalize = [](const LaurentPoly& p) {
        LaurentPoly r = p.shifted(-p.min_exp());
        return r.scaled(Rational(1) / r.coeff(r.max_exp()));
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    std::vector<Rational> u = to_dense(a), v = to_dense(b);
    while (!v.empty()) {
        std::vector<Rational> r = poly_rem(std::move(u), v);
        u = std::move(v);
        v = std::move(r);
    }
    LaurentPoly g = from_dense(u, 0);
    return g.scaled(Rational(1) / g.coeff(g.max_exp()));
}

LaurentPoly poly_divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw math_error("polynomial division by zero");
    if (a.is_zero()) return LaurentPoly();
    std::vector<Rational> u = to_dense(a);
    std::vector<Rational> v = to_dense(b);
    if (u.size() < v.size()) throw math_error("inexact polynomial division");
    std::vector<Rational> quot(u.size() - v.size() + 1, Rational(0));
    const Rational& lead = v.back();
    while (u.size() >= v.size()) {
        Rational f = u.back() / lead;
        size_t off = u.size() - v.size();
        quot[off] = f;
        for (size_t i = 0; i < v.size(); ++i) u[off + i] -= f * v[i];
        u.pop_back();
        trim(u);
        if (u.empty()) break;
    }
    if (!u.empty()) throw math_error("inexact polynomial division");
    return from_dense(quot, a.min_exp() - b.min_exp());
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest power first
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        Rational v = it->second;
        int e = it->first;
        if (first) {
            if (v < 0) { os << "-"; v = -v; }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        bool unit = (v == 1) && e != 0;
        if (!unit) os << rational_str(v);
        if (e != 0) {
            if (!unit) os << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

QScalar::QScalar(long long v)
    : num_(LaurentPoly::monomial(0, Rational(v))), den_(LaurentPoly::one()) {}

QScalar::QScalar(const Rational& v)
    : num_(LaurentPoly::monomial(0, v)), den_(LaurentPoly::one()) {}

QScalar::QScalar(const LaurentPoly& num) : num_(num), den_(LaurentPoly::one()) {}

QScalar::QScalar(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw math_error("QScalar with zero denominator");
    canonicalize();
}

QScalar QScalar::q(int k) { return QScalar(LaurentPoly::monomial(k, 1)); }

QScalar QScalar::qdiff() {
    return QScalar(LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(-1, -1));
}

void QScalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    // a monomial on either side makes the gcd a unit
    if (num_.coeffs().size() > 1 && den_.coeffs().size() > 1) {
        LaurentPoly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = poly_divide_exact(num_, g);
            den_ = poly_divide_exact(den_, g);
        }
    }
    // unit normalization: den's lowest term becomes +1 * q^0
    int e = den_.min_exp();
    Rational c = den_.coeff(e);
    num_ = num_.shifted(-e).scaled(Rational(1) / c);
    den_ = den_.shifted(-e).scaled(Rational(1) / c);
}

QScalar QScalar::operator+(const QScalar& o) const {
    return QScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QScalar QScalar::operator-(const QScalar& o) const {
    return QScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QScalar QScalar::operator-() const {
    QScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

QScalar QScalar::operator*(const QScalar& o) const {
    if (is_zero() || o.is_zero()) return QScalar();
    return QScalar(num_ * o.num_, den_ * o.den_);
}

QScalar QScalar::operator/(const QScalar& o) const {
    if (o.is_zero()) throw math_error("QScalar division by zero");
    return QScalar(num_ * o.den_, den_ * o.num_);
}

QScalar QScalar::inverse() const {
    if (is_zero()) throw math_error("inverse of zero QScalar");
    return QScalar(den_, num_);
}

bool QScalar::operator<(const QScalar& o) const {
    auto cmp = [](const LaurentPoly& a, const LaurentPoly& b) {
        if (a.coeffs().size() != b.coeffs().size())
            return a.coeffs().size() < b.coeffs().size() ? -1 : 1;
        auto ia = a.coeffs().begin();
        auto ib = b.coeffs().begin();
        for (; ia != a.coeffs().end(); ++ia, ++ib) {
            if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
            if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        }
        return 0;
    };
    int c = cmp(num_, o.num_);
    if (c != 0) return c < 0;
    return cmp(den_, o.den_) < 0;
}

Rational QScalar::eval_at(const Rational& q0) const {
    if (q0 == 0) throw math_error("eval_at: q = 0 is not allowed");
    Rational d = den_.eval(q0);
    if (d == 0) throw math_error("eval_at: pole at q0 = " + rational_str(q0));
    return num_.eval(q0) / d;
}

std::string QScalar::str() const {
    if (is_polynomial()) return num_.str();
    std::string n = num_.str(), d = den_.str();
    std::string ns = num_.coeffs().size() > 1 ? "(" + n + ")" : n;
    std::string ds = den_.coeffs().size() > 1 ? "(" + d + ")" : d;
    return ns + "/" + ds;
}

QScalar qint(long long m) {
    // [m] = sign(m) * (q^{|m|-1} + q^{|m|-3} + ... + q^{1-|m|})
    if (m == 0) return QScalar();
    long long a = m < 0 ? -m : m;
    LaurentPoly p;
    for (long long e = a - 1; e >= 1 - a; e -= 2) p.set_coeff(int(e), m < 0 ? -1 : 1);
    return QScalar(p);
}

} // namespace qsymp
