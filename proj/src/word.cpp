#include "qsymp/word.hpp"

#include <sstream>

namespace qsymp {

std::string Generator::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::T: os << "t"; break;
        case Kind::TBar: os << "tb"; break;
        case Kind::S: os << "s"; break;
    }
    os << "[" << i << "," << j << "]";
    return os.str();
}

bool sp_support(int n, int i, int j) {
    if (i < 1 || i > 2 * n || j < 1 || j > 2 * n) return false;
    return j <= i || (j == i + 1 && i % 2 == 1);
}

bool sp_cartan(int i, int j) { return j == i + 1 && i % 2 == 1; }

bool gl_support(int N, Kind kind, int i, int j) {
    if (i < 1 || i > N || j < 1 || j > N) return false;
    if (kind == Kind::T) return i >= j;
    if (kind == Kind::TBar) return i <= j;
    return false;
}

bool invertible(int n_or_N, const Generator& g) {
    (void)n_or_N;
    if (g.kind == Kind::S) return sp_cartan(g.i, g.j);
    return g.i == g.j;  // diagonal t_ii, tbar_ii
}

Word::Word(const Generator& g, int exp) { push(g, exp); }

Word::Word(std::vector<std::pair<Generator, int>> factors) {
    for (const auto& [g, e] : factors) push(g, e);
}

void Word::push(const Generator& g, int exp) {
    if (exp == 0) return;
    if (!f_.empty() && f_.back().first == g) {
        f_.back().second += exp;
        if (f_.back().second == 0) f_.pop_back();
    } else {
        f_.emplace_back(g, exp);
    }
}

int Word::length() const {
    int n = 0;
    for (const auto& [g, e] : f_) n += e < 0 ? -e : e;
    return n;
}

Word Word::operator*(const Word& o) const {
    Word r = *this;
    for (const auto& [g, e] : o.f_) r.push(g, e);
    return r;
}

Word Word::pow(int k) const {
    if (k < 0) throw math_error("Word::pow: negative power");
    Word r;
    for (int t = 0; t < k; ++t) r = r * *this;
    return r;
}

std::string Word::str() const {
    if (f_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, e] : f_) {
        if (!first) os << "*";
        first = false;
        os << g.str();
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

LinComb::LinComb(const Word& w, const QScalar& c) { add_term(w, c); }

QScalar LinComb::coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? QScalar() : it->second;
}

void LinComb::add_term(const Word& w, const QScalar& c) {
    if (c.is_zero()) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
        t_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

LinComb LinComb::operator+(const LinComb& o) const {
    LinComb r = *this;
    for (const auto& [w, c] : o.t_) r.add_term(w, c);
    return r;
}

LinComb LinComb::operator-(const LinComb& o) const { return *this + (-o); }

LinComb LinComb::operator-() const {
    LinComb r;
    for (const auto& [w, c] : t_) r.t_[w] = -c;
    return r;
}

LinComb LinComb::operator*(const LinComb& o) const {
    LinComb r;
    for (const auto& [w1, c1] : t_)
        for (const auto& [w2, c2] : o.t_) r.add_term(w1 * w2, c1 * c2);
    return r;
}

LinComb LinComb::scaled(const QScalar& c) const {
    LinComb r;
    if (c.is_zero()) return r;
    for (const auto& [w, v] : t_) r.t_[w] = v * c;
    return r;
}

std::string LinComb::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (!w.empty()) os << "*" << w.str();
    }
    return os.str();
}

} // namespace qsymp
