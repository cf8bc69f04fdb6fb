#include "qsymp/expr.hpp"

#include <cctype>

namespace qsymp {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    Algebra algebra;
    int rank;

    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }

    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error("parse error at position " + std::to_string(pos) + ": " + msg);
    }

    long long integer() {
        skip();
        bool neg = eat('-');
        skip();
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) fail("expected an integer");
        long long v = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos]))
            v = v * 10 + (s[pos++] - '0');
        return neg ? -v : v;
    }

    Generator generator() {
        skip();
        Kind kind;
        if (s.compare(pos, 3, "tb[") == 0) {
            kind = Kind::TBar;
            pos += 2;
        } else if (s.compare(pos, 2, "t[") == 0) {
            kind = Kind::T;
            pos += 1;
        } else if (s.compare(pos, 2, "s[") == 0) {
            kind = Kind::S;
            pos += 1;
        } else {
            fail("expected a generator");
        }
        if (!eat('[')) fail("expected '['");
        int i = int(integer());
        if (!eat(',')) fail("expected ','");
        int j = int(integer());
        if (!eat(']')) fail("expected ']'");
        if (kind == Kind::S) {
            if (algebra != Algebra::SP) fail("s generators belong to the sp algebra");
            if (!sp_support(rank, i, j))
                fail("s[" + std::to_string(i) + "," + std::to_string(j) + "] is not a generator");
            return gen_s(i, j);
        }
        if (algebra != Algebra::GL) fail("t generators belong to the gl algebra");
        if (!gl_support(rank, kind, i, j))
            fail("generator outside the triangular support");
        return {Algebra::GL, kind, i, j};
    }

    LinComb atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            LinComb e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == 'q' && (pos + 1 >= s.size() || s[pos + 1] != '[')) {
            ++pos;
            return LinComb::scalar(QScalar::q());
        }
        if (c == 's' || c == 't') return LinComb(Word(generator()));
        if (std::isdigit((unsigned char)c)) {
            long long p = integer();
            if (eat('/')) {
                long long r = integer();
                if (r == 0) fail("zero denominator");
                return LinComb::scalar(QScalar(Rational(p, r)));
            }
            return LinComb::scalar(QScalar(p));
        }
        fail("unexpected character");
    }

    LinComb power_of(const LinComb& base, long long k) {
        if (k >= 0) {
            LinComb r = LinComb::scalar(QScalar(1));
            for (long long t = 0; t < k; ++t) r = r * base;
            return r;
        }
        // negative exponents: a scalar, or a single invertible generator power
        if (base.size() != 1) fail("negative power of a non-invertible expression");
        const auto& [w, c] = *base.terms().begin();
        if (w.empty()) {
            QScalar v = c;
            QScalar r(1);
            for (long long t = 0; t < -k; ++t) r = r / v;
            return LinComb::scalar(r);
        }
        if (w.factors().size() != 1) fail("negative power of a non-invertible expression");
        auto [g, e] = w.factors()[0];
        if (!invertible(rank, g)) fail("negative power of a non-invertible generator");
        QScalar r(1);
        for (long long t = 0; t < -k; ++t) r = r / c;
        return LinComb(Word(g, int(e * k)), r);
    }

    LinComb factor() {
        LinComb base = atom();
        if (eat('^')) return power_of(base, integer());
        return base;
    }

    LinComb term() {
        LinComb r = factor();
        while (peek() == '*') {
            eat('*');
            r = r * factor();
        }
        return r;
    }

    LinComb expr() {
        bool neg = false;
        if (peek() == '-') {
            eat('-');
            neg = true;
        } else if (peek() == '+') {
            eat('+');
        }
        LinComb r = term();
        if (neg) r = -r;
        while (true) {
            char c = peek();
            if (c == '+') {
                eat('+');
                r = r + term();
            } else if (c == '-') {
                eat('-');
                r = r - term();
            } else {
                break;
            }
        }
        return r;
    }
};

} // namespace

LinComb parse_expr(const std::string& text, Algebra algebra, int rank) {
    Parser p{text, 0, algebra, rank};
    LinComb r = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

} // namespace qsymp
