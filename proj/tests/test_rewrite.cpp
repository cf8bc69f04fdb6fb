#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qsymp/expr.hpp"
#include "qsymp/rewrite.hpp"
#include "qsymp/twisted.hpp"

using namespace qsymp;

namespace {

LinComb sp(const std::string& text, int n) { return parse_expr(text, Algebra::SP, n); }
LinComb gl(const std::string& text, int N) { return parse_expr(text, Algebra::GL, N); }

Word random_sp_word(std::mt19937& rng, int n, int maxlen) {
    std::vector<std::pair<int, int>> support;
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = 1; j <= 2 * n; ++j)
            if (sp_support(n, i, j)) support.emplace_back(i, j);
    std::uniform_int_distribution<size_t> pick(0, support.size() - 1);
    std::uniform_int_distribution<int> len(1, maxlen), ex(0, 2);
    std::vector<std::pair<Generator, int>> factors;
    int L = len(rng);
    for (int t = 0; t < L; ++t) {
        auto [i, j] = support[pick(rng)];
        int exps[3] = {-1, 1, 2};
        int e = exps[ex(rng)];
        if (e < 0 && !sp_cartan(i, j)) e = 1;
        factors.emplace_back(gen_s(i, j), e);
    }
    return Word(factors);
}

Word random_gl_word(std::mt19937& rng, int N, int maxlen) {
    std::vector<Generator> support;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            if (i >= j) support.push_back(gen_t(i, j));
            if (i <= j) support.push_back(gen_tb(i, j));
        }
    std::uniform_int_distribution<size_t> pick(0, support.size() - 1);
    std::uniform_int_distribution<int> len(1, maxlen), ex(0, 2);
    std::vector<std::pair<Generator, int>> factors;
    int L = len(rng);
    for (int t = 0; t < L; ++t) {
        Generator g = support[pick(rng)];
        int exps[3] = {-1, 1, 2};
        int e = exps[ex(rng)];
        if (e < 0 && g.i != g.j) e = 1;
        factors.emplace_back(g, e);
    }
    return Word(factors);
}

bool sp_word_is_normal(const Word& w, int n) {
    // even rows descending with column i-1 absent, then odd rows ascending
    auto key = [n](const Generator& g) {
        if (g.i % 2 == 0) return std::tuple<int, int, int>{0, (2 * n - g.i) / 2, g.j};
        return std::tuple<int, int, int>{1, (g.i - 1) / 2, g.j};
    };
    for (size_t p = 0; p < w.factors().size(); ++p) {
        const auto& [g, e] = w.factors()[p];
        if (g.i % 2 == 0 && g.j == g.i - 1) return false;
        if (e < 0 && !sp_cartan(g.i, g.j)) return false;
        if (p + 1 < w.factors().size() && !(key(g) < key(w.factors()[p + 1].first))) return false;
    }
    return true;
}

} // namespace

TEST_CASE("sp normal forms on worked examples") {
    // s_12 s_11 = q^2 s_11 s_12
    CHECK(normalize_sp(sp("s[1,2]*s[1,1]", 1), 1) ==
          normalize_sp(sp("q^2*s[1,1]*s[1,2]", 1), 1));
    // s_11 s_22 = q^-2 s_22 s_11 - (q-q^-1)(s_12^2 - q^2)
    LinComb lhs = normalize_sp(sp("s[1,1]*s[2,2]", 1), 1);
    LinComb rhs = normalize_sp(
        sp("q^-2*s[2,2]*s[1,1] - (q - q^-1)*(s[1,2]^2 - q^2)", 1), 1);
    CHECK(lhs == rhs);
    // the block relation collapses to q^3
    CHECK(normalize_sp(sp("s[2,2]*s[1,1] - q^2*s[2,1]*s[1,2]", 1), 1) ==
          LinComb::scalar(QScalar::q(3)));
    // an already-normal word is returned unchanged
    LinComb w = sp("s[2,2]^2*s[1,1]*s[1,2]^-3", 1);
    CHECK(normalize_sp(w, 1) == w);
}

TEST_CASE("hand-computed consequence relations at n = 2") {
    // mixed-block commutations that follow from the exchange relations;
    // each left-hand side normalizes to zero
    const char* zeros[] = {
        "s[1,1]*s[3,2] - s[3,2]*s[1,1] + q*(q-q^-1)*s[3,1]*s[1,2]",
        "s[3,3]*s[3,2] - s[3,2]*s[3,3]",
        "s[1,1]*s[4,1] - s[4,1]*s[1,1]",
        "s[3,3]*s[4,1] - s[4,1]*s[3,3] - (q^-1 - q)*s[3,4]*s[3,1]",
        "s[3,1]*s[3,2] - q^-1*s[3,2]*s[3,1] - (q-q^-1)*(q^-1*s[2,1]*s[3,3] - s[1,2]*s[3,3])",
        "s[3,1]*s[4,1] - q^-1*s[4,1]*s[3,1] - (q-q^-1)*(q^-1*s[4,3]*s[1,1] - s[3,4]*s[1,1])",
        "s[3,2]*s[4,1] - s[4,1]*s[3,2] - (q-q^-1)*(s[1,2]*s[4,3] - s[3,4]*s[2,1])",
    };
    for (const char* e : zeros) CHECK(normalize_sp(parse_expr(e, Algebra::SP, 2), 2).is_zero());
}

TEST_CASE("powers of s_11 under the embedding collapse to a q-power") {
    // in U_q(gl_2) the element (q t_11 tbar_12)^k reorders to
    // q^{(3k-k^2)/2} t_11^k tbar_12^k
    LinComb image = parse_expr("q*t[1,1]*tb[1,2]", Algebra::GL, 2);
    LinComb power = LinComb::scalar(QScalar(1));
    for (int k = 1; k <= 5; ++k) {
        power = power * image;
        Word expect = Word(gen_t(1, 1), k) * Word(gen_tb(1, 2), k);
        CHECK(normalize_gl(power, 2) == LinComb(expect, QScalar::q((3 * k - k * k) / 2)));
    }
}

TEST_CASE("normal forms land in the ordered basis") {
    std::mt19937 rng(7);
    for (int t = 0; t < 80; ++t) {
        int n = 1 + int(rng() % 2);
        LinComb nf = normalize_sp(LinComb(random_sp_word(rng, n, 4)), n);
        for (const auto& [w, c] : nf.terms()) CHECK(sp_word_is_normal(w, n));
    }
}

TEST_CASE("central elements") {
    CHECK(normalize_sp(theta(1, 1), 1) == LinComb::scalar(QScalar::q(3)));
    CHECK(normalize_sp(theta(1, 2), 2) == LinComb::scalar(QScalar::q(3)));
    CHECK(normalize_sp(theta(3, 2), 2) == LinComb::scalar(QScalar::q(3)));
    // centrality: theta_1 s_22 - s_22 theta_1 normalizes to zero
    LinComb s22(Word(gen_s(2, 2)));
    CHECK(normalize_sp(theta(1, 1) * s22 - s22 * theta(1, 1), 1).is_zero());
    CHECK_THROWS_AS(theta(3, 1), math_error);
    CHECK_THROWS_AS(theta(2, 2), math_error);
}

TEST_CASE("weights of words") {
    CHECK(weight_of_word(Word(), 2) == std::vector<int>{0, 0});
    CHECK(weight_of_word(Word(gen_s(2, 2)), 1) == std::vector<int>{-2});
    // derived from the Cartan commutation: s_12 s_41 = q s_41 s_12 and
    // s_34 s_41 = q^-1 s_41 s_34
    CHECK(weight_of_word(Word(gen_s(4, 1)), 2) == std::vector<int>{1, -1});
    CHECK(weight_of_word(Word(gen_s(4, 2)), 2) == std::vector<int>{-1, -1});
    // additivity on concatenation
    Word w = Word(gen_s(4, 1)) * Word(gen_s(2, 2));
    CHECK(weight_of_word(w, 2) == std::vector<int>{-1, -1});
    CHECK_THROWS_AS(weight_of_word(Word(gen_t(1, 1)), 1), math_error);
}

TEST_CASE("normalize_sp preserves weights term by term") {
    std::mt19937 rng(11);
    for (int t = 0; t < 60; ++t) {
        int n = 1 + int(rng() % 2);
        Word w = random_sp_word(rng, n, 4);
        std::vector<int> wt = weight_of_word(w, n);
        LinComb nf = normalize_sp(LinComb(w), n);
        for (const auto& [nw, c] : nf.terms()) CHECK(weight_of_word(nw, n) == wt);
    }
}

TEST_CASE("gl normal forms on worked examples") {
    CHECK(normalize_gl(gl("t[1,1]*tb[1,1]", 2), 2) == LinComb::scalar(QScalar(1)));
    // t_11 t_21 = q^-1 t_21 t_11
    CHECK(normalize_gl(gl("t[1,1]*t[2,1]", 2), 2) ==
          LinComb(Word(gen_t(2, 1)) * Word(gen_t(1, 1)), QScalar::q(-1)));
    LinComb w = gl("t[2,1]*t[1,1]^2*tb[1,2]", 2);
    CHECK(normalize_gl(w, 2) == w);
}

TEST_CASE("idempotence and multiplicativity on random words") {
    std::mt19937 rng(3);
    for (int t = 0; t < 50; ++t) {
        int n = 1 + int(rng() % 2);
        LinComb a(random_sp_word(rng, n, 3));
        LinComb b(random_sp_word(rng, n, 3));
        LinComb na = normalize_sp(a, n), nb = normalize_sp(b, n);
        CHECK(normalize_sp(na, n) == na);
        CHECK(normalize_sp(a * b, n) == normalize_sp(na * nb, n));
    }
    for (int t = 0; t < 30; ++t) {
        int N = 2 + int(rng() % 2);
        LinComb a(random_gl_word(rng, N, 3));
        LinComb na = normalize_gl(a, N);
        CHECK(normalize_gl(na, N) == na);
    }
}

TEST_CASE("strategy independence (confluence evidence)") {
    std::mt19937 rng(5);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + int(rng() % 2);
        LinComb x(random_sp_word(rng, n, 5));
        CHECK(normalize_sp(x, n, {Strategy::Leftmost, 0}) ==
              normalize_sp(x, n, {Strategy::Rightmost, 0}));
    }
    for (int t = 0; t < 60; ++t) {
        int N = 2 + int(rng() % 2);
        LinComb x(random_gl_word(rng, N, 4));
        CHECK(normalize_gl(x, N, {Strategy::Leftmost, 0}) ==
              normalize_gl(x, N, {Strategy::Rightmost, 0}));
    }
}

TEST_CASE("representation consistency") {
    std::mt19937 rng(9);
    SPModule L = build_L(HighestWeight{{1, 2}, {1, 1}});
    for (int t = 0; t < 40; ++t) {
        int n = 1 + int(rng() % 2);
        LinComb x(random_sp_word(rng, n, 4));
        CHECK(eval_on_module(L, x) == eval_on_module(L, normalize_sp(x, n)));
    }
    GLModule V(GLWeight{{1, 1, 0}});
    for (int t = 0; t < 30; ++t) {
        LinComb x(random_gl_word(rng, 3, 3));
        CHECK(eval_on_gl_module(V, x) == eval_on_gl_module(V, normalize_gl(x, 3)));
    }
    GLModule V4(GLWeight{{1, 0, 0, 0}});
    for (int t = 0; t < 15; ++t) {
        LinComb x(random_gl_word(rng, 4, 3));
        LinComb nf = normalize_gl(x, 4);
        CHECK(normalize_gl(nf, 4) == nf);
        CHECK(eval_on_gl_module(V4, x) == eval_on_gl_module(V4, nf));
    }
}

TEST_CASE("linear independence of normal monomials at desk scale") {
    // normal forms of all SP words of length <= 3 for n = 1 must span a
    // space of dimension equal to the number of distinct normal monomials
    std::vector<std::pair<int, int>> gens{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    std::vector<LinComb> rows;
    std::function<void(Word, int)> gen = [&](Word w, int left) {
        rows.push_back(normalize_sp(LinComb(w), 1));
        if (left == 0) return;
        for (auto [i, j] : gens) gen(w * Word(gen_s(i, j)), left - 1);
        gen(w * Word(gen_s(1, 2), -1), left - 1);
    };
    gen(Word(), 3);
    std::map<Word, int> columns;
    for (const auto& r : rows)
        for (const auto& [w, c] : r.terms())
            if (!columns.count(w)) {
                int idx = int(columns.size());
                columns[w] = idx;
            }
    OpMatrix m(int(rows.size()), int(columns.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& [w, c] : rows[i].terms()) m.set(int(i), columns[w], c);
    CHECK(rank_generic(m, 1) == int(columns.size()));
}

TEST_CASE("invalid input and budget") {
    CHECK_THROWS_AS(normalize_sp(LinComb(Word(gen_s(1, 3))), 1), math_error);
    CHECK_THROWS_AS(normalize_sp(LinComb(Word(gen_s(2, 2), -1)), 1), math_error);
    CHECK_THROWS_AS(normalize_gl(LinComb(Word(gen_t(1, 2))), 2), math_error);
    // an absurdly small budget trips the guard loudly
    LinComb x = sp("s[2,1]*s[2,2]*s[1,1]*s[2,1]", 1);
    CHECK_THROWS_AS(normalize_sp(x, 1, {Strategy::Leftmost, 3}), budget_error);
}
