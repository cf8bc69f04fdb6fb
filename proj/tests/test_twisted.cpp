#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsymp/rewrite.hpp"
#include "qsymp/twisted.hpp"
#include "qsymp/weyl.hpp"

using namespace qsymp;

TEST_CASE("embedded generators") {
    GLModule mod(GLWeight{{1, 0}});
    auto S = embed_S(mod);
    // s_{i,i+1} = q t_ii tbar_{i+1,i+1} for odd i
    CHECK(S.at({1, 2}) == (mod.t_rtf(1, 1) * mod.tb_rtf(2, 2)).scaled(QScalar::q()));
    // on V((1,0)) this is diag(1, q^2) in the pattern order
    CHECK(S.at({1, 2}).get(0, 0) == QScalar(1));
    CHECK(S.at({1, 2}).get(1, 1) == QScalar::q(2));
    // only the block-triangular support appears
    for (const auto& [ij, m] : S) CHECK(sp_support(1, ij.first, ij.second));
    GLModule mod4(GLWeight{{1, 0, 0, 0}});
    auto S4 = embed_S(mod4);
    CHECK(S4.count({1, 3}) == 0);  // s_13 = 0
    CHECK(S4.count({2, 3}) == 0);  // s_23 = 0 (j = i+1, even i)
    CHECK(S4.at({3, 4}) == (mod4.t_rtf(3, 3) * mod4.tb_rtf(4, 4)).scaled(QScalar::q()));
}

TEST_CASE("Omega^0 patterns") {
    GTPattern p1 = omega0_pattern(HighestWeight{{1}, {1}});
    CHECK(p1.rows() == std::vector<std::vector<int>>{{0}, {0, 0}});
    GTPattern p3 = omega0_pattern(HighestWeight{{3}, {1}});
    CHECK(p3.rows() == std::vector<std::vector<int>>{{2}, {2, 0}});
    GTPattern p12 = omega0_pattern(HighestWeight{{1, 2}, {1, 1}});
    CHECK(p12.rows() ==
          std::vector<std::vector<int>>{{0}, {0, 0}, {1, 0, 0}, {1, 0, 0, 0}});
    CHECK_THROWS_AS(omega0_pattern(HighestWeight{{2, 1}, {1, 1}}), math_error);
}

TEST_CASE("one-dimensional L") {
    SPModule L = build_L(HighestWeight{{1}, {1}});
    REQUIRE(L.dim == 1);
    CHECK(L.gen(1, 2).get(0, 0) == QScalar::q());
    CHECK(L.gen(2, 1).get(0, 0) == QScalar(-1));
    CHECK(L.gen(1, 1).is_zero());
    CHECK(L.gen(2, 2).is_zero());
    // block relation: 0 - q^2 (-1) q = q^3
    CHECK(verify_module(L).empty());
}

TEST_CASE("restriction of V((1,0)) gives the two-dimensional L") {
    SPModule L = build_L(HighestWeight{{2}, {1}});
    REQUIRE(L.dim == 2);
    // s_12 spectrum {q^2, 1} = {q^{m-2k}}
    std::multiset<QScalar> spec{L.gen(1, 2).get(0, 0), L.gen(1, 2).get(1, 1)};
    std::multiset<QScalar> expect{QScalar::q(2), QScalar(1)};
    CHECK(spec == expect);
    CHECK(verify_module(L).empty());
}

TEST_CASE("L((q^2, q^2)) sits inside the six-dimensional V((1,1,0,0))") {
    SPModule L = build_L(HighestWeight{{2, 2}, {1, 1}});
    CHECK(L.dim == 5);
    CHECK(weyl_dim_gl(GLWeight{{1, 1, 0, 0}}) == 6);
    CHECK(verify_module(L).empty());
}

TEST_CASE("non-dominant weights are refused with the violated inequality") {
    try {
        build_L(HighestWeight{{2, 1}, {1, 1}});
        CHECK(false);
    } catch (const math_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("m_1 <= m_2") != std::string::npos);
    }
}

TEST_CASE("closed-form sp_2 modules") {
    SPModule m1 = sp2_module(1, 1);
    CHECK(m1.dim == 1);
    CHECK(m1.gen(1, 2).get(0, 0) == QScalar::q());
    CHECK(m1.gen(1, 1).is_zero());
    CHECK(m1.gen(2, 2).is_zero());

    SPModule m2 = sp2_module(2, 1);
    QScalar expect = QScalar::q(3) * (QScalar(1) - QScalar::q(2)) * (QScalar(1) - QScalar::q(-2));
    CHECK(m2.gen(1, 1).get(0, 1) == expect);

    SPModule m3 = sp2_module(3, -1);
    std::multiset<QScalar> spec;
    for (int k = 0; k < 3; ++k) spec.insert(m3.gen(1, 2).get(k, k));
    std::multiset<QScalar> want{-QScalar::q(3), -QScalar::q(1), -QScalar::q(-1)};
    CHECK(spec == want);

    for (int m = 1; m <= 5; ++m)
        for (int sg : {1, -1}) CHECK(verify_module(sp2_module(m, sg)).empty());
    CHECK_THROWS_AS(sp2_module(0, 1), math_error);
}

TEST_CASE("sp_2 lowering chain matches the closed formula") {
    // s_11 s_22^k xi = q^3 (1 - lambda^2 q^-2k)(1 - q^-2k) s_22^{k-1} xi on L
    int m = 4;
    SPModule L = build_L(HighestWeight{{m}, {1}});
    std::vector<QScalar> xi = L.highest;
    REQUIRE(int(xi.size()) == L.dim);
    auto v = L.gen(1, 1).apply(xi);
    for (const auto& x : v) REQUIRE(x.is_zero());
    std::vector<QScalar> cur = xi;
    QScalar lam2 = QScalar::q(2 * m);
    for (int k = 1; k < m; ++k) {
        std::vector<QScalar> next = L.gen(2, 2).apply(cur);
        QScalar c = QScalar::q(3) * (QScalar(1) - lam2 * QScalar::q(-2 * k)) *
                    (QScalar(1) - QScalar::q(-2 * k));
        auto back = L.gen(1, 1).apply(next);
        for (int u = 0; u < L.dim; ++u) CHECK(back[u] == cur[u] * c);
        cur = next;
    }
    // the chain terminates: s_22 v_{m-1} = 0
    auto end = L.gen(2, 2).apply(cur);
    for (const auto& x : end) CHECK(x.is_zero());
}

TEST_CASE("sign twist") {
    SPModule plus = build_L(HighestWeight{{2}, {1}});
    SPModule minus = build_L(HighestWeight{{2}, {-1}});
    // s_12 flips sign, s_11 is fixed (both indices odd), s_22 is fixed
    CHECK(minus.gen(1, 2) == plus.gen(1, 2).scaled(QScalar(-1)));
    CHECK(minus.gen(2, 1) == plus.gen(2, 1).scaled(QScalar(-1)));
    CHECK(minus.gen(1, 1) == plus.gen(1, 1));
    CHECK(minus.gen(2, 2) == plus.gen(2, 2));
    CHECK(verify_module(minus).empty());
    // weight exponents are unchanged by the twist
    CHECK(minus.weights == plus.weights);
}

TEST_CASE("rank-one restrictions agree with the closed-form modules") {
    // same joint spectrum data as sp2_module, for both signs and m <= 4
    for (int m = 1; m <= 4; ++m)
        for (int sg : {1, -1}) {
            SPModule L = build_L(HighestWeight{{m}, {sg}});
            SPModule C = sp2_module(m, sg);
            CHECK(L.dim == C.dim);
            CHECK(L.weights == C.weights);
            CHECK(verify_module(L).empty());
        }
}

TEST_CASE("theta acts as q^3 on every constructed module") {
    std::vector<SPModule> mods;
    mods.push_back(sp2_module(3, 1));
    mods.push_back(build_L(HighestWeight{{1, 2}, {1, -1}}));
    for (const auto& mod : mods)
        for (int i = 1; i <= 2 * mod.n - 1; i += 2) {
            OpMatrix th = eval_on_module(mod, theta(i, mod.n));
            CHECK(th == OpMatrix::identity(mod.dim).scaled(QScalar::q(3)));
        }
}

TEST_CASE("verify_module flags a corrupted module") {
    SPModule bad = sp2_module(3, 1);
    bad.s[{1, 1}].add_to(0, 0, QScalar::q(2));
    auto failures = verify_module(bad);
    REQUIRE(!failures.empty());
    bool block_named = false;
    for (const auto& f : failures) block_named = block_named || f.relation == "block";
    CHECK(block_named);
}

TEST_CASE("truncated Verma tables") {
    HighestWeight hw1{{2}, {1}};
    auto t0 = verma_truncated(hw1, 0);
    REQUIRE(t0.size() == 1);
    CHECK(t0.at({0}) == 1);
    // n = 1: basis s_22^k, every multiplicity 1
    auto t1 = verma_truncated(hw1, 6);
    CHECK(t1.size() == 7);
    for (const auto& [omega, mult] : t1) CHECK(mult == 1);
    // n = 2: matches the truncated Kostant count
    HighestWeight hw2{{1, 2}, {1, 1}};
    for (int d = 0; d <= 3; ++d) CHECK(verma_truncated(hw2, d) == kostant_counts(2, d));
    CHECK_THROWS_AS(verma_truncated(hw1, -1), math_error);
}

TEST_CASE("Weyl dimensions for C_2") {
    CHECK(weyl_dim_sp({0, 0}) == 1);
    CHECK(weyl_dim_sp({0}) == 1);
    // oracle: direct product over the four positive roots of C_2,
    // rho = e_1 + 2 e_2, lambda in ascending coordinates (r_1, r_2)
    auto oracle = [](int r1, int r2) {
        double l1 = r1 + 1, l2 = r2 + 2;
        double num = (2 * l1) * (2 * l2) * (l1 + l2) * (l2 - l1);
        double den = 2.0 * 4 * 3 * 1;
        return (long long)(num / den + 0.5);
    };
    CHECK(weyl_dim_sp({1, 0}) == oracle(0, 1));
    CHECK(weyl_dim_sp({1, 0}) == 4);
    CHECK(weyl_dim_sp({2, 0}) == oracle(0, 2));
    CHECK(weyl_dim_sp({2, 0}) == 10);
    CHECK(weyl_dim_sp({2, 2}) == oracle(2, 2));
    CHECK_THROWS_AS(weyl_dim_sp({0, 1}), math_error);
}

TEST_CASE("weight multiplicities match the classical character") {
    for (auto m : std::vector<std::vector<int>>{{2}, {3}, {1, 2}, {2, 2}}) {
        HighestWeight hw{m, std::vector<int>(m.size(), 1)};
        SPModule L = build_L(hw);
        std::vector<int> lambda(m.size());
        for (size_t k = 0; k < m.size(); ++k) lambda[k] = m[k] - 1;
        auto classical = freudenthal_sp(lambda);
        REQUIRE(classical.size() == L.weights.size());
        for (const auto& [w, mult] : classical) {
            std::vector<int> a(w);
            for (int& x : a) x += 1;
            REQUIRE(L.weights.count(a) == 1);
            CHECK(L.weights.at(a) == int(mult));
        }
    }
}
