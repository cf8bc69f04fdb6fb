#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qsymp/cli.hpp"
#include "qsymp/expr.hpp"
#include "qsymp/json_io.hpp"

using namespace qsymp;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("expression parser") {
    CHECK(parse_expr("q", Algebra::SP, 1) == LinComb::scalar(QScalar::q()));
    CHECK(parse_expr("q^-1", Algebra::SP, 1) == LinComb::scalar(QScalar::q(-1)));
    CHECK(parse_expr("(q - q^-1)", Algebra::SP, 1) == LinComb::scalar(QScalar::qdiff()));
    CHECK(parse_expr("3/2", Algebra::SP, 1) == LinComb::scalar(QScalar(Rational(3, 2))));
    LinComb w = parse_expr("s[1,2]^-2*s[1,1]", Algebra::SP, 1);
    CHECK(w.size() == 1);
    CHECK(w.terms().begin()->first.length() == 3);
    CHECK(parse_expr("t[2,1]*tb[1,2]", Algebra::GL, 2).size() == 1);
    // negative powers only on invertible generators
    CHECK_THROWS_AS(parse_expr("s[1,1]^-1", Algebra::SP, 1), parse_error);
    CHECK_THROWS_AS(parse_expr("s[1,3]", Algebra::SP, 1), parse_error);
    CHECK_THROWS_AS(parse_expr("t[1,2]", Algebra::GL, 2), parse_error);
    CHECK_THROWS_AS(parse_expr("s[1,2]+", Algebra::SP, 1), parse_error);
    CHECK_THROWS_AS(parse_expr("(s[1,1]+s[2,2])^-1", Algebra::SP, 1), parse_error);
}

TEST_CASE("JSON round trips") {
    QScalar v(LaurentPoly::monomial(2, Rational(3, 4)) + LaurentPoly::monomial(-1, Rational(-5)),
              LaurentPoly::monomial(0, 1) + LaurentPoly::monomial(3, Rational(2, 7)));
    CHECK(qscalar_from_json(to_json(v)) == v);
    OpMatrix m(3, 2);
    m.set(0, 1, v);
    m.set(2, 0, QScalar::qdiff());
    CHECK(matrix_from_json(to_json(m)) == m);
    SPModule mod = sp2_module(3, -1);
    SPModule back = module_from_json(to_json(mod));
    CHECK(back.n == mod.n);
    CHECK(back.dim == mod.dim);
    CHECK(back.s == mod.s);
    CHECK(back.sinv == mod.sinv);
    CHECK(back.weights == mod.weights);
}

TEST_CASE("normalize command") {
    auto r = run({"normalize", "--algebra", "sp", "--n", "1", "--expr", "s[1,2]*s[1,1]"});
    CHECK(r.code == EXIT_OK);
    CHECK(r.out.find("s[1,1]*s[1,2]  q^2") != std::string::npos);
    auto r2 = run({"normalize", "--algebra", "sp", "--n", "1", "--expr",
                   "s[2,2]*s[1,1] - q^2*s[2,1]*s[1,2]"});
    CHECK(r2.out.find("q^3") != std::string::npos);
    // bad expression is a usage error
    auto r3 = run({"normalize", "--algebra", "sp", "--n", "1", "--expr", "s[9,9]"});
    CHECK(r3.code == EXIT_USAGE);
}

TEST_CASE("sp2 command prints the smallest module") {
    auto r = run({"sp2", "--m", "1", "--sigma", "1"});
    CHECK(r.code == EXIT_OK);
    CHECK(r.out.find("dim = 1") != std::string::npos);
    CHECK(r.out.find("s[1,2] = 1x1 [(1,1)=q]") != std::string::npos);
}

TEST_CASE("dims command matches the Weyl oracle") {
    auto r = run({"dims", "--n", "2", "--max-m", "2"});
    CHECK(r.code == EXIT_OK);
    CHECK(r.out.find("(1,1) -> 1 | 1") != std::string::npos);
    CHECK(r.out.find("(1,2) -> 4 | 4") != std::string::npos);
    CHECK(r.out.find("(2,2) -> 5 | 5") != std::string::npos);
    // byte-identical output across runs
    auto r2 = run({"dims", "--n", "2", "--max-m", "2"});
    CHECK(r.out == r2.out);
}

TEST_CASE("build-l refuses non-dominant weights with a distinct exit code") {
    auto r = run({"build-l", "--m", "2,1"});
    CHECK(r.code == EXIT_REFUSED);
    CHECK(r.err.find("m_1 <= m_2") != std::string::npos);
    auto ok = run({"build-l", "--m", "1,2", "--signs", "+,+"});
    CHECK(ok.code == EXIT_OK);
    CHECK(ok.out.find("dim = 4") != std::string::npos);
}

TEST_CASE("verify command distinguishes failure from usage") {
    std::string path = "test_cli_module.json";
    {
        auto r = run({"build-l", "--m", "2", "--signs", "-", "--out", path});
        REQUIRE(r.code == EXIT_OK);
    }
    auto good = run({"verify", "--module", path});
    CHECK(good.code == EXIT_OK);
    // corrupt one entry of the closed-form sp_2 module; the block relation
    // s_22 s_11 - q^2 s_21 s_12 = q^3 must be named in the report
    {
        SPModule mod = sp2_module(2, -1);
        mod.s[{1, 1}].add_to(0, 0, QScalar(5));
        std::ofstream g(path);
        g << to_json(mod).dump();
    }
    auto bad = run({"verify", "--module", path});
    CHECK(bad.code == EXIT_CHECK_FAILED);
    CHECK(bad.out.find("block") != std::string::npos);
    std::remove(path.c_str());
    auto usage = run({"verify", "--no-such-flag"});
    CHECK(usage.code == EXIT_USAGE);
}

TEST_CASE("rmatrix and gt emit JSON") {
    auto r = run({"rmatrix", "--n", "2", "--json"});
    CHECK(r.code == EXIT_OK);
    json j = json::parse(r.out);
    OpMatrix m = matrix_from_json(j);
    CHECK(m.rows() == 4);
    CHECK(m.get(1, 2) == QScalar::qdiff());
    auto g = run({"gt", "--nu", "1,0", "--gen", "t[2,1]", "--json"});
    CHECK(g.code == EXIT_OK);
    OpMatrix t21 = matrix_from_json(json::parse(g.out));
    CHECK(t21.get(0, 1) == QScalar::qdiff());
}

TEST_CASE("selftest passes") {
    auto r = run({"selftest"});
    CHECK(r.code == EXIT_OK);
    CHECK(r.out.find("seed=1") != std::string::npos);
    CHECK(r.out.find("selftest passed") != std::string::npos);
}
