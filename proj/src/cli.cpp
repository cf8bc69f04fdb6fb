#include "qsymp/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <random>
#include <sstream>

#include "qsymp/expr.hpp"
#include "qsymp/json_io.hpp"
#include "qsymp/rewrite.hpp"
#include "qsymp/tensor.hpp"
#include "qsymp/twisted.hpp"
#include "qsymp/weyl.hpp"

namespace qsymp {

namespace {

std::vector<int> parse_int_csv(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw parse_error("empty entry in list: " + s);
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw parse_error("empty list");
    return out;
}

std::vector<int> parse_signs_csv(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "+" || item == "+1" || item == "1")
            out.push_back(1);
        else if (item == "-" || item == "-1")
            out.push_back(-1);
        else
            throw parse_error("sign must be + or -, got: " + item);
    }
    if (out.empty()) throw parse_error("empty sign list");
    return out;
}

void emit(const json& j, const std::string& out_path, bool as_json, std::ostream& out) {
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw error("cannot open output file " + out_path);
        f << j.dump(1) << "\n";
        out << "wrote " << out_path << "\n";
    } else if (as_json) {
        out << j.dump(1) << "\n";
    }
}

std::string weight_str(const std::vector<int>& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
}

void print_module(const SPModule& mod, std::ostream& out) {
    out << "n = " << mod.n << ", dim = " << mod.dim << "\n";
    if (!mod.m.empty()) {
        out << "highest weight: ";
        for (size_t k = 0; k < mod.m.size(); ++k)
            out << (k ? ", " : "") << (mod.signs[k] < 0 ? "-" : "+") << "q^" << mod.m[k];
        out << "\n";
    }
    if (!mod.weights.empty()) {
        out << "weights (exponent vector -> multiplicity):\n";
        for (const auto& [a, mult] : mod.weights)
            out << "  " << weight_str(a) << " -> " << mult << "\n";
    }
    for (const auto& [ij, m] : mod.s)
        out << "s[" << ij.first << "," << ij.second << "] = " << m.str() << "\n";
}

int report_verify(const std::vector<RelationFailure>& failures, bool as_json, std::ostream& out) {
    if (as_json) {
        json j = json::array();
        for (const auto& f : failures)
            j.push_back({{"relation", f.relation}, {"indices", f.indices}, {"detail", f.detail}});
        out << json{{"failures", j}}.dump(1) << "\n";
    } else if (failures.empty()) {
        out << "all defining relations hold exactly\n";
    } else {
        for (const auto& f : failures) {
            out << "FAIL " << f.relation << " at (";
            for (size_t t = 0; t < f.indices.size(); ++t)
                out << (t ? "," : "") << f.indices[t];
            out << "): " << f.detail << "\n";
        }
    }
    return failures.empty() ? EXIT_OK : EXIT_CHECK_FAILED;
}

// --------------------------------------------------------------------------
// selftest: the invariant suite at desk scale
// --------------------------------------------------------------------------

struct SelfTest {
    std::ostream& out;
    unsigned seed;
    int failures = 0;

    void check(const std::string& name, bool ok) {
        out << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    }

    QScalar random_scalar(std::mt19937& rng) {
        std::uniform_int_distribution<int> exp(-3, 3), coeff(-4, 4);
        LaurentPoly num, den;
        for (int t = 0; t < 3; ++t) num.set_coeff(exp(rng), num.coeff(exp(rng)) + coeff(rng));
        den.set_coeff(exp(rng), 1);
        if (num.is_zero()) num = LaurentPoly::one();
        return QScalar(num, den);
    }

    Word random_sp_word(std::mt19937& rng, int n, int len) {
        std::vector<std::pair<int, int>> support;
        for (int i = 1; i <= 2 * n; ++i)
            for (int j = 1; j <= 2 * n; ++j)
                if (sp_support(n, i, j)) support.emplace_back(i, j);
        std::uniform_int_distribution<size_t> pick(0, support.size() - 1);
        std::uniform_int_distribution<int> ex(0, 2);
        std::vector<std::pair<Generator, int>> factors;
        for (int t = 0; t < len; ++t) {
            auto [i, j] = support[pick(rng)];
            int exps[3] = {-1, 1, 2};
            int e = exps[ex(rng)];
            if (e < 0 && !sp_cartan(i, j)) e = 1;
            factors.emplace_back(gen_s(i, j), e);
        }
        return Word(factors);
    }

    void run() {
        std::mt19937 rng(seed);
        {
            bool ok = true;
            for (int t = 0; t < 20 && ok; ++t) {
                QScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
                ok = ((a + b) + c == a + (b + c)) && (a * (b + c) == a * b + a * c) &&
                     (a * b == b * a);
                if (!a.is_zero()) ok = ok && (a * a.inverse()).is_one();
            }
            check("field axioms on random rational functions", ok);
        }
        {
            bool ok = true;
            for (int m = -20; m <= 20 && ok; ++m)
                ok = qint(m) * QScalar::qdiff() == QScalar::q(m) - QScalar::q(-m);
            check("[m](q-q^-1) = q^m - q^-m for |m| <= 20", ok);
        }
        {
            bool ok = true;
            for (int N = 2; N <= 3; ++N) ok = ok && check_yang_baxter(build_R(N), N).is_zero();
            check("Yang-Baxter equation for R, N in {2,3}", ok);
        }
        {
            bool ok = true;
            for (int m = 1; m <= 4 && ok; ++m)
                for (int sg : {1, -1})
                    ok = ok && verify_module(sp2_module(m, sg)).empty();
            check("closed-form sp_2 modules satisfy the relations", ok);
        }
        {
            HighestWeight hw{{1, 2}, {1, 1}};
            SPModule L = build_L(hw);
            bool ok = L.dim == weyl_dim_sp({1, 0}) && verify_module(L).empty();
            check("L(q,q^2) has the classical dimension and passes verification", ok);
        }
        {
            GLModule glm(GLWeight{{1, 0}});
            auto S = embed_S(glm);
            OpMatrix res = check_reflection(build_R(2), build_Rprime(2), S, 2, glm.dim());
            check("reflection equation on the embedded generators (n=1)", res.is_zero());
        }
        {
            bool ok = true;
            SPModule L = build_L(HighestWeight{{1, 2}, {1, 1}});
            for (int t = 0; t < 40 && ok; ++t) {
                int n = 1 + int(rng() % 2);
                Word w = random_sp_word(rng, n, 1 + int(rng() % 4));
                LinComb x(w);
                LinComb nf = normalize_sp(x, n);
                ok = normalize_sp(nf, n) == nf;
                ok = ok && normalize_sp(x, n, {Strategy::Rightmost, 0}) == nf;
                if (ok && n == 2)
                    ok = eval_on_module(L, x) == eval_on_module(L, nf);
            }
            check("rewriter: idempotent, strategy-independent, representation-consistent", ok);
        }
        {
            HighestWeight hw{{1, 1}, {1, 1}};
            auto table = verma_truncated(hw, 3);
            auto oracle = kostant_counts(2, 3);
            check("Verma multiplicities match the truncated Kostant count (n=2, d=3)",
                  table == oracle);
        }
        {
            LinComb lhs = parse_expr("s[1,2]*s[1,1]", Algebra::SP, 1);
            LinComb rhs = parse_expr("q^2", Algebra::SP, 1) * parse_expr("s[1,1]*s[1,2]", Algebra::SP, 1);
            check("s_12 s_11 = q^2 s_11 s_12 after normalization",
                  normalize_sp(lhs, 1) == normalize_sp(rhs, 1));
        }
    }
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qsymp: exact computations in U_q(gl_2n) and its twisted coideal of type C"};
    app.require_subcommand(1);
    unsigned seed = 1;
    app.add_option("--seed", seed, "random seed for generic-point rank checks (default 1)");

    // normalize
    auto* cmd_norm = app.add_subcommand("normalize", "reduce an expression to the ordered basis");
    std::string alg_str = "sp", expr_str, strategy_str = "leftmost";
    int rank_n = 1;
    bool as_json = false;
    cmd_norm->add_option("--algebra", alg_str, "sp or gl")->check(CLI::IsMember({"sp", "gl"}));
    cmd_norm->add_option("--n", rank_n, "rank n (sp) or size N (gl)")->required();
    cmd_norm->add_option("--expr", expr_str, "expression to normalize")->required();
    cmd_norm->add_option("--strategy", strategy_str, "rule application order")
        ->check(CLI::IsMember({"leftmost", "rightmost"}));
    cmd_norm->add_flag("--json", as_json, "emit JSON");

    // rmatrix
    auto* cmd_rm = app.add_subcommand("rmatrix", "build the R-matrix (or its leg-1 transpose)");
    int rm_n = 2;
    bool rm_prime = false;
    std::string rm_out;
    bool rm_json = false;
    cmd_rm->add_option("--n", rm_n, "dimension N")->required();
    cmd_rm->add_flag("--prime", rm_prime, "build R' instead of R");
    cmd_rm->add_option("--out", rm_out, "output JSON file");
    cmd_rm->add_flag("--json", rm_json, "emit JSON on stdout");

    // gt
    auto* cmd_gt = app.add_subcommand("gt", "Gelfand-Tsetlin module of U_q(gl_N)");
    std::string gt_nu, gt_gen, gt_out;
    bool gt_json = false;
    cmd_gt->add_option("--nu", gt_nu, "weakly decreasing weight, e.g. 1,0,0,0")->required();
    cmd_gt->add_option("--gen", gt_gen, "single generator to print, e.g. t[2,1] or e1");
    cmd_gt->add_option("--out", gt_out, "output JSON file");
    cmd_gt->add_flag("--json", gt_json, "emit JSON on stdout");

    // build-l
    auto* cmd_bl = app.add_subcommand("build-l", "irreducible module L(lambda) of U'_q(sp_2n)");
    std::string bl_m, bl_signs, bl_out;
    bool bl_json = false;
    cmd_bl->add_option("--m", bl_m, "positive integers m_1,...,m_n")->required();
    cmd_bl->add_option("--signs", bl_signs, "signs, e.g. +,-");
    cmd_bl->add_option("--out", bl_out, "output JSON file");
    cmd_bl->add_flag("--json", bl_json, "emit JSON on stdout");

    // sp2
    auto* cmd_sp2 = app.add_subcommand("sp2", "closed-form U'_q(sp_2) module");
    int sp2_m = 1, sp2_sigma = 1;
    std::string sp2_out;
    bool sp2_json = false;
    cmd_sp2->add_option("--m", sp2_m, "dimension m >= 1")->required();
    cmd_sp2->add_option("--sigma", sp2_sigma, "+1 or -1");
    cmd_sp2->add_option("--out", sp2_out, "output JSON file");
    cmd_sp2->add_flag("--json", sp2_json, "emit JSON on stdout");

    // verma
    auto* cmd_vm = app.add_subcommand("verma", "truncated Verma weight multiplicities");
    std::string vm_m;
    int vm_deg = 0;
    bool vm_json = false;
    cmd_vm->add_option("--m", vm_m, "m_1,...,m_n (fixes the rank)")->required();
    cmd_vm->add_option("--degree", vm_deg, "degree cap d >= 0")->required();
    cmd_vm->add_flag("--json", vm_json, "emit JSON");

    // verify
    auto* cmd_vf = app.add_subcommand("verify", "check the defining relations on a stored module");
    std::string vf_file;
    bool vf_json = false;
    cmd_vf->add_option("--module", vf_file, "module JSON file")->required();
    cmd_vf->add_flag("--json", vf_json, "emit JSON");

    // dims
    auto* cmd_dims = app.add_subcommand("dims", "dimension table of L(lambda) vs the Weyl formula");
    int dims_n = 2, dims_max = 2;
    bool dims_json = false;
    cmd_dims->add_option("--n", dims_n, "rank")->required();
    cmd_dims->add_option("--max-m", dims_max, "largest m_i")->required();
    cmd_dims->add_flag("--json", dims_json, "emit JSON");

    // selftest
    auto* cmd_st = app.add_subcommand("selftest", "run the invariant suite at desk scale");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return EXIT_OK;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return EXIT_USAGE;
    }

    try {
        if (cmd_norm->parsed()) {
            Algebra alg = alg_str == "sp" ? Algebra::SP : Algebra::GL;
            RewriteOptions opts;
            opts.strategy = strategy_str == "leftmost" ? Strategy::Leftmost : Strategy::Rightmost;
            LinComb x = parse_expr(expr_str, alg, rank_n);
            LinComb nf = alg == Algebra::SP ? normalize_sp(x, rank_n, opts)
                                            : normalize_gl(x, rank_n, opts);
            if (as_json) {
                json terms = json::array();
                for (const auto& [w, c] : nf.terms())
                    terms.push_back(json::array({w.str(), to_json(c)}));
                out << json{{"seed", seed}, {"terms", terms}}.dump(1) << "\n";
            } else {
                out << "# qsymp normalize seed=" << seed << "\n";
                if (nf.is_zero()) out << "0\n";
                for (const auto& [w, c] : nf.terms())
                    out << w.str() << "  " << c.str() << "\n";
            }
            return EXIT_OK;
        }
        if (cmd_rm->parsed()) {
            OpMatrix m = rm_prime ? build_Rprime(rm_n) : build_R(rm_n);
            if (!rm_json && rm_out.empty())
                out << "# qsymp rmatrix seed=" << seed << "\n"
                    << (rm_prime ? "R' " : "R ") << m.str() << "\n";
            emit(to_json(m), rm_out, rm_json, out);
            return EXIT_OK;
        }
        if (cmd_gt->parsed()) {
            GLModule mod(GLWeight{parse_int_csv(gt_nu)});
            if (!gt_gen.empty()) {
                OpMatrix m(0, 0);
                int i, j;
                if (std::sscanf(gt_gen.c_str(), "t[%d,%d]", &i, &j) == 2)
                    m = mod.t_rtf(i, j);
                else if (std::sscanf(gt_gen.c_str(), "tb[%d,%d]", &i, &j) == 2)
                    m = mod.tb_rtf(i, j);
                else if (std::sscanf(gt_gen.c_str(), "e[%d,%d]", &i, &j) == 2)
                    m = mod.e_root(i, j);
                else if (std::sscanf(gt_gen.c_str(), "t%d", &i) == 1)
                    m = mod.t(i);
                else if (std::sscanf(gt_gen.c_str(), "e%d", &i) == 1)
                    m = mod.e(i);
                else if (std::sscanf(gt_gen.c_str(), "f%d", &i) == 1)
                    m = mod.f(i);
                else
                    throw parse_error("unrecognized generator name " + gt_gen);
                if (!gt_json && gt_out.empty())
                    out << "# qsymp gt seed=" << seed << "\n"
                        << gt_gen << " on V" << mod.weight().str() << " = " << m.str() << "\n";
                emit(to_json(m), gt_out, gt_json, out);
            } else {
                if (!gt_json && gt_out.empty())
                    out << "# qsymp gt seed=" << seed << "\nV" << mod.weight().str()
                        << ": dim = " << mod.dim() << ", patterns = " << mod.patterns().size()
                        << "\n";
                emit(gl_manifest(mod), gt_out, gt_json, out);
            }
            return EXIT_OK;
        }
        if (cmd_bl->parsed()) {
            std::vector<int> m = parse_int_csv(bl_m);
            std::vector<int> signs(m.size(), 1);
            if (!bl_signs.empty()) signs = parse_signs_csv(bl_signs);
            if (signs.size() != m.size()) throw parse_error("--signs length differs from --m");
            HighestWeight hw{m, signs};
            if (!hw.valid()) throw math_error("m_i must be positive integers, signs +-1");
            if (!hw.dominant()) {
                err << "refused: L(lambda) is infinite-dimensional, "
                    << hw.violated_inequality() << "\n";
                return EXIT_REFUSED;
            }
            SPModule L = build_L(hw);
            if (!bl_json && bl_out.empty()) {
                out << "# qsymp build-l seed=" << seed << "\n";
                print_module(L, out);
            }
            emit(to_json(L), bl_out, bl_json, out);
            return EXIT_OK;
        }
        if (cmd_sp2->parsed()) {
            SPModule mod = sp2_module(sp2_m, sp2_sigma);
            if (!sp2_json && sp2_out.empty()) {
                out << "# qsymp sp2 seed=" << seed << "\n";
                print_module(mod, out);
            }
            emit(to_json(mod), sp2_out, sp2_json, out);
            return report_verify(verify_module(mod), false, out);
        }
        if (cmd_vm->parsed()) {
            std::vector<int> m = parse_int_csv(vm_m);
            HighestWeight hw{m, std::vector<int>(m.size(), 1)};
            auto table = verma_truncated(hw, vm_deg);
            if (vm_json) {
                json rows = json::array();
                for (const auto& [omega, mult] : table)
                    rows.push_back(json::array({omega, mult}));
                out << json{{"seed", seed}, {"table", rows}}.dump(1) << "\n";
            } else {
                out << "# qsymp verma seed=" << seed << "\n";
                out << "omega -> dim M(lambda)_{q^-omega lambda}, degree <= " << vm_deg << "\n";
                for (const auto& [omega, mult] : table)
                    out << "  " << weight_str(omega) << " -> " << mult << "\n";
            }
            return EXIT_OK;
        }
        if (cmd_vf->parsed()) {
            std::ifstream f(vf_file);
            if (!f) throw error("cannot open " + vf_file);
            json j = json::parse(f);
            SPModule mod = module_from_json(j);
            if (!vf_json) out << "# qsymp verify seed=" << seed << "\n";
            return report_verify(verify_module(mod), vf_json, out);
        }
        if (cmd_dims->parsed()) {
            std::vector<std::vector<int>> tuples;
            std::vector<int> cur(dims_n, 1);
            std::function<void(int, int)> gen = [&](int pos, int lo) {
                if (pos == dims_n) {
                    tuples.push_back(cur);
                    return;
                }
                for (int v = lo; v <= dims_max; ++v) {
                    cur[pos] = v;
                    gen(pos + 1, v);
                }
            };
            gen(0, 1);
            bool all_ok = true;
            json rows = json::array();
            if (!dims_json) {
                out << "# qsymp dims seed=" << seed << "\n";
                out << "m -> dim L(lambda) | Weyl formula\n";
            }
            for (const auto& m : tuples) {
                HighestWeight hw{m, std::vector<int>(m.size(), 1)};
                SPModule L = build_L(hw);
                std::vector<int> rdesc(dims_n);
                for (int k = 0; k < dims_n; ++k) rdesc[k] = m[dims_n - 1 - k] - 1;
                long long wd = weyl_dim_sp(rdesc);
                bool ok = L.dim == wd;
                all_ok = all_ok && ok;
                if (dims_json)
                    rows.push_back(json::array({m, L.dim, wd}));
                else
                    out << "  " << weight_str(m) << " -> " << L.dim << " | " << wd
                        << (ok ? "" : "  MISMATCH") << "\n";
            }
            if (dims_json) out << json{{"seed", seed}, {"table", rows}}.dump(1) << "\n";
            return all_ok ? EXIT_OK : EXIT_CHECK_FAILED;
        }
        if (cmd_st->parsed()) {
            out << "# qsymp selftest seed=" << seed << "\n";
            SelfTest st{out, seed};
            st.run();
            out << (st.failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
            return st.failures == 0 ? EXIT_OK : EXIT_CHECK_FAILED;
        }
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const math_error& e) {
        err << "refused: " << e.what() << "\n";
        return EXIT_REFUSED;
    } catch (const error& e) {
        err << "internal error: " << e.what() << "\n";
        return EXIT_INTERNAL;
    }
    return EXIT_USAGE;
}

} // namespace qsymp
