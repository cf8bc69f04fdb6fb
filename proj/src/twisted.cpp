#include "qsymp/twisted.hpp"

#include <functional>
#include <sstream>

#include "qsymp/rewrite.hpp"

namespace qsymp {

bool HighestWeight::valid() const {
    if (m.empty() || m.size() != signs.size()) return false;
    for (int v : m)
        if (v < 1) return false;
    for (int s : signs)
        if (s != 1 && s != -1) return false;
    return true;
}

bool HighestWeight::dominant() const {
    for (size_t k = 0; k + 1 < m.size(); ++k)
        if (m[k] > m[k + 1]) return false;
    return true;
}

std::string HighestWeight::violated_inequality() const {
    for (size_t k = 0; k + 1 < m.size(); ++k)
        if (m[k] > m[k + 1]) {
            std::ostringstream os;
            os << "m_" << k + 1 << " <= m_" << k + 2 << " fails (" << m[k] << " > " << m[k + 1]
               << ")";
            return os.str();
        }
    return "";
}

std::string HighestWeight::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < m.size(); ++k)
        os << (k ? "," : "") << (signs[k] < 0 ? "-" : "+") << "q^" << m[k];
    os << ")";
    return os.str();
}

const OpMatrix& SPModule::gen(int i, int j) const {
    auto it = s.find({i, j});
    if (it == s.end()) throw math_error("SPModule::gen: generator outside support");
    return it->second;
}

OpMatrix SPModule::gen_or_zero(int i, int j) const {
    auto it = s.find({i, j});
    return it == s.end() ? OpMatrix(dim, dim) : it->second;
}

std::map<std::pair<int, int>, OpMatrix> embed_S(const GLModule& mod) {
    int N = mod.N();
    if (N % 2 != 0) throw math_error("embed_S: N must be even");
    int n = N / 2;
    int d = mod.dim();
    QScalar q = QScalar::q();
    std::map<std::pair<int, int>, OpMatrix> out;
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            OpMatrix m(d, d);
            for (int k = 1; k <= n; ++k) {
                m = m + (mod.t_rtf(i, 2 * k - 1) * mod.tb_rtf(j, 2 * k)).scaled(q);
                m = m - mod.t_rtf(i, 2 * k) * mod.tb_rtf(j, 2 * k - 1);
            }
            if (sp_support(n, i, j)) {
                out.emplace(std::make_pair(i, j), std::move(m));
            } else if (!m.is_zero()) {
                throw error("embed_S: block-triangular support violated");
            }
        }
    }
    return out;
}

GLWeight omega0_glweight(const HighestWeight& hw) {
    if (!hw.valid()) throw math_error("invalid highest weight");
    if (!hw.dominant())
        throw math_error("non-dominant highest weight: " + hw.violated_inequality());
    int n = hw.n();
    std::vector<int> nu(2 * n, 0);
    for (int k = 0; k < n; ++k) nu[k] = hw.m[n - 1 - k] - 1;  // (r_n, ..., r_1, 0, ..., 0)
    return GLWeight{nu};
}

GTPattern omega0_pattern(const HighestWeight& hw) {
    GLWeight nu = omega0_glweight(hw);
    int n = hw.n();
    std::vector<std::vector<int>> rows(2 * n);
    for (int k = 1; k <= n; ++k) {
        std::vector<int> base;  // (r_k, ..., r_1)
        for (int t = k; t >= 1; --t) base.push_back(hw.m[t - 1] - 1);
        std::vector<int> odd = base, even = base;
        odd.insert(odd.end(), k - 1, 0);
        even.insert(even.end(), k, 0);
        rows[2 * k - 2] = std::move(odd);   // row 2k-1 from the bottom
        rows[2 * k - 1] = std::move(even);  // row 2k
    }
    GTPattern p(std::move(rows));
    if (!p.valid()) throw error("omega0_pattern produced an invalid pattern");
    return p;
}

namespace {

// Joint eigenvalue multiplicities of the Cartan family s_{2k-1,2k}.
std::map<std::vector<int>, int> weight_table(const SPModule& mod,
                                             const std::vector<std::vector<int>>& candidates) {
    int n = mod.n, d = mod.dim;
    std::map<std::vector<int>, int> table;
    int total = 0;
    for (const auto& a : candidates) {
        if (table.count(a)) continue;
        OpMatrix stacked(n * d, d);
        for (int k = 0; k < n; ++k) {
            QScalar mu = QScalar(mod.signs.empty() ? 1 : mod.signs[k]) * QScalar::q(a[k]);
            OpMatrix diff = mod.gen(2 * k + 1, 2 * k + 2) - OpMatrix::identity(d).scaled(mu);
            for (const auto& [r, row] : diff.entries())
                for (const auto& [c, v] : row) stacked.set(k * d + r, c, v);
        }
        int mult = d - rank_symbolic(stacked);
        if (mult > 0) {
            table[a] = mult;
            total += mult;
        }
    }
    if (total != d) throw error("weight multiplicities do not fill the module");
    return table;
}

} // namespace

SPModule build_L(const HighestWeight& hw) {
    if (!hw.valid()) throw math_error("build_L: invalid highest weight");
    if (!hw.dominant())
        throw math_error("build_L: L(lambda) is infinite-dimensional, " +
                         hw.violated_inequality());
    int n = hw.n();
    GLModule glmod(omega0_glweight(hw));
    auto S = embed_S(glmod);
    GTPattern om0 = omega0_pattern(hw);
    int p0 = glmod.pattern_index(om0);
    if (p0 < 0) throw error("build_L: Omega^0 not found among the patterns");
    int D = glmod.dim();

    // cyclic span of zeta_{Omega^0}, closed by exact rank growth
    RowSpace span(D);
    std::vector<QScalar> e0(D);
    e0[p0] = QScalar(1);
    span.add(e0);
    std::vector<std::vector<QScalar>> frontier{e0};
    while (!frontier.empty()) {
        std::vector<std::vector<QScalar>> next;
        for (const auto& v : frontier)
            for (const auto& [ij, M] : S) {
                std::vector<QScalar> w = M.apply(v);
                if (span.add(w)) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    int d = span.rank();

    SPModule mod;
    mod.n = n;
    mod.dim = d;
    mod.m = hw.m;
    mod.signs = hw.signs;
    auto sign_of = [&](int i) { return i % 2 == 1 ? hw.signs[(i - 1) / 2] : 1; };
    for (const auto& [ij, M] : S) {
        OpMatrix restr(d, d);
        for (int t = 0; t < d; ++t) {
            auto c = span.coords(M.apply(span.basis()[t]));
            if (!c) throw error("build_L: span is not invariant");
            for (int u = 0; u < d; ++u) restr.set(u, t, (*c)[u]);
        }
        int twist = sign_of(ij.first) * sign_of(ij.second);
        mod.s.emplace(ij, twist == 1 ? std::move(restr) : restr.scaled(QScalar(-1)));
    }
    for (int k = 0; k < n; ++k)
        mod.sinv.emplace(2 * k + 1, inverse(mod.gen(2 * k + 1, 2 * k + 2)));

    // highest weight conditions on the image of zeta_{Omega^0}
    auto c0 = span.coords(e0);
    if (!c0) throw error("build_L: lost the highest vector");
    for (int i = 1; i <= 2 * n; i += 2)
        for (int j = 1; j <= i; ++j) {
            auto v = mod.gen(i, j).apply(*c0);
            for (const auto& x : v)
                if (!x.is_zero()) throw error("build_L: highest vector is not singular");
        }
    for (int k = 0; k < n; ++k) {
        QScalar lam = QScalar(hw.signs[k]) * QScalar::q(hw.m[k]);
        auto v = mod.gen(2 * k + 1, 2 * k + 2).apply(*c0);
        for (int u = 0; u < d; ++u)
            if (v[u] != (*c0)[u] * lam)
                throw error("build_L: wrong Cartan eigenvalue on the highest vector");
    }

    // candidate weights from the Gelfand-Tsetlin grading
    std::vector<std::vector<int>> candidates;
    for (const auto& pat : glmod.patterns()) {
        std::vector<int> a(n);
        for (int k = 1; k <= n; ++k) {
            auto wsum = [&](int row) {
                int s = 0;
                for (int i = 1; i <= row; ++i) s += pat.entry(row, i);
                for (int i = 1; i <= row - 1; ++i) s -= pat.entry(row - 1, i);
                return s;
            };
            a[k - 1] = 1 + wsum(2 * k - 1) - wsum(2 * k);
        }
        candidates.push_back(std::move(a));
    }
    mod.weights = weight_table(mod, candidates);
    mod.highest = *c0;
    return mod;
}

SPModule sp2_module(int m, int sigma) {
    if (m < 1) throw math_error("sp2_module: m must be a positive integer");
    if (sigma != 1 && sigma != -1) throw math_error("sp2_module: sigma must be +1 or -1");
    SPModule mod;
    mod.n = 1;
    mod.dim = m;
    mod.m = {m};
    mod.signs = {sigma};
    OpMatrix s12(m, m), s22(m, m), s11(m, m), sinv(m, m);
    QScalar sg(sigma);
    for (int k = 0; k < m; ++k) {
        s12.set(k, k, sg * QScalar::q(m - 2 * k));
        sinv.set(k, k, sg * QScalar::q(2 * k - m));
        if (k + 1 < m) s22.set(k + 1, k, QScalar(1));
        if (k >= 1) {
            QScalar c = QScalar::q(3) * (QScalar(1) - QScalar::q(2 * m - 2 * k)) *
                        (QScalar(1) - QScalar::q(-2 * k));
            s11.set(k - 1, k, c);
        }
        mod.weights[{m - 2 * k}] = 1;
    }
    mod.highest.assign(m, QScalar());
    mod.highest[0] = QScalar(1);
    OpMatrix s21 = (s22 * s11 - OpMatrix::identity(m).scaled(QScalar::q(3))).scaled(QScalar::q(-2)) * sinv;
    mod.s.emplace(std::make_pair(1, 1), std::move(s11));
    mod.s.emplace(std::make_pair(1, 2), std::move(s12));
    mod.s.emplace(std::make_pair(2, 1), std::move(s21));
    mod.s.emplace(std::make_pair(2, 2), std::move(s22));
    mod.sinv.emplace(1, std::move(sinv));
    return mod;
}

std::map<std::vector<int>, long long> verma_truncated(const HighestWeight& hw, int d) {
    if (!hw.valid()) throw math_error("verma_truncated: invalid highest weight");
    if (d < 0) throw math_error("verma_truncated: negative degree cap");
    int n = hw.n();
    // PBW lowering generators: s_{ij} for even i with j in {1..i-2, i}
    std::vector<Word> gens;
    for (int i = 2; i <= 2 * n; i += 2) {
        for (int j = 1; j <= i - 2; ++j) gens.emplace_back(gen_s(i, j));
        gens.emplace_back(gen_s(i, i));
    }
    std::map<std::vector<int>, long long> table;
    std::vector<int> omega(n, 0);
    std::function<void(size_t, int)> rec = [&](size_t idx, int used) {
        if (idx == gens.size()) {
            table[omega] += 1;
            return;
        }
        std::vector<int> w = weight_of_word(gens[idx], n);
        for (int k = 0; used + k <= d; ++k) {
            if (k > 0)
                for (int t = 0; t < n; ++t) omega[t] -= w[t];  // mu = q^{-omega} lambda
            rec(idx + 1, used + k);
        }
        int kmax = d - used;
        for (int t = 0; t < n; ++t) omega[t] += kmax * w[t];
    };
    rec(0, 0);
    return table;
}

OpMatrix eval_on_module(const SPModule& mod, const LinComb& x) {
    OpMatrix out(mod.dim, mod.dim);
    for (const auto& [w, c] : x.terms()) {
        OpMatrix acc = OpMatrix::identity(mod.dim);
        for (const auto& [g, e] : w.factors()) {
            if (g.kind != Kind::S || !sp_support(mod.n, g.i, g.j))
                throw math_error("eval_on_module: not a valid SP word");
            const OpMatrix* step;
            if (e >= 0) {
                step = &mod.gen(g.i, g.j);
            } else {
                auto it = mod.sinv.find(g.i);
                if (!sp_cartan(g.i, g.j) || it == mod.sinv.end())
                    throw math_error("eval_on_module: negative power without a stored inverse");
                step = &it->second;
            }
            int reps = e >= 0 ? e : -e;
            for (int t = 0; t < reps; ++t) acc = acc * *step;
        }
        out = out + acc.scaled(c);
    }
    return out;
}

namespace {

int dd(int a, int b) { return a == b ? 1 : 0; }
int ltt(int a, int b) { return a < b ? 1 : 0; }
int ltt3(int a, int b, int c) { return (a < b && b < c) ? 1 : 0; }

std::string residual_detail(const OpMatrix& r) {
    Rational q0(3, 7);
    Rational worst = 0;
    try {
        for (const auto& [i, row] : r.entries())
            for (const auto& [j, v] : row) {
                Rational x = v.eval_at(q0);
                if (x < 0) x = -x;
                if (x > worst) worst = x;
            }
    } catch (const math_error&) {
        return "nonzero residual (pole at the sample point)";
    }
    std::ostringstream os;
    os << "max |entry| at q=3/7 is " << worst.convert_to<double>();
    return os.str();
}

} // namespace

std::vector<RelationFailure> verify_module(const SPModule& mod) {
    std::vector<RelationFailure> failures;
    int N = 2 * mod.n;
    int d = mod.dim;
    QScalar qd = QScalar::qdiff();
    auto S = [&](int i, int j) { return mod.gen_or_zero(i, j); };
    // quadratic exchange relations, all index quadruples
    for (int i = 1; i <= N; ++i)
        for (int a = 1; a <= N; ++a)
            for (int j = 1; j <= N; ++j)
                for (int b = 1; b <= N; ++b) {
                    OpMatrix res = (S(i, a) * S(j, b)).scaled(QScalar::q(dd(a, j) + dd(i, j))) -
                                   (S(j, b) * S(i, a)).scaled(QScalar::q(dd(a, b) + dd(i, b)));
                    int c1 = ltt(b, a) - ltt(i, j);
                    if (c1 != 0)
                        res = res - (S(j, a) * S(i, b)).scaled(qd * QScalar::q(dd(a, i)) * QScalar(c1));
                    if (ltt(b, i))
                        res = res - (S(j, i) * S(b, a)).scaled(qd * QScalar::q(dd(a, b)));
                    if (ltt(a, j))
                        res = res + (S(i, j) * S(a, b)).scaled(qd * QScalar::q(dd(i, j)));
                    int c2 = ltt3(b, a, i) - ltt3(a, i, j);
                    if (c2 != 0) res = res - (S(j, i) * S(a, b)).scaled(qd * qd * QScalar(c2));
                    if (!res.is_zero())
                        failures.push_back({"exchange", {i, a, j, b}, residual_detail(res)});
                }
    // inverses and the block determinant relation (central elements = q^3)
    for (int i = 1; i <= N; i += 2) {
        auto inv = mod.sinv.find(i);
        if (inv == mod.sinv.end()) {
            failures.push_back({"inverse", {i}, "s_{i,i+1}^{-1} missing"});
        } else {
            OpMatrix a = S(i, i + 1) * inv->second - OpMatrix::identity(d);
            OpMatrix b = inv->second * S(i, i + 1) - OpMatrix::identity(d);
            if (!a.is_zero()) failures.push_back({"inverse", {i}, residual_detail(a)});
            if (!b.is_zero()) failures.push_back({"inverse", {i}, residual_detail(b)});
        }
        OpMatrix block = S(i + 1, i + 1) * S(i, i) - (S(i + 1, i) * S(i, i + 1)).scaled(QScalar::q(2)) -
                         OpMatrix::identity(d).scaled(QScalar::q(3));
        if (!block.is_zero()) failures.push_back({"block", {i}, residual_detail(block)});
    }
    return failures;
}

} // namespace qsymp
