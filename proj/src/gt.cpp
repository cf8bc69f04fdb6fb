#include "qsymp/gt.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qsymp {

bool GLWeight::valid() const {
    if (nu.empty()) return false;
    for (size_t i = 0; i + 1 < nu.size(); ++i)
        if (nu[i] < nu[i + 1]) return false;
    return true;
}

std::string GLWeight::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < nu.size(); ++i) os << (i ? "," : "") << nu[i];
    os << ")";
    return os.str();
}

bool GTPattern::valid() const {
    int n = N();
    for (int k = 1; k < n; ++k)
        for (int i = 1; i <= k; ++i)
            if (!(entry(k + 1, i) >= entry(k, i) && entry(k, i) >= entry(k + 1, i + 1)))
                return false;
    return true;
}

std::vector<int> GTPattern::sort_key() const {
    std::vector<int> key;
    for (const auto& row : rows_)
        for (int v : row) key.push_back(v);
    return key;
}

std::string GTPattern::str() const {
    std::ostringstream os;
    for (int k = N(); k >= 1; --k) {
        os << "(";
        for (int i = 1; i <= k; ++i) os << (i > 1 ? "," : "") << entry(k, i);
        os << ")";
        if (k > 1) os << " ";
    }
    return os.str();
}

std::vector<GTPattern> enumerate_patterns(const GLWeight& nu) {
    if (!nu.valid()) throw math_error("enumerate_patterns: weight is not weakly decreasing");
    int N = nu.N();
    std::vector<GTPattern> out;
    std::vector<std::vector<int>> rows(N);
    rows[N - 1] = nu.nu;
    // fill rows top-down; each entry ranges inside the interlacing window
    std::function<void(int)> rec = [&](int k) {
        if (k == 0) {
            std::vector<std::vector<int>> r = rows;
            out.emplace_back(std::move(r));
            return;
        }
        rows[k - 1].assign(k, 0);
        std::function<void(int)> fill = [&](int i) {
            if (i > k) {
                rec(k - 1);
                return;
            }
            int hi = rows[k][i - 1];
            int lo = rows[k][i];
            for (int v = lo; v <= hi; ++v) {
                rows[k - 1][i - 1] = v;
                fill(i + 1);
            }
        };
        fill(1);
    };
    rec(N - 1);
    std::sort(out.begin(), out.end());
    return out;
}

long long weyl_dim_gl(const GLWeight& nu) {
    if (!nu.valid()) throw math_error("weyl_dim_gl: weight is not weakly decreasing");
    int N = nu.N();
    Rational dim = 1;
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            dim *= Rational(nu.nu[i - 1] - nu.nu[j - 1] + j - i, j - i);
    if (denominator(dim) != 1) throw math_error("weyl_dim_gl: non-integer dimension");
    return numerator(dim).convert_to<long long>();
}

GLModule::GLModule(const GLWeight& nu) : nu_(nu) {
    patterns_ = enumerate_patterns(nu);
    dim_ = int(patterns_.size());
    if (dim_ != weyl_dim_gl(nu)) throw error("GT pattern count disagrees with the Weyl formula");
    for (int p = 0; p < dim_; ++p) index_[patterns_[p].sort_key()] = p;
    build_chevalley();
    build_root_vectors();
    build_rtf();
}

int GLModule::pattern_index(const GTPattern& p) const {
    auto it = index_.find(p.sort_key());
    return it == index_.end() ? -1 : it->second;
}

void GLModule::build_chevalley() {
    int N = nu_.N();
    t_.assign(N, OpMatrix(dim_, dim_));
    e_.assign(std::max(N - 1, 0), OpMatrix(dim_, dim_));
    f_.assign(std::max(N - 1, 0), OpMatrix(dim_, dim_));
    for (int p = 0; p < dim_; ++p) {
        const GTPattern& pat = patterns_[p];
        for (int k = 1; k <= N; ++k) {
            int w = 0;
            for (int i = 1; i <= k; ++i) w += pat.entry(k, i);
            for (int i = 1; i <= k - 1; ++i) w -= pat.entry(k - 1, i);
            t_[k - 1].set(p, p, QScalar::q(w));
        }
        // l_ki = nu_ki - i + 1
        for (int k = 1; k <= N - 1; ++k) {
            for (int i = 1; i <= k; ++i) {
                int lki = pat.entry(k, i) - i + 1;
                // raising: coefficient on zeta_{pattern + delta_ki}
                {
                    GTPattern up = pat;
                    up.entry(k, i) += 1;
                    if (up.valid()) {
                        QScalar num(1);
                        for (int j = 1; j <= k + 1; ++j)
                            num *= qint(pat.entry(k + 1, j) - j + 1 - lki);
                        QScalar den(1);
                        for (int j = 1; j <= k; ++j) {
                            if (j == i) continue;  // the zero factor is skipped
                            den *= qint(pat.entry(k, j) - j + 1 - lki);
                        }
                        e_[k - 1].add_to(index_.at(up.sort_key()), p, -(num / den));
                    }
                }
                // lowering: coefficient on zeta_{pattern - delta_ki}
                {
                    GTPattern down = pat;
                    down.entry(k, i) -= 1;
                    if (down.valid()) {
                        QScalar num(1);
                        for (int j = 1; j <= k - 1; ++j)
                            num *= qint(pat.entry(k - 1, j) - j + 1 - lki);
                        QScalar den(1);
                        for (int j = 1; j <= k; ++j) {
                            if (j == i) continue;
                            den *= qint(pat.entry(k, j) - j + 1 - lki);
                        }
                        f_[k - 1].add_to(index_.at(down.sort_key()), p, num / den);
                    }
                }
            }
        }
    }
}

void GLModule::build_root_vectors() {
    int N = nu_.N();
    for (int k = 1; k <= N - 1; ++k) {
        eij_[{k, k + 1}] = e_[k - 1];
        eij_[{k + 1, k}] = f_[k - 1];
    }
    QScalar q = QScalar::q();
    QScalar qinv = QScalar::q(-1);
    for (int span = 2; span <= N - 1; ++span) {
        for (int i = 1; i + span <= N; ++i) {
            int j = i + span;
            // e_ij and e_ji through every admissible intermediate index;
            // the results must coincide
            OpMatrix up, down;
            bool first = true;
            for (int k = i + 1; k <= j - 1; ++k) {
                const OpMatrix& eik = eij_.at({i, k});
                const OpMatrix& ekj = eij_.at({k, j});
                OpMatrix cand_up = eik * ekj - (ekj * eik).scaled(q);
                const OpMatrix& eki = eij_.at({k, i});
                const OpMatrix& ejk = eij_.at({j, k});
                OpMatrix cand_down = ejk * eki - (eki * ejk).scaled(qinv);
                if (first) {
                    up = cand_up;
                    down = cand_down;
                    first = false;
                } else if (cand_up != up || cand_down != down) {
                    throw error("root vector depends on the intermediate index");
                }
            }
            eij_[{i, j}] = up;
            eij_[{j, i}] = down;
        }
    }
}

void GLModule::build_rtf() {
    int N = nu_.N();
    QScalar qd = QScalar::qdiff();
    for (int i = 1; i <= N; ++i) {
        trtf_[{i, i}] = t_[i - 1];
        OpMatrix inv(dim_, dim_);
        for (const auto& [r, row] : t_[i - 1].entries())
            for (const auto& [c, v] : row) inv.set(r, c, v.inverse());
        tbrtf_[{i, i}] = inv;
    }
    for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            // e_ij = -tbar_ij t_ii / (q - q^-1)  =>  tbar_ij = -(q-q^-1) e_ij t_ii^-1
            tbrtf_[{i, j}] = (eij_.at({i, j}) * tbrtf_.at({i, i})).scaled(-qd);
            // e_ji = tbar_ii t_ji / (q - q^-1)   =>  t_ji = (q-q^-1) t_ii e_ji
            trtf_[{j, i}] = (trtf_.at({i, i}) * eij_.at({j, i})).scaled(qd);
        }
    }
}

const OpMatrix& GLModule::t(int k) const {
    if (k < 1 || k > N()) throw math_error("GLModule::t: index out of range");
    return t_[k - 1];
}

const OpMatrix& GLModule::e(int k) const {
    if (k < 1 || k > N() - 1) throw math_error("GLModule::e: index out of range");
    return e_[k - 1];
}

const OpMatrix& GLModule::f(int k) const {
    if (k < 1 || k > N() - 1) throw math_error("GLModule::f: index out of range");
    return f_[k - 1];
}

const OpMatrix& GLModule::e_root(int i, int j) const {
    auto it = eij_.find({i, j});
    if (it == eij_.end()) throw math_error("GLModule::e_root: bad index pair");
    return it->second;
}

OpMatrix GLModule::t_rtf(int i, int j) const {
    if (i < 1 || i > N() || j < 1 || j > N()) throw math_error("GLModule::t_rtf: bad indices");
    auto it = trtf_.find({i, j});
    return it == trtf_.end() ? OpMatrix(dim_, dim_) : it->second;
}

OpMatrix GLModule::tb_rtf(int i, int j) const {
    if (i < 1 || i > N() || j < 1 || j > N()) throw math_error("GLModule::tb_rtf: bad indices");
    auto it = tbrtf_.find({i, j});
    return it == tbrtf_.end() ? OpMatrix(dim_, dim_) : it->second;
}

OpMatrix eval_on_gl_module(const GLModule& mod, const LinComb& x) {
    int d = mod.dim();
    OpMatrix out(d, d);
    for (const auto& [w, c] : x.terms()) {
        OpMatrix acc = OpMatrix::identity(d);
        for (const auto& [g, e] : w.factors()) {
            if (g.kind == Kind::S) throw math_error("eval_on_gl_module: not a GL word");
            bool flip = e < 0;
            if (flip && g.i != g.j)
                throw math_error("eval_on_gl_module: negative power of non-diagonal generator");
            // t_ii^-1 = tbar_ii and vice versa
            OpMatrix step;
            if (g.kind == Kind::T)
                step = flip ? mod.tb_rtf(g.i, g.j) : mod.t_rtf(g.i, g.j);
            else
                step = flip ? mod.t_rtf(g.i, g.j) : mod.tb_rtf(g.i, g.j);
            int reps = e >= 0 ? e : -e;
            for (int t = 0; t < reps; ++t) acc = acc * step;
        }
        out = out + acc.scaled(c);
    }
    return out;
}

} // namespace qsymp
