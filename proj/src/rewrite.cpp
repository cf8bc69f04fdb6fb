#include "qsymp/rewrite.hpp"

#include <cstdlib>
#include <deque>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace qsymp {

long long default_step_budget() {
    if (const char* env = std::getenv("QSYMP_STEP_BUDGET")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return 1'000'000;
}

namespace {

int d(int a, int b) { return a == b ? 1 : 0; }
int lt(int a, int b) { return a < b ? 1 : 0; }
int lt3(int a, int b, int c) { return (a < b && b < c) ? 1 : 0; }

QScalar qpow(int k) { return QScalar::q(k); }

// ---------------------------------------------------------------------------
// U'_q(sp_2n) rewriting
// ---------------------------------------------------------------------------

using Letter = std::pair<int, int>;  // (row, col)

struct RawLetter {
    int row, col, exp;
};

// Conjugation weight of s_{row,col} with respect to the block Cartan
// s_{2k+1,2k+2} (k is 0-based): s_C g = q^w g s_C.
int sp_cartan_weight(int k, int row, int col) {
    int i = 2 * k + 1;
    return d(i, row) + d(i, col) - d(i + 1, row) - d(i + 1, col);
}

// Sort key realizing the target basis: even rows descending, then odd rows
// ascending, columns ascending inside a row.
std::tuple<int, int, int> sp_key(int n, const Letter& g) {
    if (g.first % 2 == 0) return {0, (2 * n - g.first) / 2, g.second};
    return {1, (g.first - 1) / 2, g.second};
}

struct SpTerm {
    std::vector<Letter> core;
    std::vector<int> cartan;  // exponent of s_{2k+1,2k+2} per block, far right
    QScalar coeff;
};

using SpKey = std::pair<std::vector<Letter>, std::vector<int>>;

struct SpEngine {
    int n;
    Strategy strategy;
    long long budget;
    long long steps = 0;
    std::map<SpKey, QScalar> done;
    // pending terms keyed by (core, cartan); coefficients of identical
    // intermediate words merge, which keeps the term count small
    std::map<SpKey, QScalar> pending;

    void spend() {
        if (++steps > budget)
            throw budget_error("normalize_sp exceeded the step budget (QSYMP_STEP_BUDGET)");
    }

    void push_term(SpTerm&& t) {
        if (t.coeff.is_zero()) return;
        SpKey key{std::move(t.core), std::move(t.cartan)};
        auto it = pending.find(key);
        if (it == pending.end())
            pending.emplace(std::move(key), std::move(t.coeff));
        else {
            it->second += t.coeff;
            if (it->second.is_zero()) pending.erase(it);
        }
    }

    bool is_zero_letter(int row, int col) const {
        if (row < 1 || row > 2 * n || col < 1 || col > 2 * n) return true;
        return col > row + 1 || (col == row + 1 && row % 2 == 0);
    }

    // Extracts Cartan letters to the far right with exact q-power
    // bookkeeping; returns false when the word contains a zero generator.
    bool clean(const std::vector<RawLetter>& raw, SpTerm& t) {
        std::vector<int> esum(n, 0);
        std::vector<Letter> rev;
        for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
            if (is_zero_letter(it->row, it->col)) return false;
            if (sp_cartan(it->row, it->col)) {
                int k = (it->row - 1) / 2;
                t.coeff *= qpow(it->exp * esum[k]);
                t.cartan[k] += it->exp;
            } else {
                if (it->exp != 1) throw math_error("negative exponent on non-invertible s generator");
                rev.emplace_back(it->row, it->col);
                for (int k = 0; k < n; ++k) esum[k] += sp_cartan_weight(k, it->row, it->col);
            }
        }
        t.core.assign(rev.rbegin(), rev.rend());
        return true;
    }

    std::map<std::tuple<int, int, int, int>, std::map<std::vector<Letter>, QScalar>> id_cache;

    // The quadratic exchange identity between s_{ia} and s_{jb}, collected as
    // word -> coefficient with all two-letter words included (the caller
    // filters supports).  The identity sums to zero.
    const std::map<std::vector<Letter>, QScalar>& exchange_identity(int i, int a, int j, int b) {
        auto key = std::make_tuple(i, a, j, b);
        auto hit = id_cache.find(key);
        if (hit != id_cache.end()) return hit->second;
        std::map<std::vector<Letter>, QScalar> id;
        QScalar qd = QScalar::qdiff();
        auto acc = [&id](int r1, int c1, int r2, int c2, const QScalar& c) {
            if (c.is_zero()) return;
            std::vector<Letter> w{{r1, c1}, {r2, c2}};
            auto it = id.find(w);
            if (it == id.end())
                id.emplace(std::move(w), c);
            else {
                it->second += c;
                if (it->second.is_zero()) id.erase(it);
            }
        };
        acc(i, a, j, b, qpow(d(a, j) + d(i, j)));
        acc(j, b, i, a, -qpow(d(a, b) + d(i, b)));
        acc(j, a, i, b, qd * qpow(d(a, i)) * QScalar(-(lt(b, a) - lt(i, j))));
        acc(j, i, b, a, qd * qpow(d(a, b)) * QScalar(-lt(b, i)));
        acc(i, j, a, b, qd * qpow(d(i, j)) * QScalar(lt(a, j)));
        acc(j, i, a, b, qd * qd * QScalar(-(lt3(b, a, i) - lt3(a, i, j))));
        return id_cache.emplace(key, std::move(id)).first->second;
    }

    void splice_and_push(const SpTerm& t, size_t pos, size_t drop,
                         const std::vector<RawLetter>& repl, const QScalar& factor) {
        std::vector<RawLetter> raw;
        raw.reserve(t.core.size() - drop + repl.size());
        for (size_t p = 0; p < pos; ++p) raw.push_back({t.core[p].first, t.core[p].second, 1});
        for (const auto& r : repl) raw.push_back(r);
        for (size_t p = pos + drop; p < t.core.size(); ++p)
            raw.push_back({t.core[p].first, t.core[p].second, 1});
        SpTerm nt;
        nt.cartan = t.cartan;
        nt.coeff = t.coeff * factor;
        if (!clean(raw, nt)) return;
        push_term(std::move(nt));
    }

    // Rewrites the out-of-order adjacent pair at position pos.
    void rewrite_pair(const SpTerm& t, size_t pos) {
        spend();
        const Letter& x = t.core[pos];
        const Letter& y = t.core[pos + 1];
        const auto& id = exchange_identity(x.first, x.second, y.first, y.second);
        std::vector<Letter> lhs{x, y};
        auto it = id.find(lhs);
        if (it == id.end() || it->second.is_zero())
            throw error("exchange identity does not determine the leading word");
        QScalar c = it->second;
        for (const auto& [w, v] : id) {
            if (w == lhs) continue;
            std::vector<RawLetter> repl{{w[0].first, w[0].second, 1}, {w[1].first, w[1].second, 1}};
            splice_and_push(t, pos, 2, repl, -(v / c));
        }
    }

    // Closed-form normalization inside one (s_{2k-1,*}, s_{2k,*}) block,
    // isomorphic to U'_q(sp_2).  Input word b^l c^m a^r over the local
    // alphabet a = s_11, b = s_21, c = s_22; output terms c^x a^y C^cart.
    struct MiniOut {
        int x, y, cart;
        QScalar coeff;
    };
    std::vector<MiniOut> normalize_block(int l, int m, int r) {
        struct MiniTerm {
            std::string w;
            int cart;
            QScalar coeff;
        };
        auto eloc = [](char ch) { return ch == 'a' ? 2 : ch == 'c' ? -2 : 0; };
        std::vector<MiniOut> out;
        std::deque<MiniTerm> queue;
        queue.push_back({std::string(l, 'b') + std::string(m, 'c') + std::string(r, 'a'),
                         0, QScalar(1)});
        QScalar qd = QScalar::qdiff();
        while (!queue.empty()) {
            MiniTerm t = std::move(queue.front());
            queue.pop_front();
            size_t bpos = t.w.rfind('b');
            if (bpos != std::string::npos) {
                spend();
                // s_21 -> q^-2 s_22 s_11 C^-1 - q C^-1
                int wsum = 0;
                for (size_t p = bpos + 1; p < t.w.size(); ++p) wsum += eloc(t.w[p]);
                QScalar move = qpow(-wsum);
                std::string pre = t.w.substr(0, bpos), suf = t.w.substr(bpos + 1);
                queue.push_back({pre + "ca" + suf, t.cart - 1, t.coeff * qpow(-2) * move});
                queue.push_back({pre + suf, t.cart - 1, t.coeff * (-qpow(1)) * move});
                continue;
            }
            size_t acpos = t.w.find("ac");
            if (acpos != std::string::npos) {
                spend();
                // s_11 s_22 = q^-2 s_22 s_11 - (q-q^-1) C^2 + (q^3-q)
                int wsum = 0;
                for (size_t p = acpos + 2; p < t.w.size(); ++p) wsum += eloc(t.w[p]);
                std::string pre = t.w.substr(0, acpos), suf = t.w.substr(acpos + 2);
                queue.push_back({pre + "ca" + suf, t.cart, t.coeff * qpow(-2)});
                queue.push_back({pre + suf, t.cart + 2, t.coeff * (-qd) * qpow(2 * wsum)});
                queue.push_back({pre + suf, t.cart, t.coeff * (qpow(3) - qpow(1))});
                continue;
            }
            int x = 0, y = 0;
            for (char ch : t.w) (ch == 'c' ? x : y)++;
            out.push_back({x, y, t.cart, t.coeff});
        }
        return out;
    }

    // Eliminates all s_{E,E-1} letters of one block of a sorted word.
    void eliminate_block(const SpTerm& t, size_t p0) {
        spend();
        int E = t.core[p0].first;       // even row
        int kb = E / 2 - 1;              // 0-based block
        size_t p = p0;
        int l = 0, m = 0;
        while (p < t.core.size() && t.core[p] == Letter{E, E - 1}) ++p, ++l;
        while (p < t.core.size() && t.core[p] == Letter{E, E}) ++p, ++m;
        size_t mid_begin = p;
        size_t diag_begin = p;
        while (diag_begin < t.core.size() &&
               sp_key(n, t.core[diag_begin]) < sp_key(n, Letter{E - 1, E - 1}))
            ++diag_begin;
        size_t diag_end = diag_begin;
        int r = 0;
        while (diag_end < t.core.size() && t.core[diag_end] == Letter{E - 1, E - 1})
            ++diag_end, ++r;
        // letters the block Cartan must cross on its way to the far right
        int wmove = 0;
        for (size_t u = mid_begin; u < diag_begin; ++u)
            wmove += sp_cartan_weight(kb, t.core[u].first, t.core[u].second);
        for (size_t u = diag_end; u < t.core.size(); ++u)
            wmove += sp_cartan_weight(kb, t.core[u].first, t.core[u].second);
        for (const auto& res : normalize_block(l, m, r)) {
            SpTerm nt;
            nt.cartan = t.cartan;
            nt.cartan[kb] += res.cart;
            nt.coeff = t.coeff * res.coeff * qpow(res.cart * wmove);
            nt.core.reserve(t.core.size() - l - r + res.x + res.y);
            nt.core.insert(nt.core.end(), t.core.begin(), t.core.begin() + p0);
            nt.core.insert(nt.core.end(), res.x, Letter{E, E});
            nt.core.insert(nt.core.end(), t.core.begin() + mid_begin, t.core.begin() + diag_begin);
            nt.core.insert(nt.core.end(), res.y, Letter{E - 1, E - 1});
            nt.core.insert(nt.core.end(), t.core.begin() + diag_end, t.core.end());
            push_term(std::move(nt));
        }
    }

    void process(SpTerm t) {
        // stage A: sort adjacent pairs toward the target order
        size_t hit = t.core.size();
        if (strategy == Strategy::Leftmost) {
            for (size_t p = 0; p + 1 < t.core.size(); ++p)
                if (sp_key(n, t.core[p]) > sp_key(n, t.core[p + 1])) { hit = p; break; }
        } else {
            for (size_t p = t.core.size(); p-- > 1;)
                if (sp_key(n, t.core[p - 1]) > sp_key(n, t.core[p])) { hit = p - 1; break; }
        }
        if (hit != t.core.size()) {
            rewrite_pair(t, hit);
            return;
        }
        // stage B: sorted word; eliminate s_{2k,2k-1} letters block by block
        size_t bad = t.core.size();
        for (size_t p = 0; p < t.core.size(); ++p) {
            if (t.core[p].first % 2 == 0 && t.core[p].second == t.core[p].first - 1) {
                bad = p;
                if (strategy == Strategy::Leftmost) break;
            }
        }
        if (bad != t.core.size()) {
            // for Rightmost, step back to the start of that block's bad run
            while (bad > 0 && t.core[bad - 1] == t.core[bad]) --bad;
            eliminate_block(t, bad);
            return;
        }
        SpKey key{t.core, t.cartan};
        auto it = done.find(key);
        if (it == done.end())
            done.emplace(std::move(key), t.coeff);
        else {
            it->second += t.coeff;
            if (it->second.is_zero()) done.erase(it);
        }
    }

    LinComb assemble() const {
        LinComb out;
        for (const auto& [key, coeff] : done) {
            const auto& [core, cartan] = key;
            QScalar c = coeff;
            std::vector<std::pair<Generator, int>> factors;
            std::vector<bool> placed(n, false);
            size_t p = 0;
            // emit every pending Cartan whose slot (end of odd row 2k+1)
            // precedes the given key; the q-power comes from moving it left
            // from the far right across every letter after the slot
            auto flush_before = [&](std::tuple<int, int, int> key_p) {
                for (int k = 0; k < n; ++k) {
                    if (placed[k] || cartan[k] == 0) continue;
                    if (!(std::make_tuple(1, k, 2 * n + 1) < key_p)) continue;
                    int w = 0;
                    for (size_t u = p; u < core.size(); ++u)
                        w += sp_cartan_weight(k, core[u].first, core[u].second);
                    c *= qpow(-cartan[k] * w);
                    factors.emplace_back(gen_s(2 * k + 1, 2 * k + 2), cartan[k]);
                    placed[k] = true;
                }
            };
            for (; p < core.size(); ++p) {
                flush_before(sp_key(n, core[p]));
                factors.emplace_back(gen_s(core[p].first, core[p].second), 1);
            }
            flush_before(std::make_tuple(2, 0, 0));
            out.add_term(Word(factors), c);
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// U_q(gl_N) rewriting
// ---------------------------------------------------------------------------

struct GlLetter {
    Kind kind;
    int row, col;
    auto operator<=>(const GlLetter&) const = default;
};

struct GlRaw {
    Kind kind;
    int row, col, exp;
};

struct GlTerm {
    std::vector<GlLetter> core;  // strictly triangular letters
    std::vector<int> diag;       // exponent of t_ii per i (1-based -> index i-1)
    QScalar coeff;
};

using GlKey = std::pair<std::vector<GlLetter>, std::vector<int>>;

struct GlEngine {
    int N;
    Strategy strategy;
    long long budget;
    long long steps = 0;
    std::map<GlKey, QScalar> done;
    std::map<GlKey, QScalar> pending;

    void spend() {
        if (++steps > budget)
            throw budget_error("normalize_gl exceeded the step budget (QSYMP_STEP_BUDGET)");
    }

    void push_term(GlTerm&& t) {
        if (t.coeff.is_zero()) return;
        GlKey key{std::move(t.core), std::move(t.diag)};
        auto it = pending.find(key);
        if (it == pending.end())
            pending.emplace(std::move(key), std::move(t.coeff));
        else {
            it->second += t.coeff;
            if (it->second.is_zero()) pending.erase(it);
        }
    }

    // t_ii g = q^{d(i,row)-d(i,col)} g t_ii for any generator g (same for tbar).
    static int diag_weight(int i, const GlLetter& g) { return d(i, g.row) - d(i, g.col); }

    std::tuple<int, int, int> key(const GlLetter& g) const {
        if (g.kind == Kind::T) return {0, N - 1 - g.col, N - g.row};
        return {1, g.row, g.col};
    }

    bool is_zero_letter(Kind kind, int row, int col) const {
        if (row < 1 || row > N || col < 1 || col > N) return true;
        return kind == Kind::T ? row < col : row > col;
    }

    bool clean(const std::vector<GlRaw>& raw, GlTerm& t) {
        std::vector<int> esum(N, 0);
        std::vector<GlLetter> rev;
        for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
            if (is_zero_letter(it->kind, it->row, it->col)) return false;
            if (it->row == it->col) {
                int i = it->row;
                int e = it->kind == Kind::T ? it->exp : -it->exp;  // tbar_ii = t_ii^-1
                t.coeff *= qpow(e * esum[i - 1]);
                t.diag[i - 1] += e;
            } else {
                if (it->exp != 1) throw math_error("negative exponent on non-diagonal gl generator");
                rev.push_back({it->kind, it->row, it->col});
                for (int i = 1; i <= N; ++i) esum[i - 1] += diag_weight(i, rev.back());
            }
        }
        t.core.assign(rev.rbegin(), rev.rend());
        return true;
    }

    std::map<std::pair<GlLetter, GlLetter>, std::map<std::vector<GlLetter>, QScalar>> id_cache;

    const std::map<std::vector<GlLetter>, QScalar>& exchange_identity(const GlLetter& x,
                                                                      const GlLetter& y) {
        auto key = std::make_pair(x, y);
        auto hit = id_cache.find(key);
        if (hit != id_cache.end()) return hit->second;
        std::map<std::vector<GlLetter>, QScalar> id;
        QScalar qd = QScalar::qdiff();
        auto acc = [&id](Kind k1, int r1, int c1, Kind k2, int r2, int c2, const QScalar& c) {
            if (c.is_zero()) return;
            std::vector<GlLetter> w{{k1, r1, c1}, {k2, r2, c2}};
            auto it = id.find(w);
            if (it == id.end())
                id.emplace(std::move(w), c);
            else {
                it->second += c;
                if (it->second.is_zero()) id.erase(it);
            }
        };
        int i = x.row, a = x.col, j = y.row, b = y.col;
        if (x.kind == y.kind) {
            // t relations; the tbar relations have the identical shape
            Kind K = x.kind;
            acc(K, i, a, K, j, b, qpow(d(i, j)));
            acc(K, j, b, K, i, a, -qpow(d(a, b)));
            acc(K, j, a, K, i, b, qd * QScalar(-(lt(b, a) - lt(i, j))));
        } else if (x.kind == Kind::TBar && y.kind == Kind::T) {
            acc(Kind::TBar, i, a, Kind::T, j, b, qpow(d(i, j)));
            acc(Kind::T, j, b, Kind::TBar, i, a, -qpow(d(a, b)));
            acc(Kind::T, j, a, Kind::TBar, i, b, qd * QScalar(-lt(b, a)));
            acc(Kind::TBar, j, a, Kind::T, i, b, qd * QScalar(lt(i, j)));
        } else {
            throw error("gl exchange applied to an ordered (t, tbar) pair");
        }
        return id_cache.emplace(key, std::move(id)).first->second;
    }

    void splice_and_push(const GlTerm& t, size_t pos, const std::vector<GlLetter>& repl,
                         const QScalar& factor) {
        std::vector<GlRaw> raw;
        raw.reserve(t.core.size() + repl.size());
        for (size_t p = 0; p < pos; ++p)
            raw.push_back({t.core[p].kind, t.core[p].row, t.core[p].col, 1});
        for (const auto& g : repl) raw.push_back({g.kind, g.row, g.col, 1});
        for (size_t p = pos + 2; p < t.core.size(); ++p)
            raw.push_back({t.core[p].kind, t.core[p].row, t.core[p].col, 1});
        GlTerm nt;
        nt.diag = t.diag;
        nt.coeff = t.coeff * factor;
        if (!clean(raw, nt)) return;
        push_term(std::move(nt));
    }

    void process(GlTerm t) {
        size_t hit = t.core.size();
        if (strategy == Strategy::Leftmost) {
            for (size_t p = 0; p + 1 < t.core.size(); ++p)
                if (key(t.core[p]) > key(t.core[p + 1])) { hit = p; break; }
        } else {
            for (size_t p = t.core.size(); p-- > 1;)
                if (key(t.core[p - 1]) > key(t.core[p])) { hit = p - 1; break; }
        }
        if (hit == t.core.size()) {
            GlKey k{t.core, t.diag};
            auto it = done.find(k);
            if (it == done.end())
                done.emplace(std::move(k), t.coeff);
            else {
                it->second += t.coeff;
                if (it->second.is_zero()) done.erase(it);
            }
            return;
        }
        spend();
        const auto& id = exchange_identity(t.core[hit], t.core[hit + 1]);
        std::vector<GlLetter> lhs{t.core[hit], t.core[hit + 1]};
        auto it = id.find(lhs);
        if (it == id.end() || it->second.is_zero())
            throw error("gl exchange identity does not determine the leading word");
        QScalar c = it->second;
        for (const auto& [w, v] : id) {
            if (w == lhs) continue;
            splice_and_push(t, hit, w, -(v / c));
        }
    }

    LinComb assemble() const {
        LinComb out;
        for (const auto& [k, coeff] : done) {
            const auto& [core, diag] = k;
            QScalar c = coeff;
            std::vector<std::pair<Generator, int>> factors;
            size_t p = 0;
            while (p < core.size() && core[p].kind == Kind::T) {
                factors.emplace_back(gen_t(core[p].row, core[p].col), 1);
                ++p;
            }
            for (int i = 1; i <= N; ++i) {
                if (diag[i - 1] == 0) continue;
                int w = 0;
                for (size_t u = p; u < core.size(); ++u) w += diag_weight(i, core[u]);
                c *= qpow(-diag[i - 1] * w);
                factors.emplace_back(gen_t(i, i), diag[i - 1]);
            }
            for (; p < core.size(); ++p) factors.emplace_back(gen_tb(core[p].row, core[p].col), 1);
            out.add_term(Word(factors), c);
        }
        return out;
    }
};

} // namespace

LinComb normalize_sp(const LinComb& x, int n, RewriteOptions opts) {
    if (n < 1) throw math_error("normalize_sp: rank must be positive");
    SpEngine eng;
    eng.n = n;
    eng.strategy = opts.strategy;
    eng.budget = opts.step_budget > 0 ? opts.step_budget : default_step_budget();
    for (const auto& [w, c] : x.terms()) {
        std::vector<RawLetter> raw;
        for (const auto& [g, e] : w.factors()) {
            if (g.kind != Kind::S) throw math_error("normalize_sp: not an SP word");
            if (!sp_support(n, g.i, g.j))
                throw math_error("normalize_sp: s[" + std::to_string(g.i) + "," +
                                 std::to_string(g.j) + "] is outside the generator support");
            if (e < 0 && !sp_cartan(g.i, g.j))
                throw math_error("normalize_sp: negative exponent on non-invertible generator");
            if (sp_cartan(g.i, g.j))
                raw.push_back({g.i, g.j, e});
            else
                for (int t = 0; t < e; ++t) raw.push_back({g.i, g.j, 1});
        }
        SpTerm t;
        t.cartan.assign(n, 0);
        t.coeff = c;
        if (!eng.clean(raw, t)) continue;
        eng.push_term(std::move(t));
    }
    while (!eng.pending.empty()) {
        auto it = eng.pending.begin();
        SpTerm t;
        t.core = it->first.first;
        t.cartan = it->first.second;
        t.coeff = std::move(it->second);
        eng.pending.erase(it);
        eng.process(std::move(t));
    }
    return eng.assemble();
}

LinComb normalize_gl(const LinComb& x, int N, RewriteOptions opts) {
    if (N < 1) throw math_error("normalize_gl: N must be positive");
    GlEngine eng;
    eng.N = N;
    eng.strategy = opts.strategy;
    eng.budget = opts.step_budget > 0 ? opts.step_budget : default_step_budget();
    for (const auto& [w, c] : x.terms()) {
        std::vector<GlRaw> raw;
        for (const auto& [g, e] : w.factors()) {
            if (g.kind == Kind::S) throw math_error("normalize_gl: not a GL word");
            if (!gl_support(N, g.kind, g.i, g.j))
                throw math_error("normalize_gl: " + g.str() + " is outside the generator support");
            if (e < 0 && g.i != g.j)
                throw math_error("normalize_gl: negative exponent on non-diagonal generator");
            if (g.i == g.j)
                raw.push_back({g.kind, g.i, g.j, e});
            else
                for (int t = 0; t < e; ++t) raw.push_back({g.kind, g.i, g.j, 1});
        }
        GlTerm t;
        t.diag.assign(N, 0);
        t.coeff = c;
        if (!eng.clean(raw, t)) continue;
        eng.push_term(std::move(t));
    }
    while (!eng.pending.empty()) {
        auto it = eng.pending.begin();
        GlTerm t;
        t.core = it->first.first;
        t.diag = it->first.second;
        t.coeff = std::move(it->second);
        eng.pending.erase(it);
        eng.process(std::move(t));
    }
    return eng.assemble();
}

std::vector<int> weight_of_word(const Word& w, int n) {
    std::vector<int> a(n, 0);
    for (const auto& [g, e] : w.factors()) {
        if (g.kind != Kind::S || !sp_support(n, g.i, g.j))
            throw math_error("weight_of_word: not a valid SP word");
        for (int k = 0; k < n; ++k) {
            int i = 2 * k + 1;
            a[k] += e * (d(i, g.i) + d(i, g.j) - d(i + 1, g.i) - d(i + 1, g.j));
        }
    }
    return a;
}

LinComb theta(int i, int n) {
    if (i < 1 || i > 2 * n - 1 || i % 2 == 0)
        throw math_error("theta: index must be odd and at most 2n-1");
    LinComb first(Word(gen_s(i + 1, i + 1)) * Word(gen_s(i, i)));
    LinComb second(Word(gen_s(i + 1, i)) * Word(gen_s(i, i + 1)));
    return first - second.scaled(QScalar::q(2));
}

} // namespace qsymp
