#include "qsymp/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "qsymp/qscalar.hpp"

namespace qsymp {

RootSystemC root_system_C(int n) {
    if (n < 1) throw math_error("root_system_C: rank must be positive");
    RootSystemC rs{n, {}};
    for (int i = 1; i <= n; ++i) {
        std::vector<int> r(n, 0);
        r[i - 1] = 2;
        rs.positive.push_back(r);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::vector<int> a(n, 0), b(n, 0);
            a[i - 1] = 1, a[j - 1] = 1;
            b[i - 1] = -1, b[j - 1] = 1;
            rs.positive.push_back(a);
            rs.positive.push_back(b);
        }
    return rs;
}

namespace {

long long dot(const std::vector<int>& a, const std::vector<int>& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += (long long)a[i] * b[i];
    return s;
}

std::vector<int> rho_C(int n) {
    // half-sum of positive roots: (1, 2, ..., n)
    std::vector<int> r(n);
    std::iota(r.begin(), r.end(), 1);
    return r;
}

std::vector<int> dominant_rep(std::vector<int> w) {
    for (int& x : w) x = std::abs(x);
    std::sort(w.begin(), w.end());
    return w;
}

// All signed permutations of w (the Weyl orbit).
std::vector<std::vector<int>> weyl_orbit(const std::vector<int>& w) {
    int n = int(w.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    std::sort(perm.begin(), perm.end());
    do {
        for (int signs = 0; signs < (1 << n); ++signs) {
            std::vector<int> v(n);
            for (int i = 0; i < n; ++i)
                v[i] = (signs >> i & 1) ? -w[perm[i]] : w[perm[i]];
            out.push_back(v);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

long long weyl_dim_sp(const std::vector<int>& r_desc) {
    int n = int(r_desc.size());
    if (n < 1) throw math_error("weyl_dim_sp: empty weight");
    for (int i = 0; i + 1 < n; ++i)
        if (r_desc[i] < r_desc[i + 1]) throw math_error("weyl_dim_sp: weight is not dominant");
    if (r_desc[n - 1] < 0) throw math_error("weyl_dim_sp: negative entry");
    std::vector<int> lambda(r_desc.rbegin(), r_desc.rend());  // ascending eps coordinates
    RootSystemC rs = root_system_C(n);
    std::vector<int> rho = rho_C(n);
    std::vector<int> lr(n);
    for (int i = 0; i < n; ++i) lr[i] = lambda[i] + rho[i];
    Rational dim = 1;
    for (const auto& a : rs.positive) dim *= Rational(dot(lr, a), dot(rho, a));
    if (denominator(dim) != 1) throw math_error("weyl_dim_sp: non-integer dimension");
    return numerator(dim).convert_to<long long>();
}

std::map<std::vector<int>, long long> freudenthal_sp(const std::vector<int>& lambda_asc) {
    int n = int(lambda_asc.size());
    for (int i = 0; i + 1 < n; ++i)
        if (lambda_asc[i] > lambda_asc[i + 1])
            throw math_error("freudenthal_sp: weight is not dominant");
    if (n && lambda_asc[0] < 0) throw math_error("freudenthal_sp: negative entry");
    RootSystemC rs = root_system_C(n);
    std::vector<int> rho = rho_C(n);
    auto norm_sq_shift = [&](const std::vector<int>& w) {
        long long s = 0;
        for (int i = 0; i < n; ++i) s += (long long)(w[i] + rho[i]) * (w[i] + rho[i]);
        return s;
    };
    int top = n ? lambda_asc[n - 1] : 0;
    long long parity = 0;
    for (int x : lambda_asc) parity += x;
    // candidate dominant weights inside the box, same coordinate-sum parity
    std::vector<std::vector<int>> dominants;
    std::vector<int> cur(n, 0);
    std::function<void(int, int)> gen = [&](int pos, int lo) {
        if (pos == n) {
            long long s = 0;
            for (int x : cur) s += x;
            if (((parity - s) & 1) == 0) dominants.push_back(cur);
            return;
        }
        for (int v = lo; v <= top; ++v) {
            cur[pos] = v;
            gen(pos + 1, v);
        }
    };
    gen(0, 0);
    // descending height <mu, rho>
    std::sort(dominants.begin(), dominants.end(),
              [&](const std::vector<int>& a, const std::vector<int>& b) {
                  return dot(a, rho) > dot(b, rho);
              });
    std::map<std::vector<int>, long long> mult;  // dominant weights only
    long long lam2 = norm_sq_shift(lambda_asc);
    for (const auto& mu : dominants) {
        if (mu == lambda_asc) {
            mult[mu] = 1;
            continue;
        }
        long long denomv = lam2 - norm_sq_shift(mu);
        long long num = 0;
        for (const auto& a : rs.positive) {
            for (int k = 1;; ++k) {
                std::vector<int> w(n);
                bool inside = true;
                for (int i = 0; i < n; ++i) {
                    w[i] = mu[i] + k * a[i];
                    if (std::abs(w[i]) > top + 2 * n) inside = false;
                }
                if (!inside) break;
                auto it = mult.find(dominant_rep(w));
                if (it == mult.end() || it->second == 0) continue;
                num += 2 * it->second * dot(w, a);
            }
        }
        if (num == 0) {
            mult[mu] = 0;
            continue;
        }
        if (denomv == 0 || num % denomv != 0)
            throw error("freudenthal_sp: inexact multiplicity");
        mult[mu] = num / denomv;
    }
    std::map<std::vector<int>, long long> table;
    for (const auto& [mu, m] : mult) {
        if (m == 0) continue;
        for (const auto& w : weyl_orbit(mu)) table[w] = m;
    }
    return table;
}

std::map<std::vector<int>, long long> kostant_counts(int n, int max_parts) {
    RootSystemC rs = root_system_C(n);
    std::map<std::vector<int>, long long> table;
    std::vector<int> sum(n, 0);
    std::function<void(size_t, int)> rec = [&](size_t idx, int used) {
        if (idx == rs.positive.size()) {
            table[sum] += 1;
            return;
        }
        for (int k = 0; used + k <= max_parts; ++k) {
            if (k > 0)
                for (int i = 0; i < n; ++i) sum[i] += rs.positive[idx][i];
            rec(idx + 1, used + k);
        }
        int kmax = max_parts - used;
        for (int i = 0; i < n; ++i) sum[i] -= kmax * rs.positive[idx][i];
    };
    rec(0, 0);
    return table;
}

} // namespace qsymp
