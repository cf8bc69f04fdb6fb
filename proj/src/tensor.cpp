#include "qsymp/tensor.hpp"

namespace qsymp {

OpMatrix build_R(int N) {
    if (N < 1) throw math_error("build_R: N must be positive");
    OpMatrix r(N * N, N * N);
    auto idx = [N](int i, int j) { return (i - 1) * N + (j - 1); };  // 1-based pair -> 0-based row
    QScalar q = QScalar::q();
    QScalar qd = QScalar::qdiff();
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            r.set(idx(i, j), idx(i, j), i == j ? q : QScalar(1));
    // (q - q^-1) E_ij (x) E_ji maps e_j(x)e_i -> e_i(x)e_j for i<j
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) r.set(idx(i, j), idx(j, i), qd);
    return r;
}

OpMatrix build_Rprime(int N) {
    if (N < 1) throw math_error("build_Rprime: N must be positive");
    OpMatrix r(N * N, N * N);
    auto idx = [N](int i, int j) { return (i - 1) * N + (j - 1); };
    QScalar q = QScalar::q();
    QScalar qd = QScalar::qdiff();
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            r.set(idx(i, j), idx(i, j), i == j ? q : QScalar(1));
    // (q - q^-1) E_ji (x) E_ji maps e_i(x)e_i -> e_j(x)e_j for i<j
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) r.set(idx(j, j), idx(i, i), qd);
    return r;
}

OpMatrix build_G(int n) {
    if (n < 1) throw math_error("build_G: n must be positive");
    OpMatrix g(2 * n, 2 * n);
    QScalar q = QScalar::q();
    for (int k = 1; k <= n; ++k) {
        g.set(2 * k - 2, 2 * k - 1, q);          // E_{2k-1,2k} coefficient q
        g.set(2 * k - 1, 2 * k - 2, QScalar(-1));  // -E_{2k,2k-1}
    }
    return g;
}

OpMatrix place_two_legs(const OpMatrix& op, int N, int legA, int legB, int nlegs) {
    if (op.rows() != N * N || op.cols() != N * N)
        throw math_error("place_two_legs: operator is not N^2 x N^2");
    if (!(0 <= legA && legA < legB && legB < nlegs))
        throw math_error("place_two_legs: bad leg indices");
    long long total = 1;
    for (int k = 0; k < nlegs; ++k) total *= N;
    OpMatrix out(static_cast<int>(total), static_cast<int>(total));
    // strides of each leg in the row-major index
    std::vector<long long> stride(nlegs, 1);
    for (int k = nlegs - 2; k >= 0; --k) stride[k] = stride[k + 1] * N;
    // enumerate spectator configurations
    int nspec = nlegs - 2;
    long long spec_total = 1;
    for (int k = 0; k < nspec; ++k) spec_total *= N;
    std::vector<int> spec_legs;
    for (int k = 0; k < nlegs; ++k)
        if (k != legA && k != legB) spec_legs.push_back(k);
    for (const auto& [r, row] : op.entries()) {
        int ia = r / N, ja = r % N;  // target indices on legs A, B
        for (const auto& [c, v] : row) {
            int ka = c / N, la = c % N;  // source indices on legs A, B
            for (long long s = 0; s < spec_total; ++s) {
                long long rest = s;
                long long ridx = ia * stride[legA] + ja * stride[legB];
                long long cidx = ka * stride[legA] + la * stride[legB];
                for (int t = nspec - 1; t >= 0; --t) {
                    int digit = int(rest % N);
                    rest /= N;
                    ridx += digit * stride[spec_legs[t]];
                    cidx += digit * stride[spec_legs[t]];
                }
                out.set(int(ridx), int(cidx), v);
            }
        }
    }
    return out;
}

OpMatrix check_yang_baxter(const OpMatrix& R, int N) {
    if (R.rows() != N * N || R.cols() != N * N)
        throw math_error("check_yang_baxter: R is not N^2 x N^2");
    OpMatrix r12 = place_two_legs(R, N, 0, 1, 3);
    OpMatrix r13 = place_two_legs(R, N, 0, 2, 3);
    OpMatrix r23 = place_two_legs(R, N, 1, 2, 3);
    return r12 * r13 * r23 - r23 * r13 * r12;
}

OpMatrix check_reflection(const OpMatrix& R, const OpMatrix& Rp,
                          const std::map<std::pair<int, int>, OpMatrix>& S_ops,
                          int N, int d) {
    if (R.rows() != N * N || Rp.rows() != N * N)
        throw math_error("check_reflection: R/R' are not N^2 x N^2");
    if (d == 0) return OpMatrix(0, 0);
    int dim = d * N * N;
    OpMatrix S1(dim, dim), S2(dim, dim);
    for (const auto& [ij, m] : S_ops) {
        auto [i, j] = ij;
        if (i < 1 || i > N || j < 1 || j > N)
            throw math_error("check_reflection: generator index out of range");
        if (m.rows() != d || m.cols() != d)
            throw math_error("check_reflection: inconsistent module dimension");
        for (const auto& [a, row] : m.entries())
            for (const auto& [b, v] : row) {
                // S1 = s_ij (x) E_ij (x) 1,  S2 = s_ij (x) 1 (x) E_ij
                for (int k = 0; k < N; ++k) {
                    S1.add_to((a * N + (i - 1)) * N + k, (b * N + (j - 1)) * N + k, v);
                    S2.add_to((a * N + k) * N + (i - 1), (b * N + k) * N + (j - 1), v);
                }
            }
    }
    OpMatrix Rhat = kron(OpMatrix::identity(d), R);
    OpMatrix Rphat = kron(OpMatrix::identity(d), Rp);
    return Rhat * S1 * Rphat * S2 - S2 * Rphat * S1 * Rhat;
}

} // namespace qsymp
