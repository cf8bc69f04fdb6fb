#include "qsymp/matrix.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace qsymp {

OpMatrix OpMatrix::identity(int n) {
    OpMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.e_[i][i] = QScalar(1);
    return m;
}

size_t OpMatrix::nnz() const {
    size_t n = 0;
    for (const auto& [i, row] : e_) n += row.size();
    return n;
}

void OpMatrix::check_index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw math_error("matrix index out of range");
}

QScalar OpMatrix::get(int i, int j) const {
    check_index(i, j);
    auto ri = e_.find(i);
    if (ri == e_.end()) return QScalar();
    auto ci = ri->second.find(j);
    return ci == ri->second.end() ? QScalar() : ci->second;
}

void OpMatrix::set(int i, int j, const QScalar& v) {
    check_index(i, j);
    if (v.is_zero()) {
        auto ri = e_.find(i);
        if (ri != e_.end()) {
            ri->second.erase(j);
            if (ri->second.empty()) e_.erase(ri);
        }
    } else {
        e_[i][j] = v;
    }
}

void OpMatrix::add_to(int i, int j, const QScalar& v) {
    if (v.is_zero()) return;
    set(i, j, get(i, j) + v);
}

OpMatrix OpMatrix::operator+(const OpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw math_error("matrix sum: shape mismatch");
    OpMatrix r = *this;
    for (const auto& [i, row] : o.e_)
        for (const auto& [j, v] : row) r.add_to(i, j, v);
    return r;
}

OpMatrix OpMatrix::operator-(const OpMatrix& o) const { return *this + o.scaled(QScalar(-1)); }

OpMatrix OpMatrix::operator*(const OpMatrix& o) const {
    if (cols_ != o.rows_) throw math_error("matrix product: shape mismatch");
    OpMatrix r(rows_, o.cols_);
    for (const auto& [i, row] : e_) {
        std::map<int, QScalar> acc;
        for (const auto& [k, v] : row) {
            auto rk = o.e_.find(k);
            if (rk == o.e_.end()) continue;
            for (const auto& [j, w] : rk->second) {
                auto it = acc.find(j);
                if (it == acc.end())
                    acc.emplace(j, v * w);
                else
                    it->second += v * w;
            }
        }
        for (auto& [j, v] : acc)
            if (!v.is_zero()) r.e_[i][j] = std::move(v);
    }
    return r;
}

OpMatrix OpMatrix::scaled(const QScalar& c) const {
    OpMatrix r(rows_, cols_);
    if (c.is_zero()) return r;
    for (const auto& [i, row] : e_)
        for (const auto& [j, v] : row) r.e_[i][j] = v * c;
    return r;
}

OpMatrix OpMatrix::transpose() const {
    OpMatrix r(cols_, rows_);
    for (const auto& [i, row] : e_)
        for (const auto& [j, v] : row) r.e_[j][i] = v;
    return r;
}

bool OpMatrix::operator==(const OpMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

std::vector<QScalar> OpMatrix::apply(const std::vector<QScalar>& v) const {
    if (int(v.size()) != cols_) throw math_error("matrix apply: shape mismatch");
    std::vector<QScalar> r(rows_);
    for (const auto& [i, row] : e_)
        for (const auto& [j, w] : row)
            if (!v[j].is_zero()) r[i] += w * v[j];
    return r;
}

std::vector<std::vector<Rational>> OpMatrix::eval_at(const Rational& q0) const {
    std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_, Rational(0)));
    for (const auto& [i, row] : e_)
        for (const auto& [j, v] : row) m[i][j] = v.eval_at(q0);
    return m;
}

std::string OpMatrix::str() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " [";
    bool first = true;
    for (const auto& [i, row] : e_)
        for (const auto& [j, v] : row) {
            if (!first) os << ", ";
            first = false;
            os << "(" << i + 1 << "," << j + 1 << ")=" << v.str();
        }
    os << "]";
    return os.str();
}

OpMatrix kron(const OpMatrix& a, const OpMatrix& b) {
    OpMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (const auto& [i, arow] : a.entries())
        for (const auto& [j, av] : arow)
            for (const auto& [k, brow] : b.entries())
                for (const auto& [l, bv] : brow)
                    r.set(i * b.rows() + k, j * b.cols() + l, av * bv);
    return r;
}

OpMatrix inverse(const OpMatrix& m) {
    if (m.rows() != m.cols()) throw math_error("inverse of non-square matrix");
    int n = m.rows();
    // dense Gauss-Jordan on [m | I]
    std::vector<std::vector<QScalar>> a(n, std::vector<QScalar>(2 * n));
    for (const auto& [i, row] : m.entries())
        for (const auto& [j, v] : row) a[i][j] = v;
    for (int i = 0; i < n; ++i) a[i][n + i] = QScalar(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) throw math_error("inverse of singular matrix");
        std::swap(a[piv], a[col]);
        QScalar inv = a[col][col].inverse();
        for (int j = 0; j < 2 * n; ++j)
            if (!a[col][j].is_zero()) a[col][j] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            QScalar f = a[r][col];
            for (int j = 0; j < 2 * n; ++j)
                if (!a[col][j].is_zero()) a[r][j] -= f * a[col][j];
        }
    }
    OpMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.set(i, j, a[i][n + j]);
    return out;
}

int rank_symbolic(const OpMatrix& m) {
    std::vector<std::vector<QScalar>> a(m.rows(), std::vector<QScalar>(m.cols()));
    for (const auto& [i, row] : m.entries())
        for (const auto& [j, v] : row) a[i][j] = v;
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (!a[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        QScalar inv = a[rank][col].inverse();
        for (int j = col; j < m.cols(); ++j)
            if (!a[rank][j].is_zero()) a[rank][j] *= inv;
        for (int r = rank + 1; r < m.rows(); ++r) {
            if (a[r][col].is_zero()) continue;
            QScalar f = a[r][col];
            for (int j = col; j < m.cols(); ++j)
                if (!a[rank][j].is_zero()) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

int rank_rational(std::vector<std::vector<Rational>> a) {
    if (a.empty()) return 0;
    int rows = int(a.size()), cols = int(a[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        Rational inv = 1 / a[rank][col];
        for (int j = col; j < cols; ++j) a[rank][j] *= inv;
        for (int r = rank + 1; r < rows; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (int j = col; j < cols; ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

int rank_generic(const OpMatrix& m, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(2, 97), den(2, 23);
    int ranks[3];
    for (int t = 0; t < 3; ++t) {
        Rational q0;
        while (true) {
            q0 = Rational(num(rng), den(rng));
            if (q0 != 0 && q0 != 1 && q0 != -1) break;
        }
        try {
            ranks[t] = rank_rational(m.eval_at(q0));
        } catch (const math_error&) {
            ranks[t] = -1;  // hit a pole of an entry; forces the fallback
        }
    }
    if (ranks[0] == ranks[1] && ranks[1] == ranks[2] && ranks[0] >= 0) return ranks[0];
    return rank_symbolic(m);
}

bool RowSpace::add(std::vector<QScalar> v) {
    if (int(v.size()) != dim_) throw math_error("RowSpace: wrong vector length");
    for (size_t r = 0; r < rows_.size(); ++r) {
        const QScalar& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        QScalar f = c;
        for (int j = 0; j < dim_; ++j)
            if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
    }
    int piv = -1;
    for (int j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) { piv = j; break; }
    if (piv < 0) return false;
    QScalar inv = v[piv].inverse();
    for (int j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) v[j] *= inv;
    // back-reduce existing rows to keep the basis fully reduced
    for (size_t r = 0; r < rows_.size(); ++r) {
        const QScalar& c = rows_[r][piv];
        if (c.is_zero()) continue;
        QScalar f = c;
        for (int j = 0; j < dim_; ++j)
            if (!v[j].is_zero()) rows_[r][j] -= f * v[j];
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
}

std::optional<std::vector<QScalar>> RowSpace::coords(std::vector<QScalar> v) const {
    if (int(v.size()) != dim_) throw math_error("RowSpace: wrong vector length");
    std::vector<QScalar> c(rows_.size());
    for (size_t r = 0; r < rows_.size(); ++r) {
        QScalar f = v[pivots_[r]];
        c[r] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j < dim_; ++j)
            if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
    }
    for (int j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) return std::nullopt;
    return c;
}

} // namespace qsymp
