#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "qsymp/qscalar.hpp"

namespace qsymp {

/// Sparse matrix over QScalar.  Stored entries are always nonzero.
/// Indices are 0-based internally; the JSON interchange format is 1-based.
class OpMatrix {
public:
    OpMatrix() : rows_(0), cols_(0) {}
    OpMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}
    static OpMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    size_t nnz() const;
    bool is_zero() const { return e_.empty(); }

    QScalar get(int i, int j) const;
    void set(int i, int j, const QScalar& v);
    void add_to(int i, int j, const QScalar& v);

    /// row index -> (col index -> value); rows with no entries are absent.
    const std::map<int, std::map<int, QScalar>>& entries() const { return e_; }

    OpMatrix operator+(const OpMatrix& o) const;
    OpMatrix operator-(const OpMatrix& o) const;
    OpMatrix operator*(const OpMatrix& o) const;  // dimension checked
    OpMatrix scaled(const QScalar& c) const;
    OpMatrix transpose() const;

    bool operator==(const OpMatrix& o) const;
    bool operator!=(const OpMatrix& o) const { return !(*this == o); }

    std::vector<QScalar> apply(const std::vector<QScalar>& v) const;

    /// Dense evaluation at a rational point (throws on pole).
    std::vector<std::vector<Rational>> eval_at(const Rational& q0) const;

    std::string str() const;

private:
    int rows_, cols_;
    std::map<int, std::map<int, QScalar>> e_;
    void check_index(int i, int j) const;
};

OpMatrix kron(const OpMatrix& a, const OpMatrix& b);

/// Inverse of a square matrix; throws math_error if singular.
OpMatrix inverse(const OpMatrix& m);

/// Exact rank by Gaussian elimination over Q(q).
int rank_symbolic(const OpMatrix& m);

/// Rank of a dense rational matrix.
int rank_rational(std::vector<std::vector<Rational>> m);

/// Fast-path rank: evaluates at three distinct rational points away from
/// {0, 1, -1} drawn from a seeded generator and takes the maximum, falling
/// back to full symbolic elimination when the three disagree.
int rank_generic(const OpMatrix& m, unsigned seed = 1);

/// Growing subspace of Q(q)^dim kept in reduced row-echelon form.
class RowSpace {
public:
    explicit RowSpace(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    int rank() const { return int(rows_.size()); }
    const std::vector<std::vector<QScalar>>& basis() const { return rows_; }

    /// Adds v to the space; returns true when the rank grew.
    bool add(std::vector<QScalar> v);

    /// Coordinates of v in the echelon basis, or nullopt when v is outside.
    std::optional<std::vector<QScalar>> coords(std::vector<QScalar> v) const;

private:
    int dim_;
    std::vector<std::vector<QScalar>> rows_;  // reduced echelon rows
    std::vector<int> pivots_;                 // pivot column per row, increasing
};

} // namespace qsymp
