#pragma once

#include <cstddef>
#include <vector>

#include "qframes/quaternion.hpp"
#include "qframes/qvector.hpp"

namespace qframes {

/// Right H-linear operator H^n -> H^m stored as an m x n quaternion array.
///
/// The action multiplies coefficients on the right of the entries,
///   (L v)[r] = sum_c L(r,c) * v[c],
/// which makes L(u q + v p) = (L u) q + (L v) p hold by associativity.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix identity(std::size_t n);
    static QMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    /// Matrix whose i-th column is columns[i].
    static QMatrix from_columns(const std::vector<QVector>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Quaternion& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Quaternion& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    const std::vector<Quaternion>& data() const { return data_; }
    std::vector<Quaternion>& data() { return data_; }

    QVector column(std::size_t c) const;
    QVector row(std::size_t r) const;

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Quaternion> data_;
};

QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a);
QMatrix operator*(const QMatrix& a, double s);
QMatrix operator*(double s, const QMatrix& a);

/// Composition: (P * Q) v = P (Q v).
QMatrix operator*(const QMatrix& p, const QMatrix& q);

/// Operator action on a vector.
QVector operator*(const QMatrix& l, const QVector& v);

/// Adjoint, adjoint(L)(r,c) = conj(L(c,r)); satisfies <L u, v> = <u, adjoint(L) v>.
QMatrix adjoint(const QMatrix& l);

/// Rank-one operator u * conj(v)^T: (outer(u, v)) w = u * <v, w>.
QMatrix outer(const QVector& u, const QVector& v);

double frobenius_norm(const QMatrix& a);
bool is_finite(const QMatrix& a);
bool is_hermitian(const QMatrix& a, double tol);

/// Rows [row_begin, row_end) as a standalone operator.
QMatrix row_block(const QMatrix& a, std::size_t row_begin, std::size_t row_end);

/// Block-diagonal matrix diag(a, b).
QMatrix block_diag(const QMatrix& a, const QMatrix& b);

/// Vertical stack [a; b] (matching column counts).
QMatrix vstack(const QMatrix& a, const QMatrix& b);

} // namespace qframes
