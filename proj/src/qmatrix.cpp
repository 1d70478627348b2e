#include "qframes/qmatrix.hpp"

#include <cmath>
#include <string>

#include "qframes/errors.hpp"

namespace qframes {

namespace {

void require_same_shape(const QMatrix& a, const QMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch(std::string(op) + ": shapes " + std::to_string(a.rows()) +
                                "x" + std::to_string(a.cols()) + " and " +
                                std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                                " differ");
    }
}

} // namespace

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        m(k, k) = Quaternion::one();
    }
    return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& columns) {
    if (columns.empty()) {
        throw DimensionMismatch("from_columns: empty column list");
    }
    const std::size_t rows = columns.front().size();
    QMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) {
            throw DimensionMismatch("from_columns: ragged column lengths");
        }
        for (std::size_t r = 0; r < rows; ++r) {
            m(r, c) = columns[c][r];
        }
    }
    return m;
}

QVector QMatrix::column(std::size_t c) const {
    QVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

QVector QMatrix::row(std::size_t r) const {
    QVector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
        v[c] = (*this)(r, c);
    }
    return v;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    require_same_shape(a, b, "matrix add");
    QMatrix out(a.rows(), a.cols());
    for (std::size_t k = 0; k < out.data().size(); ++k) {
        out.data()[k] = a.data()[k] + b.data()[k];
    }
    return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    require_same_shape(a, b, "matrix subtract");
    QMatrix out(a.rows(), a.cols());
    for (std::size_t k = 0; k < out.data().size(); ++k) {
        out.data()[k] = a.data()[k] - b.data()[k];
    }
    return out;
}

QMatrix operator-(const QMatrix& a) {
    QMatrix out(a.rows(), a.cols());
    for (std::size_t k = 0; k < out.data().size(); ++k) {
        out.data()[k] = -a.data()[k];
    }
    return out;
}

QMatrix operator*(const QMatrix& a, double s) {
    QMatrix out(a.rows(), a.cols());
    for (std::size_t k = 0; k < out.data().size(); ++k) {
        out.data()[k] = a.data()[k] * s;
    }
    return out;
}

QMatrix operator*(double s, const QMatrix& a) { return a * s; }

QMatrix operator*(const QMatrix& p, const QMatrix& q) {
    if (p.cols() != q.rows()) {
        throw DimensionMismatch("matrix multiply: inner dimensions " +
                                std::to_string(p.cols()) + " and " +
                                std::to_string(q.rows()) + " differ");
    }
    QMatrix out(p.rows(), q.cols());
    for (std::size_t r = 0; r < p.rows(); ++r) {
        for (std::size_t k = 0; k < p.cols(); ++k) {
            const Quaternion& prk = p(r, k);
            if (prk == Quaternion::zero()) {
                continue;
            }
            for (std::size_t c = 0; c < q.cols(); ++c) {
                out(r, c) += prk * q(k, c);
            }
        }
    }
    return out;
}

QVector operator*(const QMatrix& l, const QVector& v) {
    if (l.cols() != v.size()) {
        throw DimensionMismatch("matrix-vector multiply: " + std::to_string(l.cols()) +
                                " columns vs vector length " + std::to_string(v.size()));
    }
    QVector out(l.rows());
    for (std::size_t r = 0; r < l.rows(); ++r) {
        Quaternion acc;
        for (std::size_t c = 0; c < l.cols(); ++c) {
            acc += l(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

QMatrix adjoint(const QMatrix& l) {
    QMatrix out(l.cols(), l.rows());
    for (std::size_t r = 0; r < l.rows(); ++r) {
        for (std::size_t c = 0; c < l.cols(); ++c) {
            out(c, r) = conj(l(r, c));
        }
    }
    return out;
}

QMatrix outer(const QVector& u, const QVector& v) {
    QMatrix out(u.size(), v.size());
    for (std::size_t r = 0; r < u.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) {
            out(r, c) = u[r] * conj(v[c]);
        }
    }
    return out;
}

double frobenius_norm(const QMatrix& a) {
    double acc = 0.0;
    for (const Quaternion& q : a.data()) {
        acc += norm_sq(q);
    }
    return std::sqrt(acc);
}

bool is_finite(const QMatrix& a) {
    for (const Quaternion& q : a.data()) {
        if (!is_finite(q)) {
            return false;
        }
    }
    return true;
}

bool is_hermitian(const QMatrix& a, double tol) {
    if (a.rows() != a.cols()) {
        return false;
    }
    double worst = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = r; c < a.cols(); ++c) {
            worst = std::max(worst, abs(a(r, c) - conj(a(c, r))));
        }
    }
    return worst <= tol;
}

QMatrix row_block(const QMatrix& a, std::size_t row_begin, std::size_t row_end) {
    if (row_begin > row_end || row_end > a.rows()) {
        throw DimensionMismatch("row_block: range out of bounds");
    }
    QMatrix out(row_end - row_begin, a.cols());
    for (std::size_t r = row_begin; r < row_end; ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r - row_begin, c) = a(r, c);
        }
    }
    return out;
}

QMatrix block_diag(const QMatrix& a, const QMatrix& b) {
    QMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r, c) = a(r, c);
        }
    }
    for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            out(a.rows() + r, a.cols() + c) = b(r, c);
        }
    }
    return out;
}

QMatrix vstack(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.cols()) {
        throw DimensionMismatch("vstack: column counts differ");
    }
    QMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r, c) = a(r, c);
        }
    }
    for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            out(a.rows() + r, c) = b(r, c);
        }
    }
    return out;
}

} // namespace qframes
