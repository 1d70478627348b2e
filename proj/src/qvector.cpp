#include "qframes/qvector.hpp"

#include <cmath>

#include "qframes/errors.hpp"

namespace qframes {

namespace {

void require_same_size(const QVector& a, const QVector& b, const char* op) {
    if (a.size() != b.size()) {
        throw DimensionMismatch(std::string(op) + ": vector lengths " +
                                std::to_string(a.size()) + " and " +
                                std::to_string(b.size()) + " differ");
    }
}

} // namespace

QVector QVector::standard_basis(std::size_t n, std::size_t k) {
    QVector e(n);
    e[k] = Quaternion::one();
    return e;
}

QVector operator+(const QVector& a, const QVector& b) {
    require_same_size(a, b, "vector add");
    QVector out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        out[k] = a[k] + b[k];
    }
    return out;
}

QVector operator-(const QVector& a, const QVector& b) {
    require_same_size(a, b, "vector subtract");
    QVector out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        out[k] = a[k] - b[k];
    }
    return out;
}

QVector operator-(const QVector& u) {
    QVector out(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) {
        out[k] = -u[k];
    }
    return out;
}

QVector operator*(const QVector& u, const Quaternion& q) {
    QVector out(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) {
        out[k] = u[k] * q;
    }
    return out;
}

QVector operator*(const QVector& u, double s) {
    QVector out(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) {
        out[k] = u[k] * s;
    }
    return out;
}

Quaternion inner(const QVector& u, const QVector& v) {
    require_same_size(u, v, "inner product");
    Quaternion acc;
    for (std::size_t k = 0; k < u.size(); ++k) {
        acc += conj(u[k]) * v[k];
    }
    return acc;
}

double norm_sq(const QVector& u) {
    double acc = 0.0;
    for (const Quaternion& q : u) {
        acc += norm_sq(q);
    }
    return acc;
}

double norm(const QVector& u) { return std::sqrt(norm_sq(u)); }

bool is_finite(const QVector& u) {
    for (const Quaternion& q : u) {
        if (!is_finite(q)) {
            return false;
        }
    }
    return true;
}

QVector concat(const QVector& u, const QVector& v) {
    QVector out(u.size() + v.size());
    for (std::size_t k = 0; k < u.size(); ++k) {
        out[k] = u[k];
    }
    for (std::size_t k = 0; k < v.size(); ++k) {
        out[u.size() + k] = v[k];
    }
    return out;
}

QVector slice(const QVector& u, std::size_t offset, std::size_t count) {
    if (offset + count > u.size()) {
        throw DimensionMismatch("vector slice out of range");
    }
    QVector out(count);
    for (std::size_t k = 0; k < count; ++k) {
        out[k] = u[offset + k];
    }
    return out;
}

} // namespace qframes
