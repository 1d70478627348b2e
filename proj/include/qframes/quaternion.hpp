#pragma once

#include <cmath>

namespace qframes {

/// One scalar of the quaternion division algebra, q = w + x*i + y*j + z*k.
///
/// Multiplication follows the Hamilton sign table
///   i*i = j*j = k*k = -1,  i*j = -j*i = k,  j*k = -k*j = i,  k*i = -i*k = j,
/// so products do not commute. All components are IEEE doubles; callers are
/// expected to keep NaN/Inf out of the algebra (boundary code validates).
struct Quaternion {
    double w = 0.0; ///< real part
    double x = 0.0; ///< coefficient of i
    double y = 0.0; ///< coefficient of j
    double z = 0.0; ///< coefficient of k

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion real(double r) { return {r, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion zero() { return {}; }
    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr Quaternion& operator+=(const Quaternion& rhs) {
        w += rhs.w;
        x += rhs.x;
        y += rhs.y;
        z += rhs.z;
        return *this;
    }

    constexpr Quaternion& operator-=(const Quaternion& rhs) {
        w -= rhs.w;
        x -= rhs.x;
        y -= rhs.y;
        z -= rhs.z;
        return *this;
    }

    constexpr Quaternion& operator*=(double s) {
        w *= s;
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }

    friend constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend constexpr bool operator!=(const Quaternion& a, const Quaternion& b) {
        return !(a == b);
    }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }

/// Real scalars commute with every quaternion.
constexpr Quaternion operator*(Quaternion q, double s) { return q *= s; }
constexpr Quaternion operator*(double s, Quaternion q) { return q *= s; }

/// Hamilton product (non-commutative).
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double norm_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

/// |q| = sqrt(w^2 + x^2 + y^2 + z^2), safe against overflow/underflow.
double abs(const Quaternion& q);

/// Multiplicative inverse, q^{-1} = conj(q) / |q|^2.
///
/// Throws ZeroDivision when q is exactly zero, or when |q| <= 1e-14 * context_scale
/// for a positive context_scale. Denormal inputs invert correctly (power-of-two
/// prescaling keeps |q|^2 out of the underflow range).
Quaternion inverse(const Quaternion& q, double context_scale = 0.0);

inline bool is_finite(const Quaternion& q) {
    return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) &&
           std::isfinite(q.z);
}

} // namespace qframes
