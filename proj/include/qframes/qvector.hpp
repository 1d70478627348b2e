#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qframes/quaternion.hpp"

namespace qframes {

/// Element of H^n, a right H-module vector: scalars act on the right of each
/// entry, (u * q)[k] = u[k] * q.
class QVector {
public:
    QVector() = default;
    explicit QVector(std::size_t n) : entries_(n) {}
    QVector(std::initializer_list<Quaternion> init) : entries_(init) {}
    explicit QVector(std::vector<Quaternion> entries) : entries_(std::move(entries)) {}

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    Quaternion& operator[](std::size_t k) { return entries_[k]; }
    const Quaternion& operator[](std::size_t k) const { return entries_[k]; }

    auto begin() { return entries_.begin(); }
    auto end() { return entries_.end(); }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    const std::vector<Quaternion>& entries() const { return entries_; }

    /// k-th standard basis vector of H^n.
    static QVector standard_basis(std::size_t n, std::size_t k);

    friend bool operator==(const QVector& a, const QVector& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::vector<Quaternion> entries_;
};

QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator-(const QVector& u);

/// Right scalar action.
QVector operator*(const QVector& u, const Quaternion& q);
QVector operator*(const QVector& u, double s);

/// Hermitian inner product, linear in the second slot:
/// <u, v> = sum_k conj(u[k]) * v[k].
Quaternion inner(const QVector& u, const QVector& v);

double norm(const QVector& u);
double norm_sq(const QVector& u);

bool is_finite(const QVector& u);

QVector concat(const QVector& u, const QVector& v);
QVector slice(const QVector& u, std::size_t offset, std::size_t count);

} // namespace qframes
