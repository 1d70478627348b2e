#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qframes/qmatrix.hpp"
#include "qframes/qvector.hpp"

namespace qframes {

/// Dense complex matrix, used for the 2m x 2n adjoint embedding of quaternionic
/// operators and for the Hermitian eigensolver that runs underneath every
/// spectral computation in the library.
class ComplexMatrix {
public:
    using Scalar = std::complex<double>;

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    const std::vector<Scalar>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix conj_transpose(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);

/// Adjoint embedding chi of a quaternionic matrix into complex matrices.
///
/// Every entry splits as q = a + j*b with a, b complex (j*z = conj(z)*j moves
/// complex scalars across j), and
///   chi(Q) = [[A, -conj(B)], [B, conj(A)]].
/// chi is a homomorphism: chi(PQ) = chi(P) chi(Q) and chi(Q*) = chi(Q)*.
ComplexMatrix embed(const QMatrix& q);

/// Inverse of embed. Throws NotEmbeddable when the block symmetry of an
/// embedded matrix is violated beyond tolerance.
QMatrix unembed(const ComplexMatrix& c, double tol = 1e-10);

/// Column vector version of the embedding: u = a + j*b maps to (a; b).
std::vector<std::complex<double>> embed_vector(const QVector& u);
QVector unembed_vector(const std::vector<std::complex<double>>& c);

struct ComplexHermitianEig {
    std::vector<double> values;  ///< ascending
    ComplexMatrix vectors;       ///< orthonormal columns, matching order
};

/// Cyclic two-sided Jacobi rotations on a complex Hermitian matrix; runs until
/// the off-diagonal Frobenius norm falls below ~1e-14 * scale.
ComplexHermitianEig complex_hermitian_eig(const ComplexMatrix& a);

/// Eigenvalues only (ascending); skips the eigenvector accumulation.
std::vector<double> complex_hermitian_eigenvalues(const ComplexMatrix& a);

struct HermitianEig {
    std::vector<double> values;   ///< ascending, one per quaternionic dimension
    std::vector<QVector> vectors; ///< orthonormal right eigenvectors, H v = v * lambda
};

/// Eigendecomposition of a Hermitian quaternionic matrix through the complex
/// embedding. The embedded spectrum carries every eigenvalue twice; the
/// returned list is the de-duplicated half. Throws NotHermitian when
/// ||H - H*|| exceeds 1e-10 * scale.
HermitianEig hermitian_eig(const QMatrix& h);

/// Eigenvalues only (ascending, de-duplicated half of the embedded spectrum).
std::vector<double> hermitian_eigenvalues(const QMatrix& h);

struct Svd {
    std::vector<double> singular_values; ///< descending, length min(m, n)
    std::vector<QVector> left;           ///< orthonormal, dimension m
    std::vector<QVector> right;          ///< orthonormal, dimension n
};

/// Singular value decomposition via the Hermitian eigendecomposition of the
/// augmented operator [[0, Q], [Q*, 0]], whose spectrum is {+sigma, -sigma, 0}.
/// Columns beyond the numerical rank are completed to orthonormal bases.
Svd svd(const QMatrix& q);

/// sigma_max * max(m, n) * 1e-12, the default threshold separating numerical
/// rank from noise. Every rank-sensitive operation accepts an override.
double default_rank_tol(const QMatrix& q, double sigma_max);

/// Operator norm ||Q|| = sigma_max.
double operator_norm(const QMatrix& q);

/// Moore-Penrose pseudoinverse by singular value truncation at tol
/// (tol < 0 selects the default rank tolerance).
QMatrix pinv(const QMatrix& q, double tol = -1.0);

std::size_t rank(const QMatrix& q, double tol = -1.0);

/// Orthonormal basis of the kernel {v : Qv = 0}.
std::vector<QVector> null_basis(const QMatrix& q, double tol = -1.0);

/// Orthonormal basis of the range R(Q).
std::vector<QVector> range_basis(const QMatrix& q, double tol = -1.0);

/// Gram-Schmidt over the right H-module structure. Coefficients are applied
/// as v - sum z_j * <z_j, v> (order matters; scalars sit on the right).
/// Dependent vectors are dropped when the residual falls below
/// 1e-10 * (1 + input norm), or below drop_tol when drop_tol >= 0.
std::vector<QVector> gram_schmidt(const std::vector<QVector>& vs, double drop_tol = -1.0);

/// Orthonormal basis of the orthogonal complement of span(vs) in H^ambient_dim.
std::vector<QVector> orth_complement(const std::vector<QVector>& vs,
                                     std::size_t ambient_dim);

/// Loewner order test: true iff lambda_min(h2 - h1) >= -slack.
/// Both arguments must be Hermitian (throws NotHermitian).
bool psd_geq(const QMatrix& h1, const QMatrix& h2, double slack);

} // namespace qframes
