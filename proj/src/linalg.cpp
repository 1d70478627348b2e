#include "qframes/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qframes/errors.hpp"

namespace qframes {

namespace {

using Cplx = std::complex<double>;

double sgn(double x) { return x < 0.0 ? -1.0 : 1.0; }

void require_square(const QMatrix& a, const char* op) {
    if (a.rows() != a.cols()) {
        throw DimensionMismatch(std::string(op) + ": matrix is " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                ", expected square");
    }
}

double matrix_scale(const QMatrix& a) { return std::max(1.0, frobenius_norm(a)); }

/// Entry split q = a + j*b with a = (w, x) and b = (y, -z); the identity
/// j*(y - z i) = y j + z k recovers the original quaternion.
Cplx part_a(const Quaternion& q) { return {q.w, q.x}; }
Cplx part_b(const Quaternion& q) { return {q.y, -q.z}; }
Quaternion from_parts(const Cplx& a, const Cplx& b) {
    return {a.real(), a.imag(), b.real(), -b.imag()};
}

} // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        m(k, k) = 1.0;
    }
    return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("complex matrix multiply: inner dimensions differ");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Cplx ark = a(r, k);
            if (ark == Cplx{}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix conj_transpose(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(c, r) = std::conj(a(r, c));
        }
    }
    return out;
}

double frobenius_norm(const ComplexMatrix& a) {
    double acc = 0.0;
    for (const Cplx& v : a.data()) {
        acc += std::norm(v);
    }
    return std::sqrt(acc);
}

ComplexMatrix embed(const QMatrix& q) {
    const std::size_t m = q.rows(), n = q.cols();
    ComplexMatrix out(2 * m, 2 * n);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const Cplx a = part_a(q(r, c));
            const Cplx b = part_b(q(r, c));
            out(r, c) = a;
            out(r, n + c) = -std::conj(b);
            out(m + r, c) = b;
            out(m + r, n + c) = std::conj(a);
        }
    }
    return out;
}

QMatrix unembed(const ComplexMatrix& c, double tol) {
    if (c.rows() % 2 != 0 || c.cols() % 2 != 0) {
        throw NotEmbeddable("unembed: dimensions must be even");
    }
    const std::size_t m = c.rows() / 2, n = c.cols() / 2;
    const double scale = std::max(1.0, frobenius_norm(c));
    double worst = 0.0;
    QMatrix out(m, n);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t col = 0; col < n; ++col) {
            const Cplx a = c(r, col);
            const Cplx b = c(m + r, col);
            worst = std::max(worst, std::abs(c(r, n + col) + std::conj(b)));
            worst = std::max(worst, std::abs(c(m + r, n + col) - std::conj(a)));
            out(r, col) = from_parts(a, b);
        }
    }
    if (worst > tol * scale) {
        throw NotEmbeddable("unembed: block symmetry violated by " + std::to_string(worst));
    }
    return out;
}

std::vector<Cplx> embed_vector(const QVector& u) {
    std::vector<Cplx> out(2 * u.size());
    for (std::size_t k = 0; k < u.size(); ++k) {
        out[k] = part_a(u[k]);
        out[u.size() + k] = part_b(u[k]);
    }
    return out;
}

QVector unembed_vector(const std::vector<Cplx>& c) {
    if (c.size() % 2 != 0) {
        throw NotEmbeddable("unembed_vector: length must be even");
    }
    const std::size_t n = c.size() / 2;
    QVector out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = from_parts(c[k], c[n + k]);
    }
    return out;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double acc = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (r != c) {
                acc += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(acc);
}

} // namespace

namespace {

/// Two-sided cyclic Jacobi; when accumulate is false the rotations are not
/// gathered and only the diagonal is meaningful on exit.
void jacobi_sweeps(ComplexMatrix& a, ComplexMatrix* v, bool accumulate) {
    const std::size_t n = a.rows();
    const double scale = std::max(1.0, frobenius_norm(a));
    const double stop = 1e-14 * scale;
    const int max_sweeps = 100;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_norm(a) <= stop) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Cplx beta = a(p, q);
                const double babs = std::abs(beta);
                if (babs <= 1e-300) {
                    continue;
                }
                // Unitary 2x2 rotation R = [[c, s*phase], [-s*conj(phase), c]]
                // annihilating the (p, q) entry of [[app, beta], [conj(beta), aqq]].
                const Cplx phase = beta / babs;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * babs);
                const double t = sgn(tau) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const Cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(phase) * akq;
                    a(k, q) = s * phase * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * std::conj(phase) * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                if (accumulate) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const Cplx vkp = (*v)(k, p), vkq = (*v)(k, q);
                        (*v)(k, p) = c * vkp - s * std::conj(phase) * vkq;
                        (*v)(k, q) = s * phase * vkp + c * vkq;
                    }
                }
            }
        }
    }
}

} // namespace

ComplexHermitianEig complex_hermitian_eig(const ComplexMatrix& input) {
    if (input.rows() != input.cols()) {
        throw DimensionMismatch("complex_hermitian_eig: matrix not square");
    }
    const std::size_t n = input.rows();
    ComplexMatrix a = input;
    ComplexMatrix v = ComplexMatrix::identity(n);
    jacobi_sweeps(a, &v, true);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    ComplexHermitianEig out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out.values[i] = a(order[i], order[i]).real();
        for (std::size_t k = 0; k < n; ++k) {
            out.vectors(k, i) = v(k, order[i]);
        }
    }
    return out;
}

std::vector<double> complex_hermitian_eigenvalues(const ComplexMatrix& input) {
    if (input.rows() != input.cols()) {
        throw DimensionMismatch("complex_hermitian_eigenvalues: matrix not square");
    }
    ComplexMatrix a = input;
    jacobi_sweeps(a, nullptr, false);
    std::vector<double> values(a.rows());
    for (std::size_t k = 0; k < a.rows(); ++k) {
        values[k] = a(k, k).real();
    }
    std::sort(values.begin(), values.end());
    return values;
}

HermitianEig hermitian_eig(const QMatrix& h) {
    require_square(h, "hermitian_eig");
    const std::size_t n = h.rows();
    const double scale = matrix_scale(h);
    if (!is_hermitian(h, 1e-10 * scale)) {
        throw NotHermitian("hermitian_eig: matrix is not Hermitian at tolerance");
    }
    // Exact symmetrization keeps the embedded matrix Hermitian to the bit.
    const QMatrix hs = (h + adjoint(h)) * 0.5;
    const ComplexHermitianEig ce = complex_hermitian_eig(embed(hs));

    // Each quaternionic eigenvector v contributes the complex pair
    // {chi(v), chi(v*j)} with one eigenvalue, so the embedded spectrum is
    // doubled. A greedy sweep in ascending order keeps one representative of
    // every right H-line: candidates collapsing under Gram-Schmidt against the
    // accepted set are partners of an earlier vector.
    HermitianEig out;
    for (std::size_t idx = 0; idx < 2 * n && out.vectors.size() < n; ++idx) {
        std::vector<Cplx> col(2 * n);
        for (std::size_t k = 0; k < 2 * n; ++k) {
            col[k] = ce.vectors(k, idx);
        }
        QVector w = unembed_vector(col);
        for (int pass = 0; pass < 2; ++pass) {
            for (const QVector& z : out.vectors) {
                w = w - z * inner(z, w);
            }
        }
        const double nrm = norm(w);
        if (nrm > 1e-3) {
            out.vectors.push_back(w * (1.0 / nrm));
            out.values.push_back(ce.values[idx]);
        }
    }
    if (out.vectors.size() != n) {
        throw Error("hermitian_eig: eigenvector extraction produced " +
                    std::to_string(out.vectors.size()) + " of " + std::to_string(n) +
                    " vectors");
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const QMatrix& h) {
    require_square(h, "hermitian_eigenvalues");
    const double scale = matrix_scale(h);
    if (!is_hermitian(h, 1e-10 * scale)) {
        throw NotHermitian("hermitian_eigenvalues: matrix is not Hermitian at tolerance");
    }
    const QMatrix hs = (h + adjoint(h)) * 0.5;
    const std::vector<double> doubled = complex_hermitian_eigenvalues(embed(hs));
    // The embedded spectrum pairs up exactly; every other value is the
    // quaternionic spectrum.
    std::vector<double> values;
    values.reserve(doubled.size() / 2);
    for (std::size_t k = 0; k < doubled.size(); k += 2) {
        values.push_back(doubled[k]);
    }
    return values;
}

double default_rank_tol(const QMatrix& q, double sigma_max) {
    return sigma_max * static_cast<double>(std::max(q.rows(), q.cols())) * 1e-12;
}

namespace {

/// Spectral data shared by svd/pinv/rank/null_basis/range_basis: all n right
/// singular vectors with their singular values, descending.
struct SvdCore {
    std::vector<double> sigma;  ///< length n
    std::vector<QVector> right; ///< orthonormal, H^n
};

/// One-sided Jacobi on the embedded matrix: plane rotations implicitly
/// diagonalize the Gram matrix chi(Q)^H chi(Q) by orthogonalizing column
/// pairs. Avoids forming Q*Q, so small singular values keep absolute accuracy
/// ~eps * sigma_max instead of the sqrt(eps) floor of the squared problem.
SvdCore svd_core(const QMatrix& q) {
    const std::size_t m = q.rows(), n = q.cols();
    ComplexMatrix a = embed(q);
    ComplexMatrix v = ComplexMatrix::identity(2 * n);
    const std::size_t rows = 2 * m, cols = 2 * n;

    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < cols; ++p) {
            for (std::size_t qq = p + 1; qq < cols; ++qq) {
                Cplx gpq{};
                double gpp = 0.0, gqq = 0.0;
                for (std::size_t k = 0; k < rows; ++k) {
                    gpq += std::conj(a(k, p)) * a(k, qq);
                    gpp += std::norm(a(k, p));
                    gqq += std::norm(a(k, qq));
                }
                const double babs = std::abs(gpq);
                if (babs <= 1e-14 * std::sqrt(gpp * gqq) || babs == 0.0) {
                    continue;
                }
                rotated = true;
                const Cplx phase = gpq / babs;
                const double tau = (gqq - gpp) / (2.0 * babs);
                const double t = sgn(tau) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < rows; ++k) {
                    const Cplx akp = a(k, p), akq = a(k, qq);
                    a(k, p) = c * akp - s * std::conj(phase) * akq;
                    a(k, qq) = s * phase * akp + c * akq;
                }
                for (std::size_t k = 0; k < cols; ++k) {
                    const Cplx vkp = v(k, p), vkq = v(k, qq);
                    v(k, p) = c * vkp - s * std::conj(phase) * vkq;
                    v(k, qq) = s * phase * vkp + c * vkq;
                }
            }
        }
        if (!rotated) {
            break;
        }
    }

    std::vector<double> col_norm(cols, 0.0);
    for (std::size_t p = 0; p < cols; ++p) {
        double acc = 0.0;
        for (std::size_t k = 0; k < rows; ++k) {
            acc += std::norm(a(k, p));
        }
        col_norm[p] = std::sqrt(acc);
    }
    std::vector<std::size_t> order(cols);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return col_norm[i] > col_norm[j]; });

    // The embedded spectrum is doubled: each quaternionic right singular
    // vector contributes the complex pair {chi(v), chi(v*j)}. A greedy sweep
    // in descending order keeps one representative per right H-line.
    SvdCore core;
    for (std::size_t oi = 0; oi < cols && core.right.size() < n; ++oi) {
        const std::size_t p = order[oi];
        std::vector<Cplx> col(cols);
        for (std::size_t k = 0; k < cols; ++k) {
            col[k] = v(k, p);
        }
        QVector w = unembed_vector(col);
        for (int pass = 0; pass < 2; ++pass) {
            for (const QVector& z : core.right) {
                w = w - z * inner(z, w);
            }
        }
        const double nrm = norm(w);
        if (nrm > 1e-3) {
            core.right.push_back(w * (1.0 / nrm));
            core.sigma.push_back(col_norm[p]);
        }
    }
    if (core.right.size() != n) {
        throw Error("svd: right singular vector extraction failed");
    }
    return core;
}

} // namespace

Svd svd(const QMatrix& q) {
    const std::size_t m = q.rows(), n = q.cols();
    Svd out;
    if (m == 0 || n == 0) {
        return out;
    }
    const SvdCore core = svd_core(q);
    const std::size_t k = std::min(m, n);
    const double cutoff = default_rank_tol(q, core.sigma.front());

    out.singular_values.assign(core.sigma.begin(), core.sigma.begin() + k);
    out.right.assign(core.right.begin(), core.right.begin() + k);
    for (std::size_t i = 0; i < k; ++i) {
        if (core.sigma[i] > cutoff) {
            const QVector u = q * core.right[i];
            out.left.push_back(u * (1.0 / norm(u)));
        }
    }
    if (out.left.size() < k) {
        // Rank-deficient tail: complete to an orthonormal set; those columns
        // pair with sigma = 0 and only matter for basis extraction.
        const std::vector<QVector> uc = orth_complement(out.left, m);
        const std::size_t missing = k - out.left.size();
        for (std::size_t i = 0; i < missing; ++i) {
            out.left.push_back(uc[i]);
        }
    }
    return out;
}

double operator_norm(const QMatrix& q) {
    if (q.rows() == 0 || q.cols() == 0) {
        return 0.0;
    }
    // sigma_max through the smaller Gram matrix; the top of the squared
    // spectrum carries no accuracy penalty.
    const QMatrix gram =
        q.cols() <= q.rows() ? adjoint(q) * q : q * adjoint(q);
    const std::vector<double> lambda = hermitian_eigenvalues(gram);
    return std::sqrt(std::max(lambda.back(), 0.0));
}

QMatrix pinv(const QMatrix& q, double tol) {
    if (q.rows() == 0 || q.cols() == 0) {
        return QMatrix(q.cols(), q.rows());
    }
    const SvdCore core = svd_core(q);
    if (tol < 0.0) {
        tol = default_rank_tol(q, core.sigma.front());
    }
    QMatrix out(q.cols(), q.rows());
    for (std::size_t i = 0; i < core.sigma.size(); ++i) {
        if (core.sigma[i] > tol) {
            // Rebuilding u as Q v keeps the triple (u, sigma, v) consistent to
            // rounding, which is what the Penrose identities feel.
            const QVector u = q * core.right[i];
            const double nu = norm(u);
            if (nu > 0.0) {
                out = out + outer(core.right[i], u) * (1.0 / (nu * nu));
            }
        }
    }
    return out;
}

std::size_t rank(const QMatrix& q, double tol) {
    if (q.rows() == 0 || q.cols() == 0) {
        return 0;
    }
    const SvdCore core = svd_core(q);
    if (tol < 0.0) {
        tol = default_rank_tol(q, core.sigma.front());
    }
    std::size_t r = 0;
    for (double sigma : core.sigma) {
        if (sigma > tol) {
            ++r;
        }
    }
    return r;
}

std::vector<QVector> null_basis(const QMatrix& q, double tol) {
    if (q.rows() == 0 || q.cols() == 0) {
        std::vector<QVector> all;
        for (std::size_t i = 0; i < q.cols(); ++i) {
            all.push_back(QVector::standard_basis(q.cols(), i));
        }
        return all;
    }
    const SvdCore core = svd_core(q);
    if (tol < 0.0) {
        tol = default_rank_tol(q, core.sigma.front());
    }
    std::vector<QVector> out;
    for (std::size_t i = 0; i < core.sigma.size(); ++i) {
        if (core.sigma[i] <= tol) {
            out.push_back(core.right[i]);
        }
    }
    return out;
}

std::vector<QVector> range_basis(const QMatrix& q, double tol) {
    if (q.rows() == 0 || q.cols() == 0) {
        return {};
    }
    const SvdCore core = svd_core(q);
    if (tol < 0.0) {
        tol = default_rank_tol(q, core.sigma.front());
    }
    std::vector<QVector> out;
    for (std::size_t i = 0; i < core.sigma.size(); ++i) {
        if (core.sigma[i] > tol) {
            const QVector u = q * core.right[i];
            out.push_back(u * (1.0 / norm(u)));
        }
    }
    return out;
}

std::vector<QVector> gram_schmidt(const std::vector<QVector>& vs, double drop_tol) {
    std::vector<QVector> out;
    for (const QVector& v : vs) {
        const double drop = drop_tol >= 0.0 ? drop_tol : 1e-10 * (1.0 + norm(v));
        QVector w = v;
        // Two orthogonalization passes keep survivors orthogonal even after
        // heavy cancellation in the first pass.
        for (int pass = 0; pass < 2; ++pass) {
            for (const QVector& z : out) {
                w = w - z * inner(z, w);
            }
        }
        const double nrm = norm(w);
        if (nrm > drop) {
            out.push_back(w * (1.0 / nrm));
        }
    }
    return out;
}

std::vector<QVector> orth_complement(const std::vector<QVector>& vs,
                                     std::size_t ambient_dim) {
    for (const QVector& v : vs) {
        if (v.size() != ambient_dim) {
            throw DimensionMismatch("orth_complement: vector dimension differs from ambient");
        }
    }
    const std::vector<QVector> basis = gram_schmidt(vs);
    std::vector<QVector> out;
    const std::size_t want = ambient_dim - basis.size();
    for (std::size_t kk = 0; kk < ambient_dim && out.size() < want; ++kk) {
        QVector w = QVector::standard_basis(ambient_dim, kk);
        for (int pass = 0; pass < 2; ++pass) {
            for (const QVector& z : basis) {
                w = w - z * inner(z, w);
            }
            for (const QVector& z : out) {
                w = w - z * inner(z, w);
            }
        }
        const double nrm = norm(w);
        if (nrm > 1e-10) {
            out.push_back(w * (1.0 / nrm));
        }
    }
    return out;
}

bool psd_geq(const QMatrix& h1, const QMatrix& h2, double slack) {
    require_square(h1, "psd_geq");
    require_square(h2, "psd_geq");
    if (h1.rows() != h2.rows()) {
        throw DimensionMismatch("psd_geq: operand dimensions differ");
    }
    const double scale = std::max(matrix_scale(h1), matrix_scale(h2));
    if (!is_hermitian(h1, 1e-10 * scale) || !is_hermitian(h2, 1e-10 * scale)) {
        throw NotHermitian("psd_geq: operands must be Hermitian");
    }
    return hermitian_eigenvalues(h2 - h1).front() >= -slack;
}

} // namespace qframes
