#include "qframes/frames.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qframes/errors.hpp"

namespace qframes {

namespace {

void require_operator_on(const FrameSystem& f, const QMatrix& k, const char* op) {
    if (k.rows() != f.dim || k.cols() != f.dim) {
        throw DimensionMismatch(std::string(op) + ": operator is " +
                                std::to_string(k.rows()) + "x" + std::to_string(k.cols()) +
                                ", expected " + std::to_string(f.dim) + "x" +
                                std::to_string(f.dim));
    }
}

double default_dual_tol(const FrameSystem& f) {
    return 1e-9 * (1.0 + operator_norm(f.synthesis));
}

/// Largest c with c * kk_star <= s, bisected from the guaranteed value lo.
double bisect_lower_bound(const QMatrix& kk_star, const QMatrix& s, double lo) {
    const std::vector<double> eig_s = hermitian_eigenvalues(s);
    const std::vector<double> eig_k = hermitian_eigenvalues(kk_star);
    const double s_max = eig_s.back();
    const double slack = 1e-10 * std::max(1.0, s_max);

    const double k_max = eig_k.back();
    const double positive_floor = k_max * static_cast<double>(kk_star.rows()) * 1e-12;
    double k_min_pos = 0.0;
    for (double lambda : eig_k) {
        if (lambda > positive_floor) {
            k_min_pos = lambda;
            break;
        }
    }
    if (k_min_pos <= 0.0) {
        return std::numeric_limits<double>::infinity();
    }

    const auto feasible = [&](double c) { return psd_geq(kk_star * c, s, slack); };

    double hi = std::max(s_max / k_min_pos, lo) * 2.0;
    for (int tries = 0; tries < 5 && feasible(hi); ++tries) {
        lo = hi;
        hi *= 4.0;
    }
    for (int it = 0; it < 60 && (hi - lo) > 1e-6 * std::max(lo, 1e-300); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (feasible(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

} // namespace

FrameSystem make_frame(const std::vector<QVector>& vectors) {
    if (vectors.empty()) {
        throw DimensionMismatch("make_frame: at least one vector required");
    }
    const std::size_t n = vectors.front().size();
    if (n == 0) {
        throw DimensionMismatch("make_frame: ambient dimension must be positive");
    }
    for (const QVector& v : vectors) {
        if (v.size() != n) {
            throw DimensionMismatch("make_frame: mixed vector dimensions");
        }
        if (!is_finite(v)) {
            throw Error("make_frame: non-finite vector component");
        }
    }
    FrameSystem f;
    f.dim = n;
    f.vectors = vectors;
    f.synthesis = QMatrix::from_columns(vectors);
    f.frame_op = f.synthesis * adjoint(f.synthesis);
    return f;
}

QMatrix analysis(const FrameSystem& f) { return adjoint(f.synthesis); }

FrameBounds frame_bounds(const FrameSystem& f) {
    const std::vector<double> values = hermitian_eigenvalues(f.frame_op);
    return {values.front(), values.back()};
}

bool is_frame(const FrameSystem& f, double rel_tol) {
    const FrameBounds b = frame_bounds(f);
    return b.lower > rel_tol * std::max(1.0, b.upper);
}

bool is_parseval(const FrameSystem& f, double tol) {
    const FrameBounds b = frame_bounds(f);
    return std::max(std::fabs(b.lower - 1.0), std::fabs(b.upper - 1.0)) <= tol;
}

DouglasResult douglas_check(const QMatrix& l, const QMatrix& m, double tol) {
    if (l.rows() != m.rows()) {
        throw DimensionMismatch("douglas_check: codomain dimensions differ");
    }
    DouglasResult out;
    const double l_norm = operator_norm(l);
    if (l_norm == 0.0) {
        out.holds = true;
        out.residual = 0.0;
        out.factor = QMatrix(m.cols(), l.cols());
        out.majorant = 0.0;
        return out;
    }
    const QMatrix m_pinv = pinv(m);
    const QMatrix projected = m * (m_pinv * l);
    out.residual = operator_norm(l - projected) / l_norm;
    out.holds = out.residual <= tol;
    if (out.holds) {
        QMatrix x = m_pinv * l;
        const double c = operator_norm(x);
        out.factor = std::move(x);
        out.majorant = c * c;
    }
    return out;
}

KFrameReport kframe_check(const FrameSystem& f, const QMatrix& k, double tol,
                          bool with_optimal) {
    require_operator_on(f, k, "kframe_check");
    KFrameReport report;
    report.tolerance = tol;

    report.bessel_bound = hermitian_eigenvalues(f.frame_op).back();
    report.is_bessel = true;

    const DouglasResult d = douglas_check(k, f.synthesis, tol);
    report.range_residual = d.residual;
    report.is_kframe = d.holds;
    if (!d.holds) {
        return report;
    }

    report.factor = d.factor;
    const double x_norm_sq = *d.majorant;
    if (x_norm_sq == 0.0) {
        // K = 0 at working precision: every positive lower bound is admissible.
        report.unbounded = true;
        return report;
    }
    report.lower_bound = 1.0 / x_norm_sq;

    if (with_optimal) {
        const QMatrix kk_star = k * adjoint(k);
        const double optimal =
            bisect_lower_bound(kk_star, f.frame_op, *report.lower_bound);
        if (std::isinf(optimal)) {
            report.unbounded = true;
        } else {
            report.optimal_lower_bound = optimal;
        }
    }
    return report;
}

OptimalLowerBound optimal_lower_bound(const FrameSystem& f, const QMatrix& k) {
    const KFrameReport report = kframe_check(f, k);
    if (!report.is_kframe) {
        throw NotAKFrame("optimal_lower_bound: system is not a K-frame (range residual " +
                         std::to_string(report.range_residual) + ")");
    }
    if (report.unbounded) {
        return {std::numeric_limits<double>::infinity(), true};
    }
    return {*report.optimal_lower_bound, false};
}

namespace {

FrameSystem dual_from_factor(const QMatrix& x, std::size_t dim) {
    // v_i = X* e_i, the conjugated i-th row of X.
    std::vector<QVector> duals;
    duals.reserve(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        QVector v(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            v[r] = conj(x(i, r));
        }
        duals.push_back(std::move(v));
    }
    return make_frame(duals);
}

QMatrix required_factor(const FrameSystem& f, const QMatrix& k, double tol,
                        const char* op) {
    const KFrameReport report = kframe_check(f, k, tol, /*with_optimal=*/false);
    if (!report.is_kframe) {
        throw NotAKFrame(std::string(op) + ": system is not a K-frame (range residual " +
                         std::to_string(report.range_residual) + ")");
    }
    return *report.factor;
}

} // namespace

FrameSystem kdual_canonical(const FrameSystem& f, const QMatrix& k) {
    const QMatrix x = required_factor(f, k, 1e-8, "kdual_canonical");
    return dual_from_factor(x, f.dim);
}

FrameSystem kdual_family(const FrameSystem& f, const QMatrix& k, const QMatrix& w) {
    if (w.rows() != f.length() || w.cols() != f.dim) {
        throw DimensionMismatch("kdual_family: parameter W must be " +
                                std::to_string(f.length()) + "x" + std::to_string(f.dim));
    }
    const QMatrix x = required_factor(f, k, 1e-8, "kdual_family");
    const QMatrix t_pinv = pinv(f.synthesis);
    const QMatrix null_projector =
        QMatrix::identity(f.length()) - t_pinv * f.synthesis;
    return dual_from_factor(x + null_projector * w, f.dim);
}

bool kdual_verify(const FrameSystem& f, const FrameSystem& d, const QMatrix& k,
                  double tol) {
    require_operator_on(f, k, "kdual_verify");
    if (d.dim != f.dim || d.length() != f.length()) {
        throw DimensionMismatch("kdual_verify: frame and dual shapes differ");
    }
    if (tol < 0.0) {
        tol = default_dual_tol(f);
    }
    const QMatrix reconstruction = f.synthesis * adjoint(d.synthesis);
    const double residual = operator_norm(k - reconstruction);
    return residual <= tol * (1.0 + operator_norm(k));
}

bool interchange_check(const FrameSystem& f, const FrameSystem& d, const QMatrix& k,
                       double tol) {
    if (!kdual_verify(f, d, k, tol)) {
        throw NotADual("interchange_check: the pair is not a K-dual pair");
    }
    const double used_tol = tol < 0.0 ? default_dual_tol(d) : tol;
    const QMatrix swapped = d.synthesis * adjoint(f.synthesis);
    return operator_norm(k - swapped) <= used_tol * (1.0 + operator_norm(k));
}

FrameSystem apply_operator(const FrameSystem& f, const QMatrix& k) {
    require_operator_on(f, k, "apply_operator");
    if (!is_frame(f)) {
        throw NotAFrame("apply_operator: input system is not a frame");
    }
    std::vector<QVector> image;
    image.reserve(f.length());
    for (const QVector& u : f.vectors) {
        image.push_back(k * u);
    }
    return make_frame(image);
}

FrameSystem bessel_from_operator(const QMatrix& l) {
    if (l.rows() == 0 || l.cols() == 0) {
        throw DimensionMismatch("bessel_from_operator: degenerate operator");
    }
    // {L* e_i}: conjugated rows of L. The analysis operator of the result is L
    // exactly (conjugation cancels bit-for-bit).
    std::vector<QVector> vs;
    vs.reserve(l.rows());
    for (std::size_t i = 0; i < l.rows(); ++i) {
        QVector v(l.cols());
        for (std::size_t c = 0; c < l.cols(); ++c) {
            v[c] = conj(l(i, c));
        }
        vs.push_back(std::move(v));
    }
    return make_frame(vs);
}

KMinimalResult k_minimal_check(const FrameSystem& f, const QMatrix& k, double tol) {
    const double check_tol = tol < 0.0 ? 1e-8 : tol;
    const QMatrix x = required_factor(f, k, check_tol, "k_minimal_check");

    KMinimalResult out;
    out.minimal = rank(f.synthesis) == f.length();

    if (out.minimal) {
        // With injective T the null-space correction vanishes and the dual
        // family collapses onto the canonical dual; spot-check one parameter.
        QMatrix w(f.length(), f.dim);
        for (std::size_t r = 0; r < w.rows(); ++r) {
            for (std::size_t c = 0; c < w.cols(); ++c) {
                w(r, c) = Quaternion(1.0, -0.5, 0.25, 0.125);
            }
        }
        const FrameSystem canonical = dual_from_factor(x, f.dim);
        const FrameSystem alternate = kdual_family(f, k, w);
        double dist = 0.0;
        for (std::size_t i = 0; i < canonical.length(); ++i) {
            dist = std::max(dist, norm(canonical.vectors[i] - alternate.vectors[i]));
        }
        const double collapse_tol =
            1e-8 * (1.0 + operator_norm(x)) * (1.0 + frobenius_norm(w));
        if (dist > collapse_tol) {
            throw AssertionFailure("k_minimal_check: dual family failed to collapse", dist);
        }
        return out;
    }

    if (operator_norm(k) == 0.0) {
        return out;
    }

    // Non-minimal with K != 0: mix the canonical dual along a null vector of T
    // to produce a second, distinct dual. Pivot on the largest null coordinate
    // to keep the quotient coefficients well scaled.
    const std::vector<QVector> kernel = null_basis(f.synthesis);
    if (kernel.empty()) {
        throw AssertionFailure("k_minimal_check: deficient rank but empty kernel", 0.0);
    }
    const QVector& x0 = kernel.front();
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < x0.size(); ++i) {
        if (abs(x0[i]) > abs(x0[pivot])) {
            pivot = i;
        }
    }

    const FrameSystem canonical = dual_from_factor(x, f.dim);
    std::vector<QVector> mixed = canonical.vectors;
    const Quaternion pivot_inv = inverse(x0[pivot]);
    for (std::size_t i = 0; i < mixed.size(); ++i) {
        if (i == pivot) {
            mixed[i] = QVector(f.dim);
            continue;
        }
        const Quaternion alpha = -(x0[i] * pivot_inv);
        mixed[i] = canonical.vectors[i] + canonical.vectors[pivot] * conj(alpha);
    }
    FrameSystem second = make_frame(mixed);

    if (!kdual_verify(f, canonical, k) || !kdual_verify(f, second, k)) {
        throw AssertionFailure("k_minimal_check: witness dual failed verification",
                               operator_norm(k - f.synthesis * adjoint(second.synthesis)));
    }
    out.witness_duals = std::make_pair(canonical, std::move(second));
    return out;
}

bool k_orthonormal_check(const FrameSystem& f, const QMatrix& k, double tol) {
    require_operator_on(f, k, "k_orthonormal_check");
    if (tol < 0.0) {
        tol = 1e-9;
    }
    // Orthonormal system: Gram matrix T*T = I entrywise.
    double gram_dev = 0.0;
    for (std::size_t i = 0; i < f.length(); ++i) {
        for (std::size_t j = 0; j < f.length(); ++j) {
            const Quaternion g = inner(f.vectors[i], f.vectors[j]);
            const Quaternion expected = i == j ? Quaternion::one() : Quaternion::zero();
            gram_dev = std::max(gram_dev, abs(g - expected));
        }
    }
    if (gram_dev > tol) {
        return false;
    }
    // Parseval K-frame in operator form: K K* = S.
    const QMatrix kk_star = k * adjoint(k);
    const double k_norm = operator_norm(k);
    const double parseval_dev = operator_norm(kk_star - f.frame_op);
    return parseval_dev <= tol * (1.0 + k_norm * k_norm);
}

FrameSystem k_orthonormal_dual(const FrameSystem& f, const QMatrix& k, double tol) {
    if (!k_orthonormal_check(f, k, tol)) {
        throw NotKOrthonormal("k_orthonormal_dual: system is not a K-orthonormal basis");
    }
    const QMatrix k_star = adjoint(k);
    std::vector<QVector> duals;
    duals.reserve(f.length());
    for (const QVector& u : f.vectors) {
        duals.push_back(k_star * u);
    }
    FrameSystem d = make_frame(duals);
    if (!kdual_verify(f, d, k)) {
        throw AssertionFailure(
            "k_orthonormal_dual: {K* u_i} failed dual verification",
            operator_norm(k - f.synthesis * adjoint(d.synthesis)));
    }
    return d;
}

} // namespace qframes
