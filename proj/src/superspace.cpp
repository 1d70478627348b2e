#include "qframes/superspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qframes/errors.hpp"
#include "qframes/linalg.hpp"

namespace qframes {

namespace {

double dist_to_span(const QVector& v, const std::vector<QVector>& basis) {
    QVector w = v;
    for (int pass = 0; pass < 2; ++pass) {
        for (const QVector& z : basis) {
            w = w - z * inner(z, w);
        }
    }
    return norm(w);
}

double cross_scale(const QMatrix& t1, const QMatrix& t2) {
    return (1.0 + operator_norm(t1)) * (1.0 + operator_norm(t2));
}

} // namespace

SuperVector oplus(const QVector& u, const QVector& v) {
    return SuperVector{u.size(), v.size(), concat(u, v)};
}

QMatrix oplus_op(const QMatrix& k1, const QMatrix& k2) { return block_diag(k1, k2); }

std::pair<QMatrix, QMatrix> projections(std::size_t n1, std::size_t n2) {
    const std::size_t n = n1 + n2;
    QMatrix p1(n, n), p2(n, n);
    for (std::size_t k = 0; k < n1; ++k) {
        p1(k, k) = Quaternion::one();
    }
    for (std::size_t k = n1; k < n; ++k) {
        p2(k, k) = Quaternion::one();
    }
    return {p1, p2};
}

SuperFrame make_super_frame(const FrameSystem& fu, const FrameSystem& fv) {
    if (fu.length() != fv.length()) {
        throw DimensionMismatch("make_super_frame: component lengths " +
                                std::to_string(fu.length()) + " and " +
                                std::to_string(fv.length()) + " differ");
    }
    std::vector<QVector> combined;
    combined.reserve(fu.length());
    for (std::size_t i = 0; i < fu.length(); ++i) {
        combined.push_back(concat(fu.vectors[i], fv.vectors[i]));
    }
    return SuperFrame{fu, fv, make_frame(combined)};
}

SuperBesselReport super_bessel_equivalence(const SuperFrame& sf) {
    SuperBesselReport report;
    report.bound_left = frame_bounds(sf.left).upper;
    report.bound_right = frame_bounds(sf.right).upper;
    report.bound_combined = frame_bounds(sf.combined).upper;
    report.combined_bessel = true;
    report.left_bessel = true;
    report.right_bessel = true;
    report.equivalence = report.combined_bessel == (report.left_bessel && report.right_bessel);
    report.bound_ok =
        report.bound_combined <= 2.0 * std::max(report.bound_left, report.bound_right) + 1e-9;
    return report;
}

double super_frame_operator_decomposition(const SuperFrame& sf) {
    const QMatrix& t1 = sf.left.synthesis;
    const QMatrix& t2 = sf.right.synthesis;
    const QMatrix theta1 = analysis(sf.left);
    const QMatrix theta2 = analysis(sf.right);

    // Predicted block form [[S1, T1 theta2], [T2 theta1, S2]].
    const QMatrix upper_right = t1 * theta2;
    const QMatrix lower_left = t2 * theta1;
    const std::size_t n1 = sf.dim_left();
    const std::size_t n = n1 + sf.dim_right();

    QMatrix predicted(n, n);
    for (std::size_t r = 0; r < n1; ++r) {
        for (std::size_t c = 0; c < n1; ++c) {
            predicted(r, c) = sf.left.frame_op(r, c);
        }
        for (std::size_t c = n1; c < n; ++c) {
            predicted(r, c) = upper_right(r, c - n1);
        }
    }
    for (std::size_t r = n1; r < n; ++r) {
        for (std::size_t c = 0; c < n1; ++c) {
            predicted(r, c) = lower_left(r - n1, c);
        }
        for (std::size_t c = n1; c < n; ++c) {
            predicted(r, c) = sf.right.frame_op(r - n1, c - n1);
        }
    }

    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const QVector e = QVector::standard_basis(n, k);
        worst = std::max(worst, norm(sf.combined.frame_op * e - predicted * e));
    }
    return worst;
}

bool super_kframe_necessary(const SuperFrame& sf, const QMatrix& k, double a, double b,
                            double tol) {
    const std::size_t n = sf.dim_left() + sf.dim_right();
    if (k.rows() != n || k.cols() != n) {
        throw DimensionMismatch("super_kframe_necessary: operator shape mismatch");
    }
    const double k_norm = operator_norm(k);
    const double scale = std::max({1.0, b, k_norm * k_norm});

    // The certificate itself must verify before its consequences are tested.
    const QMatrix kk_star = k * adjoint(k);
    if (!psd_geq(kk_star * a, sf.combined.frame_op, tol * scale)) {
        throw CertificateInvalid("super_kframe_necessary: lower certificate fails");
    }
    if (frame_bounds(sf.combined).upper > b + tol * scale) {
        throw CertificateInvalid("super_kframe_necessary: upper certificate fails");
    }

    const QMatrix k1 = row_block(k, 0, sf.dim_left());
    const QMatrix k2 = row_block(k, sf.dim_left(), n);

    const QMatrix k1k1 = k1 * adjoint(k1);
    const QMatrix k2k2 = k2 * adjoint(k2);
    bool ok = psd_geq(k1k1 * a, sf.left.frame_op, tol * scale) &&
              psd_geq(k2k2 * a, sf.right.frame_op, tol * scale) &&
              frame_bounds(sf.left).upper <= b + tol * scale &&
              frame_bounds(sf.right).upper <= b + tol * scale;
    if (!ok) {
        return false;
    }

    // Displayed inequalities on the standard probing bases.
    const QMatrix k1_star = adjoint(k1);
    const QMatrix k2_star = adjoint(k2);
    for (std::size_t kk = 0; kk < sf.dim_left() && ok; ++kk) {
        const QVector u = QVector::standard_basis(sf.dim_left(), kk);
        const double lhs = a * norm_sq(k1_star * u);
        const double mid = inner(u, sf.left.frame_op * u).w;
        ok = lhs <= mid + tol * scale && mid <= b * norm_sq(u) + tol * scale;
    }
    for (std::size_t kk = 0; kk < sf.dim_right() && ok; ++kk) {
        const QVector v = QVector::standard_basis(sf.dim_right(), kk);
        const double lhs = a * norm_sq(k2_star * v);
        const double mid = inner(v, sf.right.frame_op * v).w;
        ok = lhs <= mid + tol * scale && mid <= b * norm_sq(v) + tol * scale;
    }
    return ok;
}

std::pair<KFrameReport, KFrameReport> component_kframes(const SuperFrame& sf,
                                                        const QMatrix& k1,
                                                        const QMatrix& k2, double tol) {
    return {kframe_check(sf.left, k1, tol, false), kframe_check(sf.right, k2, tol, false)};
}

DuplicateObstruction duplicate_obstruction(const FrameSystem& f, const QMatrix& k1,
                                           const QMatrix& k2, double tol) {
    if (k1.rows() != f.dim || k1.cols() != f.dim || k2.rows() != f.dim ||
        k2.cols() != f.dim) {
        throw DimensionMismatch("duplicate_obstruction: operator shape mismatch");
    }
    const double n1 = operator_norm(k1);
    const double n2 = operator_norm(k2);
    const SuperFrame duplicated = make_super_frame(f, f);

    DuplicateObstruction out;
    out.is_super_kframe =
        kframe_check(duplicated.combined, oplus_op(k1, k2), 1e-8, false).is_kframe;
    if (n1 <= tol && n2 <= tol) {
        return out;
    }
    // A nonzero operator admits u with K1* u != 0 (or K2* u != 0); any range
    // vector works. The anti-diagonal vector has zero analysis coefficients
    // against {u_i (+) u_i} yet a nonzero adjoint image.
    const QMatrix& nonzero = n1 > tol ? k1 : k2;
    const std::vector<QVector> range = range_basis(nonzero);
    if (!range.empty()) {
        out.witness = oplus(range.front(), -range.front());
    }
    return out;
}

OrthogonalRangesResult orthogonal_ranges_sufficient(const FrameSystem& fu,
                                                    const QMatrix& k1,
                                                    const FrameSystem& fv,
                                                    const QMatrix& k2, double tol) {
    const KFrameReport rep1 = kframe_check(fu, k1, 1e-8, false);
    const KFrameReport rep2 = kframe_check(fv, k2, 1e-8, false);
    if (!rep1.is_kframe || !rep2.is_kframe) {
        throw ComponentNotCertified(
            "orthogonal_ranges_sufficient: component certification failed");
    }

    OrthogonalRangesResult out;
    const QMatrix& t1 = fu.synthesis;
    const QMatrix& t2 = fv.synthesis;
    out.cross_residual_left = operator_norm(t2 * analysis(fu));
    out.cross_residual_right = operator_norm(t1 * analysis(fv));
    const double scale = cross_scale(t1, t2);
    out.applies = out.cross_residual_left <= tol * scale &&
                  out.cross_residual_right <= tol * scale;

    const double a1 =
        rep1.unbounded ? std::numeric_limits<double>::infinity() : *rep1.lower_bound;
    const double a2 =
        rep2.unbounded ? std::numeric_limits<double>::infinity() : *rep2.lower_bound;
    out.lower_bound = std::min(a1, a2);

    if (!out.applies) {
        return out;
    }

    SuperFrame sf = make_super_frame(fu, fv);
    const QMatrix k = oplus_op(k1, k2);
    const KFrameReport combined = kframe_check(sf.combined, k, 1e-8, false);
    if (!combined.is_kframe) {
        throw AssertionFailure(
            "orthogonal_ranges_sufficient: combined system failed certification",
            combined.range_residual);
    }
    if (std::isfinite(out.lower_bound) && out.lower_bound > 0.0) {
        const QMatrix kk_star = k * adjoint(k);
        const double slack = 1e-8 * std::max(1.0, frame_bounds(sf.combined).upper);
        if (!psd_geq(kk_star * out.lower_bound, sf.combined.frame_op, slack)) {
            throw AssertionFailure(
                "orthogonal_ranges_sufficient: min(A1, A2) is not a valid lower bound",
                out.lower_bound);
        }
    }
    out.super_frame = std::move(sf);
    return out;
}

RangeConditionReport necessary_range_condition(const SuperFrame& sf, const QMatrix& k1,
                                               const QMatrix& k2, double tol) {
    const KFrameReport certificate =
        kframe_check(sf.combined, oplus_op(k1, k2), 1e-8, false);
    if (!certificate.is_kframe) {
        throw CertificateInvalid(
            "necessary_range_condition: combined system is not certified");
    }

    const std::vector<QVector> null_t1 = null_basis(sf.left.synthesis);
    const std::vector<QVector> null_t2 = null_basis(sf.right.synthesis);

    std::vector<QVector> t1_of_null_t2, t2_of_null_t1;
    for (const QVector& b : null_t2) {
        t1_of_null_t2.push_back(sf.left.synthesis * b);
    }
    for (const QVector& b : null_t1) {
        t2_of_null_t1.push_back(sf.right.synthesis * b);
    }
    const std::vector<QVector> image1 = gram_schmidt(t1_of_null_t2);
    const std::vector<QVector> image2 = gram_schmidt(t2_of_null_t1);

    RangeConditionReport report;
    for (const QVector& b : range_basis(k1)) {
        report.residual_k1 = std::max(report.residual_k1, dist_to_span(b, image1));
    }
    for (const QVector& b : range_basis(k2)) {
        report.residual_k2 = std::max(report.residual_k2, dist_to_span(b, image2));
    }
    report.range_k1_in_t1_null_t2 = report.residual_k1 <= tol;
    report.range_k2_in_t2_null_t1 = report.residual_k2 <= tol;
    return report;
}

MinimalityDiagnostics minimality_kills_operator(const SuperFrame& sf, const QMatrix& k1,
                                                const QMatrix& k2, double tol) {
    const KFrameReport certificate = kframe_check(sf.combined, oplus_op(k1, k2), 1e-8, false);
    if (!certificate.is_kframe) {
        throw CertificateInvalid("minimality_kills_operator: system is not certified");
    }
    MinimalityDiagnostics diag;
    diag.left_minimal = rank(sf.left.synthesis) == sf.length();
    diag.right_minimal = rank(sf.right.synthesis) == sf.length();
    diag.norm_k1 = operator_norm(k1);
    diag.norm_k2 = operator_norm(k2);

    const double scale = 1.0 + std::max(diag.norm_k1, diag.norm_k2);
    if (diag.left_minimal && diag.norm_k2 > tol * scale) {
        throw AssertionFailure("minimality_kills_operator: left minimal but K2 != 0",
                               diag.norm_k2);
    }
    if (diag.right_minimal && diag.norm_k1 > tol * scale) {
        throw AssertionFailure("minimality_kills_operator: right minimal but K1 != 0",
                               diag.norm_k1);
    }
    return diag;
}

bool super_minimal_check(const SuperFrame& sf, const QMatrix& k, double tol) {
    const KFrameReport certificate = kframe_check(sf.combined, k, 1e-8, false);
    if (!certificate.is_kframe) {
        throw CertificateInvalid("super_minimal_check: system is not certified");
    }
    const bool by_rank = rank(sf.combined.synthesis) == sf.length();

    // Direct route: N(T) = N(T1) intersect N(T2); the intersection is trivial
    // exactly when dim N1 + dim N2 equals dim(N1 + N2).
    const std::vector<QVector> null1 = null_basis(sf.left.synthesis);
    const std::vector<QVector> null2 = null_basis(sf.right.synthesis);
    std::vector<QVector> joined = null1;
    joined.insert(joined.end(), null2.begin(), null2.end());
    const std::size_t sum_dim = gram_schmidt(joined).size();
    const bool by_intersection = sum_dim == null1.size() + null2.size();

    if (by_rank != by_intersection) {
        throw AssertionFailure("super_minimal_check: rank and kernel routes disagree",
                               static_cast<double>(sum_dim));
    }
    (void)tol;
    return by_rank;
}

bool minimal_sufficiency(const FrameSystem& fu, const QMatrix& k1, const FrameSystem& fv,
                         const QMatrix& k2, double tol) {
    if (!kframe_check(fu, k1, 1e-8, false).is_kframe ||
        !kframe_check(fv, k2, 1e-8, false).is_kframe) {
        throw ComponentNotCertified("minimal_sufficiency: component certification failed");
    }
    if (fu.length() != fv.length()) {
        throw DimensionMismatch("minimal_sufficiency: component lengths differ");
    }
    const std::size_t m = fu.length();
    const std::vector<QVector> range1 = range_basis(analysis(fu));
    const std::vector<QVector> range2 = range_basis(analysis(fv));
    const std::vector<QVector> complement2 = orth_complement(range2, m);

    double residual = 0.0;
    for (const QVector& b : range1) {
        residual = std::max(residual, dist_to_span(b, complement2));
    }
    for (const QVector& b : complement2) {
        residual = std::max(residual, dist_to_span(b, range1));
    }
    const bool equal = residual <= tol;
    if (!equal) {
        return false;
    }

    const OrthogonalRangesResult orth = orthogonal_ranges_sufficient(fu, k1, fv, k2);
    if (!orth.applies) {
        throw AssertionFailure(
            "minimal_sufficiency: complementary ranges must be orthogonal",
            std::max(orth.cross_residual_left, orth.cross_residual_right));
    }
    if (!super_minimal_check(*orth.super_frame, oplus_op(k1, k2), tol)) {
        throw AssertionFailure("minimal_sufficiency: combined system is not minimal", 0.0);
    }
    return true;
}

std::pair<bool, bool> super_dual_split(const SuperFrame& sf, const SuperFrame& sd,
                                       const QMatrix& k1, const QMatrix& k2, double tol) {
    if (!kdual_verify(sf.combined, sd.combined, oplus_op(k1, k2), tol)) {
        throw NotADual("super_dual_split: pair is not a combined dual");
    }
    return {kdual_verify(sf.left, sd.left, k1, tol),
            kdual_verify(sf.right, sd.right, k2, tol)};
}

DualCombineResult super_dual_combine(const FrameSystem& fu, const FrameSystem& du,
                                     const QMatrix& k1, const FrameSystem& fv,
                                     const FrameSystem& dv, const QMatrix& k2,
                                     double tol) {
    if (!kdual_verify(fu, du, k1) || !kdual_verify(fv, dv, k2)) {
        throw NotADual("super_dual_combine: component duals do not verify");
    }

    DualCombineResult out;
    const QMatrix theta_du = analysis(du);
    const QMatrix theta_dv = analysis(dv);
    out.cross_residual_left = operator_norm(fv.synthesis * theta_du);
    out.cross_residual_right = operator_norm(fu.synthesis * theta_dv);
    const double scale = std::max(cross_scale(fv.synthesis, du.synthesis),
                                  cross_scale(fu.synthesis, dv.synthesis));
    out.equivalent = out.cross_residual_left <= tol * scale &&
                     out.cross_residual_right <= tol * scale;

    const SuperFrame sf = make_super_frame(fu, fv);
    const SuperFrame sd = make_super_frame(du, dv);
    const double combined_tol =
        4.0 * tol * (1.0 + operator_norm(sf.combined.synthesis));
    out.combined_dual =
        kdual_verify(sf.combined, sd.combined, oplus_op(k1, k2), combined_tol);

    if (out.equivalent != out.combined_dual) {
        throw AssertionFailure(
            "super_dual_combine: cross-term test and combined duality disagree",
            std::max(out.cross_residual_left, out.cross_residual_right));
    }
    return out;
}

} // namespace qframes
