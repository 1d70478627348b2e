#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "qframes/frames.hpp"
#include "qframes/qmatrix.hpp"
#include "qframes/qvector.hpp"

namespace qframes {

/// Element of the direct sum H1 (+) H2, stored as the concatenated vector so
/// that the whole frame machinery applies unchanged to combined systems. The
/// inner product is additive across the parts by construction.
struct SuperVector {
    std::size_t dim_left = 0;
    std::size_t dim_right = 0;
    QVector combined;

    QVector left() const { return slice(combined, 0, dim_left); }
    QVector right() const { return slice(combined, dim_left, dim_right); }
};

SuperVector oplus(const QVector& u, const QVector& v);

/// Block-diagonal operator diag(K1, K2); satisfies
/// (K1 (+) K2)(u (+) v) = K1 u (+) K2 v and adjoint(K1 (+) K2) = K1* (+) K2*
/// entrywise exactly.
QMatrix oplus_op(const QMatrix& k1, const QMatrix& k2);

/// Orthogonal projections P1, P2 of H1 (+) H2 onto the two summands:
/// P = P* = P^2, P1 + P2 = I, P1 P2 = 0, all exact (0/1 entries).
std::pair<QMatrix, QMatrix> projections(std::size_t n1, std::size_t n2);

/// Pair of equally long systems {u_i} in H1 and {v_i} in H2 together with the
/// combined system {u_i (+) v_i}; the combined synthesis operator is the
/// vertical stack [T1; T2].
struct SuperFrame {
    FrameSystem left;
    FrameSystem right;
    FrameSystem combined;

    std::size_t dim_left() const { return left.dim; }
    std::size_t dim_right() const { return right.dim; }
    std::size_t length() const { return left.length(); }
};

SuperFrame make_super_frame(const FrameSystem& fu, const FrameSystem& fv);

struct SuperBesselReport {
    bool combined_bessel = true;
    bool left_bessel = true;
    bool right_bessel = true;
    bool equivalence = true; ///< combined iff (left and right)
    double bound_left = 0.0;
    double bound_right = 0.0;
    double bound_combined = 0.0;
    bool bound_ok = false;   ///< bound_combined <= 2 max(B1, B2) + 1e-9
};

/// Finite systems are always Bessel; reports the bounds and checks the
/// combined bound against 2 max(B1, B2).
SuperBesselReport super_bessel_equivalence(const SuperFrame& sf);

/// Worst deviation, over the standard basis of H1 (+) H2, between S(u (+) v)
/// and (S1 u + T1 theta2 v) (+) (S2 v + T2 theta1 u).
double super_frame_operator_decomposition(const SuperFrame& sf);

/// Necessary component conditions for a certified K-frame {u_i (+) v_i} with
/// bounds (A, B): with K split row-wise into K1, K2, both restricted
/// inequalities A Kj Kj* <= Sj and Sj <= B I must hold. Throws
/// CertificateInvalid when the certificate itself does not verify.
bool super_kframe_necessary(const SuperFrame& sf, const QMatrix& k, double a, double b,
                            double tol);

/// Component certifications of a block-diagonal super K-frame.
std::pair<KFrameReport, KFrameReport> component_kframes(const SuperFrame& sf,
                                                        const QMatrix& k1,
                                                        const QMatrix& k2, double tol);

struct DuplicateObstruction {
    bool is_super_kframe = false;
    std::optional<SuperVector> witness; ///< u (+) (-u) with nonzero (K1 (+) K2)* image
};

/// {u_i (+) u_i} is a K1 (+) K2-frame exactly when K1 = K2 = 0; otherwise the
/// anti-diagonal witness u (+) (-u) has vanishing analysis coefficients but a
/// nonzero adjoint image.
DuplicateObstruction duplicate_obstruction(const FrameSystem& f, const QMatrix& k1,
                                           const QMatrix& k2, double tol = 1e-10);

struct OrthogonalRangesResult {
    bool applies = false;            ///< T2 theta1 = T1 theta2 = 0 at tolerance
    std::optional<SuperFrame> super_frame;
    double lower_bound = 0.0;        ///< min(A1, A2)
    double cross_residual_left = 0.0;  ///< ||T2 theta1||
    double cross_residual_right = 0.0; ///< ||T1 theta2||
};

/// Sufficient condition: when the analysis ranges are orthogonal, the direct
/// sum of a K1-frame and a K2-frame is a K1 (+) K2-frame with lower bound
/// min(A1, A2). Throws ComponentNotCertified when either component fails its
/// own certification.
OrthogonalRangesResult orthogonal_ranges_sufficient(const FrameSystem& fu,
                                                    const QMatrix& k1,
                                                    const FrameSystem& fv,
                                                    const QMatrix& k2, double tol = 1e-9);

struct RangeConditionReport {
    bool range_k1_in_t1_null_t2 = false;
    double residual_k1 = 0.0;
    bool range_k2_in_t2_null_t1 = false;
    double residual_k2 = 0.0;
};

/// Necessary range conditions for a certified block super K-frame:
/// R(K1) inside T1(N(T2)) and R(K2) inside T2(N(T1)).
RangeConditionReport necessary_range_condition(const SuperFrame& sf, const QMatrix& k1,
                                               const QMatrix& k2, double tol = 1e-8);

struct MinimalityDiagnostics {
    bool left_minimal = false;
    bool right_minimal = false;
    double norm_k1 = 0.0;
    double norm_k2 = 0.0;
};

/// For a certified super K1 (+) K2-frame, minimality of one component forces
/// the opposite operator to vanish; throws AssertionFailure carrying the
/// violating norm if the forced operator is not numerically zero.
MinimalityDiagnostics minimality_kills_operator(const SuperFrame& sf, const QMatrix& k1,
                                                const QMatrix& k2, double tol = 1e-8);

/// K-minimality of the combined system, decided by rank of the stacked
/// synthesis operator and cross-checked against N(T1) and N(T2) directly.
bool super_minimal_check(const SuperFrame& sf, const QMatrix& k, double tol = 1e-8);

/// Sufficient condition for combined minimality: closure(R(theta1)) equals the
/// orthogonal complement of R(theta2) in the coefficient space.
bool minimal_sufficiency(const FrameSystem& fu, const QMatrix& k1, const FrameSystem& fv,
                         const QMatrix& k2, double tol = 1e-8);

/// A K1 (+) K2-dual of a super frame splits into component duals.
std::pair<bool, bool> super_dual_split(const SuperFrame& sf, const SuperFrame& sd,
                                       const QMatrix& k1, const QMatrix& k2,
                                       double tol = -1.0);

struct DualCombineResult {
    bool equivalent = false;      ///< both cross products vanish at tolerance
    double cross_residual_left = 0.0;  ///< ||T2 theta(DU)||
    double cross_residual_right = 0.0; ///< ||T1 theta(DV)||
    bool combined_dual = false;   ///< combined pair verifies as K1 (+) K2-dual
};

/// Component duals combine into a super dual exactly when the cross operators
/// T2 theta(DU) and T1 theta(DV) vanish; both directions of the equivalence
/// are evaluated and must agree.
DualCombineResult super_dual_combine(const FrameSystem& fu, const FrameSystem& du,
                                     const QMatrix& k1, const FrameSystem& fv,
                                     const FrameSystem& dv, const QMatrix& k2,
                                     double tol = 1e-9);

} // namespace qframes
