#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qframes/linalg.hpp"
#include "qframes/qmatrix.hpp"
#include "qframes/qvector.hpp"

namespace qframes {

/// Finite sequence {u_i} in H^n with its cached synthesis matrix T (n x m,
/// column i = u_i) and frame operator S = T T*. The analysis operator is
/// adjoint(T), sending u to the coefficient sequence {<u_i, u>}.
struct FrameSystem {
    std::size_t dim = 0;          ///< n
    std::vector<QVector> vectors; ///< length m
    QMatrix synthesis;            ///< T, n x m
    QMatrix frame_op;             ///< S = T T*, n x n

    std::size_t length() const { return vectors.size(); }
};

/// Builds a FrameSystem, validating shapes and finiteness.
FrameSystem make_frame(const std::vector<QVector>& vectors);

/// theta = adjoint(T).
QMatrix analysis(const FrameSystem& f);

struct FrameBounds {
    double lower; ///< A = lambda_min(S)
    double upper; ///< B = lambda_max(S)
};

FrameBounds frame_bounds(const FrameSystem& f);
bool is_frame(const FrameSystem& f, double rel_tol = 1e-10);
bool is_parseval(const FrameSystem& f, double tol = 1e-9);

/// Outcome of the range-inclusion / factorization / majorization equivalence
/// for a pair of operators with common codomain.
struct DouglasResult {
    bool holds = false;              ///< R(L) subset of R(M) at tolerance
    double residual = 0.0;           ///< ||(I - M pinv(M)) L|| / ||L||
    std::optional<QMatrix> factor;   ///< minimal-norm X with L = M X
    std::optional<double> majorant;  ///< c = ||X||^2, giving L L* <= c M M*
};

/// Tests R(L) subset of R(M) and, when it holds, produces the factor X with
/// L = M X supported on the orthogonal complement of ker(M), together with the
/// majorization constant c = ||X||^2.
DouglasResult douglas_check(const QMatrix& l, const QMatrix& m, double tol = 1e-8);

/// Certification record for "{u_i} is a K-frame": there is A > 0 with
/// A ||K* u||^2 <= sum_i |<u_i, u>|^2 for all u, equivalently R(K) subset R(T).
struct KFrameReport {
    bool is_bessel = true;       ///< finite systems always are
    double bessel_bound = 0.0;   ///< B = lambda_max(S)
    double range_residual = 0.0; ///< ||(I - T pinv(T)) K|| / ||K||
    bool is_kframe = false;
    std::optional<QMatrix> factor;              ///< X with K = T X
    std::optional<double> lower_bound;          ///< A = ||X||^-2
    std::optional<double> optimal_lower_bound;  ///< sup{c : c K K* <= S}, by bisection
    bool unbounded = false;      ///< K = 0; every A > 0 is admissible
    double tolerance = 0.0;      ///< tolerance actually used
};

/// with_optimal controls whether the bisection for the optimal lower bound
/// runs (it dominates the cost of a check and is skipped by internal callers).
KFrameReport kframe_check(const FrameSystem& f, const QMatrix& k, double tol = 1e-8,
                          bool with_optimal = true);

struct OptimalLowerBound {
    double value;
    bool unbounded;
};

/// sup{c >= 0 : c K K* <= S} by bisection to relative width 1e-6; the
/// guaranteed start value ||X||^-2 is a lower bound of the result.
OptimalLowerBound optimal_lower_bound(const FrameSystem& f, const QMatrix& k);

/// Canonical K-dual {X* e_i} from the minimal-norm factor K = T X; satisfies
/// K u = sum_i u_i <v_i, u>.
FrameSystem kdual_canonical(const FrameSystem& f, const QMatrix& k);

/// K-dual from the affine factor family X_W = X + (I - pinv(T) T) W; every
/// m x n parameter W yields a valid K-dual, and the family collapses to the
/// canonical dual when T is injective.
FrameSystem kdual_family(const FrameSystem& f, const QMatrix& k, const QMatrix& w);

/// True iff K = T_f * adjoint(T_d) within tol * (1 + ||K||); tol < 0 selects
/// 1e-9 * (1 + ||T_f||).
bool kdual_verify(const FrameSystem& f, const FrameSystem& d, const QMatrix& k,
                  double tol = -1.0);

/// Whether the dual pair also reconstructs with the roles of f and d swapped;
/// equivalent to K being self-adjoint. Requires kdual_verify(f, d, k).
bool interchange_check(const FrameSystem& f, const FrameSystem& d, const QMatrix& k,
                       double tol = -1.0);

/// {K u_i}; requires f to be a frame, and the image is always a K-frame.
FrameSystem apply_operator(const FrameSystem& f, const QMatrix& k);

/// Bessel system {L* e_i} whose analysis operator is exactly L; inverse of the
/// bijection between Bessel systems and operators into the coefficient space.
FrameSystem bessel_from_operator(const QMatrix& l);

struct KMinimalResult {
    bool minimal = false;
    /// Two verified, distinct K-duals witnessing non-uniqueness (present when
    /// the system is not minimal and K != 0).
    std::optional<std::pair<FrameSystem, FrameSystem>> witness_duals;
};

/// K-minimality (injective synthesis operator, equivalently a unique K-dual).
/// For non-minimal systems the witness pair is built by null-vector mixing,
/// pivoting on the largest-magnitude null coordinate.
KMinimalResult k_minimal_check(const FrameSystem& f, const QMatrix& k, double tol = -1.0);

/// Orthonormal system that is also a Parseval K-frame (operator identity
/// K K* = S).
bool k_orthonormal_check(const FrameSystem& f, const QMatrix& k, double tol = -1.0);

/// The unique K-dual {K* u_i} of a K-orthonormal basis.
FrameSystem k_orthonormal_dual(const FrameSystem& f, const QMatrix& k, double tol = -1.0);

} // namespace qframes
