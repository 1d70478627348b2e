#include "qframes/quaternion.hpp"

#include <algorithm>
#include <cmath>

#include "qframes/errors.hpp"

namespace qframes {

namespace {

double max_component(const Quaternion& q) {
    return std::max(std::max(std::fabs(q.w), std::fabs(q.x)),
                    std::max(std::fabs(q.y), std::fabs(q.z)));
}

} // namespace

double abs(const Quaternion& q) {
    const double m = max_component(q);
    if (m == 0.0) {
        return 0.0;
    }
    // Per-component power-of-two prescaling: exact, and keeps the squares in
    // range even for denormal or near-overflow components.
    const int e = std::ilogb(m);
    const double ws = std::scalbn(q.w, -e), xs = std::scalbn(q.x, -e);
    const double ys = std::scalbn(q.y, -e), zs = std::scalbn(q.z, -e);
    return std::scalbn(std::sqrt(ws * ws + xs * xs + ys * ys + zs * zs), e);
}

Quaternion inverse(const Quaternion& q, double context_scale) {
    const double m = max_component(q);
    if (m == 0.0) {
        throw ZeroDivision("quaternion inverse: zero input");
    }
    if (context_scale > 0.0 && abs(q) <= 1e-14 * context_scale) {
        throw ZeroDivision("quaternion inverse: input negligible at context scale");
    }
    const int e = std::ilogb(m);
    const Quaternion qs{std::scalbn(q.w, -e), std::scalbn(q.x, -e),
                        std::scalbn(q.y, -e), std::scalbn(q.z, -e)};
    const double n2 = norm_sq(qs); // in [1, 4]
    const Quaternion c = conj(qs);
    // q^{-1} = conj(qs) * 2^{-e} / |qs|^2; the result may round to infinity
    // when the true inverse leaves the double range (denormal inputs).
    return {std::scalbn(c.w / n2, -e), std::scalbn(c.x / n2, -e),
            std::scalbn(c.y / n2, -e), std::scalbn(c.z / n2, -e)};
}

} // namespace qframes
