#include "eigendamage/constitutive.hpp"

#include <cmath>

namespace eigendamage {

double psi(double t, const ConstitutiveParams& p) {
    if (t < 0.0 || std::isnan(t))
        throw std::domain_error("psi: argument must be nonnegative");
    // Case split evaluated as written: strict inequality on the first branch.
    if (t < 0.5 * p.c0)
        return t * t;
    return p.c0 * t - 0.25 * p.c0 * p.c0;
}

double f_surface(double t, const ConstitutiveParams& p) {
    if (t < 0.0 || std::isnan(t))
        throw std::domain_error("f_surface: argument must be nonnegative");
    if (t < 1.0)
        return p.c0 * t;
    return p.c0;
}

double g_star(double up, const ConstitutiveParams& p) {
    const double half = 0.5 * p.c0;
    if (std::fabs(up) > half) {
        const double sgn = (up > 0.0) ? 1.0 : (up < 0.0 ? -1.0 : 0.0);
        return up - sgn * half;
    }
    return 0.0;
}

} // namespace eigendamage
