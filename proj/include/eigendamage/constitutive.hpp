#pragma once

#include <stdexcept>

namespace eigendamage {

/// Material constants of the cohesive model: c0 sets the stress scale of
/// both the elastic/inelastic transition and the surface energy plateau,
/// K caps admissible displacements (finite by construction).
struct ConstitutiveParams {
    double c0 = 1.0;
    double K = 1.0;

    void validate() const {
        if (!(c0 > 0.0))
            throw std::invalid_argument("ConstitutiveParams: c0 must be positive");
        if (!(K > 0.0) || !std::isfinite(K))
            throw std::invalid_argument("ConstitutiveParams: K must be positive and finite");
    }
};

/// Stored energy density: t^2 below c0/2, affine continuation above.
/// Convex, nondecreasing, continuous at the kink.
double psi(double t, const ConstitutiveParams& p);

/// Surface energy density: linear ramp c0*t saturating at c0 for t >= 1.
double f_surface(double t, const ConstitutiveParams& p);

/// Optimal eigendeformation density for a given strain: soft threshold
/// at c0/2, the unique minimizer of g -> (up - g)^2 + c0*|g|.
double g_star(double up, const ConstitutiveParams& p);

} // namespace eigendamage
