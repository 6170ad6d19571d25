#pragma once

#include <limits>

#include "eigendamage/constitutive.hpp"
#include "eigendamage/fields.hpp"

namespace eigendamage {

/// Midpoint-rule refinement for the outer x-integral of the non-local term.
/// Window integrals are exact, so this is the only quadrature knob.
struct QuadratureSpec {
    int subcells_per_cell = 8;

    void validate() const {
        if (subcells_per_cell < 1)
            throw std::invalid_argument("QuadratureSpec: subcells_per_cell must be >= 1");
    }
};

/// Term-by-term energy value. The "otherwise infinity" branch of the
/// functionals is an explicit marker (finite = false, total = inf), not an
/// exception, so minimizers can treat infeasibility uniformly.
struct EnergyBreakdown {
    double elastic = 0.0;               // int |u' - g|^2
    double nonlocal_or_inelastic = 0.0; // f-term of E_eps, or c0 int |g| for E
    double jump = 0.0;                  // 2 sum f(|[u]|/2)
    double cantor = 0.0;                // c0 |D^c u|
    double boundary_penalty = 0.0;
    double total = 0.0;
    bool finite = true;

    static EnergyBreakdown infinite() {
        EnergyBreakdown b;
        b.total = std::numeric_limits<double>::infinity();
        b.finite = false;
        return b;
    }
    void sum_up() {
        total = elastic + nonlocal_or_inelastic + jump + cantor + boundary_penalty;
    }
};

/// Two-field energy E_eps(u, g L^1): exact elastic term plus the non-local
/// surface term (1/eps) int f(eps * clipped window mean of |g|) dx evaluated
/// by composite midpoint quadrature with exact window integrals.
EnergyBreakdown energy_eps(const GridDisplacement& u, const CellField& g,
                           const ConstitutiveParams& p, double eps,
                           const QuadratureSpec& q);

/// E_eps localized to the open interval (lo, hi); window means still use the
/// full domain clipping.
EnergyBreakdown energy_eps_local(const GridDisplacement& u, const CellField& g,
                                 const ConstitutiveParams& p, double eps,
                                 const QuadratureSpec& q, double lo, double hi);

/// Limit energy E(u, D^s u + g L^1).
EnergyBreakdown energy_limit(const BVDisplacement& u, const CellField& g,
                             const ConstitutiveParams& p);

/// One-field cohesive energy F(u) = int psi(|u'|) + 2 sum f(|[u]|/2) + c0 |D^c u|.
EnergyBreakdown energy_F(const BVDisplacement& u, const ConstitutiveParams& p);

/// E with preassigned boundary values: E(u, gamma) plus the boundary penalty
/// 2 f(|u(a+)-ua|/2) + 2 f(|u(b-)-ub|/2).
EnergyBreakdown energy_limit_bc(const BVDisplacement& u, const CellField& g,
                                const ConstitutiveParams& p, double ua, double ub);

/// Exact value of int_a^b f(eps * clipped window mean of |g|) dx, by piecewise
/// closed-form integration (the integrand is piecewise linear in the interior
/// and piecewise rational on the boundary strips). Not divided by eps.
double nonlocal_integral_exact(const CellField& g, double eps,
                               const ConstitutiveParams& p);

} // namespace eigendamage
