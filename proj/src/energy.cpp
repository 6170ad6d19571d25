#include "eigendamage/energy.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace eigendamage {

namespace {

void check_pair(const GridDisplacement& u, const CellField& g) {
    u.validate();
    g.validate();
    if (!u.domain.same_as(g.domain))
        throw std::invalid_argument("energy: u and g must share a grid");
}

} // namespace

EnergyBreakdown energy_eps(const GridDisplacement& u, const CellField& g,
                           const ConstitutiveParams& p, double eps,
                           const QuadratureSpec& q) {
    return energy_eps_local(u, g, p, eps, q, u.domain.a, u.domain.b);
}

EnergyBreakdown energy_eps_local(const GridDisplacement& u, const CellField& g,
                                 const ConstitutiveParams& p, double eps,
                                 const QuadratureSpec& q, double lo, double hi) {
    check_pair(u, g);
    p.validate();
    q.validate();
    if (!(eps > 0.0))
        throw std::invalid_argument("energy_eps: eps must be positive");
    if (!(lo < hi) || lo < u.domain.a || hi > u.domain.b)
        throw std::invalid_argument("energy_eps_local: (lo,hi) must be a subinterval of (a,b)");

    if (sup_abs(u) > p.K)
        return EnergyBreakdown::infinite();

    const Domain& dom = u.domain;
    const double h = dom.h();

    EnergyBreakdown out;
    for (int i = 0; i < dom.n; ++i) {
        const double cl = dom.a + i * h;
        const double len = std::min(cl + h, hi) - std::max(cl, lo);
        if (len <= 0.0) continue;
        const double du = (u.nodes[i + 1] - u.nodes[i]) / h;
        const double r = du - g.cells[i];
        out.elastic += r * r * len;
    }

    const PrefixIntegrator pre(g);
    const double sub = h / q.subcells_per_cell;
    double acc = 0.0;
    const long nsub = static_cast<long>(dom.n) * q.subcells_per_cell;
    for (long k = 0; k < nsub; ++k) {
        const double sl = dom.a + k * sub;
        const double l = std::max(sl, lo);
        const double r = std::min(sl + sub, hi);
        if (r <= l) continue;
        const double x = 0.5 * (l + r);
        const double wl = std::max(x - eps, dom.a);
        const double wr = std::min(x + eps, dom.b);
        const double mean = pre.integrate(wl, wr) / (wr - wl);
        acc += f_surface(eps * mean, p) * (r - l);
    }
    out.nonlocal_or_inelastic = acc / eps;
    out.sum_up();
    return out;
}

EnergyBreakdown energy_limit(const BVDisplacement& u, const CellField& g,
                             const ConstitutiveParams& p) {
    u.validate();
    g.validate();
    p.validate();
    if (!u.domain.same_as(g.domain))
        throw std::invalid_argument("energy_limit: u and g must share a grid");
    if (sup_abs(u) > p.K)
        return EnergyBreakdown::infinite();

    const double h = u.domain.h();
    EnergyBreakdown out;
    for (int i = 0; i < u.domain.n; ++i) {
        const double r = u.ac_slope.cells[i] - g.cells[i];
        out.elastic += r * r * h;
        out.nonlocal_or_inelastic += p.c0 * std::fabs(g.cells[i]) * h;
        out.cantor += p.c0 * std::fabs(u.cantor_mass[i]);
    }
    for (const Jump& j : u.jumps)
        out.jump += 2.0 * f_surface(0.5 * std::fabs(j.amplitude), p);
    out.sum_up();
    return out;
}

EnergyBreakdown energy_F(const BVDisplacement& u, const ConstitutiveParams& p) {
    u.validate();
    p.validate();
    if (sup_abs(u) > p.K)
        return EnergyBreakdown::infinite();

    const double h = u.domain.h();
    EnergyBreakdown out;
    for (int i = 0; i < u.domain.n; ++i) {
        out.elastic += psi(std::fabs(u.ac_slope.cells[i]), p) * h;
        out.cantor += p.c0 * std::fabs(u.cantor_mass[i]);
    }
    for (const Jump& j : u.jumps)
        out.jump += 2.0 * f_surface(0.5 * std::fabs(j.amplitude), p);
    out.sum_up();
    return out;
}

EnergyBreakdown energy_limit_bc(const BVDisplacement& u, const CellField& g,
                                const ConstitutiveParams& p, double ua, double ub) {
    p.validate();
    if (std::fabs(ua) > p.K || std::fabs(ub) > p.K)
        throw std::invalid_argument("energy_limit_bc: boundary values must satisfy |u| <= K");
    EnergyBreakdown out = energy_limit(u, g, p);
    if (!out.finite) return out;
    const double ga = std::fabs(reconstruct_right(u, u.domain.a) - ua);
    const double gb = std::fabs(reconstruct_left(u, u.domain.b) - ub);
    out.boundary_penalty =
        2.0 * f_surface(0.5 * ga, p) + 2.0 * f_surface(0.5 * gb, p);
    out.sum_up();
    return out;
}

// ---------------------------------------------------------------------------
// Exact non-local integral.
//
// With P(t) = int_a^t |g|, L(x) = max(x-eps, a) and R(x) = min(x+eps, b), the
// integrand is c0 * min(eps*(P(R)-P(L))/(R-L), 1). Between breakpoints
// {node +- eps, a+eps, b-eps} both I(x) = P(R)-P(L) and w(x) = R-L are affine
// in x, so each piece integrates in closed form: trapezoid where w is
// constant, a log term where w has slope +-1, constant c0 where saturated.
// ---------------------------------------------------------------------------

namespace {

// int_{x1}^{x2} (I1 + si*(x-x1)) / (w1 + sw*(x-x1)) dx, with w > 0 throughout
double rational_piece(double x1, double x2, double I1, double si, double w1, double sw) {
    const double len = x2 - x1;
    if (len <= 0.0) return 0.0;
    if (sw == 0.0)
        return (I1 + 0.5 * si * len) * len / w1;
    // substitute t = x - x1: (I1 + si t)/(w1 + sw t)
    // = si/sw + (I1 - si*w1/sw) / (w1 + sw t)
    const double c = si / sw;
    const double d = I1 - c * w1;
    const double w2 = w1 + sw * len;
    return c * len + (d / sw) * std::log(w2 / w1);
}

} // namespace

double nonlocal_integral_exact(const CellField& g, double eps,
                               const ConstitutiveParams& p) {
    g.validate();
    p.validate();
    if (!(eps > 0.0))
        throw std::invalid_argument("nonlocal_integral_exact: eps must be positive");

    const Domain& dom = g.domain;
    const double a = dom.a, b = dom.b, h = dom.h();
    const PrefixIntegrator pre(g);

    std::vector<double> bps;
    bps.push_back(a);
    bps.push_back(b);
    if (a + eps < b) bps.push_back(a + eps);
    if (b - eps > a) bps.push_back(b - eps);
    for (int k = 0; k <= dom.n; ++k) {
        const double node = a + k * h;
        if (node - eps > a && node - eps < b) bps.push_back(node - eps);
        if (node + eps > a && node + eps < b) bps.push_back(node + eps);
    }
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

    auto window = [&](double x, double& I, double& w) {
        const double wl = std::max(x - eps, a);
        const double wr = std::min(x + eps, b);
        I = pre.integrate(wl, wr);
        w = wr - wl;
    };

    double total = 0.0;
    for (std::size_t k = 0; k + 1 < bps.size(); ++k) {
        const double x1 = bps[k], x2 = bps[k + 1];
        const double len = x2 - x1;
        if (len <= 0.0) continue;
        double I1, w1, I2, w2;
        window(x1, I1, w1);
        window(x2, I2, w2);
        const double si = (I2 - I1) / len;
        const double sw = (w2 - w1) / len; // -1, 0 or +1 up to roundoff
        // saturation indicator s(x) = eps*I(x) - w(x), affine on the piece
        const double s1 = eps * I1 - w1;
        const double s2 = eps * I2 - w2;

        auto add_linear_part = [&](double xl, double xr, double Il, double wl2) {
            total += p.c0 * eps * rational_piece(xl, xr, Il, si, wl2, sw);
        };

        if (s1 <= 0.0 && s2 <= 0.0) {
            add_linear_part(x1, x2, I1, w1);
        } else if (s1 >= 0.0 && s2 >= 0.0) {
            total += p.c0 * len;
        } else {
            const double xr = x1 + len * s1 / (s1 - s2);
            const double Ir = I1 + si * (xr - x1);
            const double wr = w1 + sw * (xr - x1);
            if (s1 < 0.0) { // linear then saturated
                add_linear_part(x1, xr, I1, w1);
                total += p.c0 * (x2 - xr);
            } else { // saturated then linear
                total += p.c0 * (xr - x1);
                add_linear_part(xr, x2, Ir, wr);
            }
        }
    }
    return total;
}

} // namespace eigendamage
