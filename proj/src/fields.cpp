#include "eigendamage/fields.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

namespace eigendamage {

void Domain::validate() const {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("Domain: requires a < b and finite endpoints");
    if (n < 1)
        throw std::invalid_argument("Domain: cell count must be >= 1");
}

void GridDisplacement::validate() const {
    domain.validate();
    if (nodes.size() != static_cast<std::size_t>(domain.n) + 1)
        throw std::invalid_argument("GridDisplacement: node array must have n+1 entries");
}

void CellField::validate() const {
    domain.validate();
    if (cells.size() != static_cast<std::size_t>(domain.n))
        throw std::invalid_argument("CellField: cell array must have n entries");
}

void BVDisplacement::validate() const {
    domain.validate();
    ac_slope.validate();
    if (!ac_slope.domain.same_as(domain))
        throw std::invalid_argument("BVDisplacement: ac_slope grid mismatch");
    if (cantor_mass.size() != static_cast<std::size_t>(domain.n))
        throw std::invalid_argument("BVDisplacement: cantor_mass must have n entries");
    double prev = domain.a;
    for (const Jump& j : jumps) {
        if (!(j.position > prev) || !(j.position < domain.b))
            throw std::invalid_argument(
                "BVDisplacement: jump positions must be interior and strictly increasing");
        if (j.amplitude == 0.0)
            throw std::invalid_argument("BVDisplacement: jump amplitudes must be nonzero");
        prev = j.position;
    }
}

void Measure1D::validate() const {
    domain.validate();
    density.validate();
    if (!density.domain.same_as(domain))
        throw std::invalid_argument("Measure1D: density grid mismatch");
    for (const Atom& at : atoms)
        if (!(at.position > domain.a) || !(at.position < domain.b))
            throw std::invalid_argument("Measure1D: atom positions must be interior");
}

// ---------------------------------------------------------------------------

CellField derivative(const GridDisplacement& u) {
    u.validate();
    const double h = u.domain.h();
    CellField d{u.domain, std::vector<double>(u.domain.n)};
    for (int i = 0; i < u.domain.n; ++i)
        d.cells[i] = (u.nodes[i + 1] - u.nodes[i]) / h;
    return d;
}

PrefixIntegrator::PrefixIntegrator(const CellField& g) : dom_(g.domain) {
    g.validate();
    abs_cells_.resize(dom_.n);
    prefix_.assign(dom_.n + 1, 0.0);
    const double h = dom_.h();
    for (int i = 0; i < dom_.n; ++i) {
        abs_cells_[i] = std::fabs(g.cells[i]);
        prefix_[i + 1] = prefix_[i] + abs_cells_[i] * h;
    }
}

double PrefixIntegrator::cumulative_to(double t) const {
    if (t <= dom_.a) return 0.0;
    if (t >= dom_.b) return prefix_[dom_.n];
    const double h = dom_.h();
    int i = static_cast<int>((t - dom_.a) / h);
    i = std::clamp(i, 0, dom_.n - 1);
    // guard against floating error putting t below node i
    double left = dom_.a + i * h;
    if (t < left && i > 0) { --i; left = dom_.a + i * h; }
    return prefix_[i] + (t - left) * abs_cells_[i];
}

double PrefixIntegrator::integrate(double lo, double hi) const {
    if (hi <= lo) return 0.0;
    return cumulative_to(hi) - cumulative_to(lo);
}

WindowIntegral window_integral(const CellField& g, double eps, double x) {
    g.validate();
    if (!(eps > 0.0))
        throw std::domain_error("window_integral: eps must be positive");
    if (x < g.domain.a || x > g.domain.b)
        throw std::domain_error("window_integral: x outside [a,b]");
    const PrefixIntegrator pre(g);
    const double lo = std::max(x - eps, g.domain.a);
    const double hi = std::min(x + eps, g.domain.b);
    return {pre.integrate(lo, hi), hi - lo};
}

// ---------------------------------------------------------------------------

BVDisplacement cantor_staircase(int levels, const Domain& domain) {
    domain.validate();
    if (levels < 1)
        throw std::invalid_argument("cantor_staircase: levels must be >= 1");
    double scale = 1.0;
    for (int k = 0; k < levels; ++k) scale /= 3.0;
    const double len = (domain.b - domain.a) * scale; // width of a level interval
    if (domain.h() > len * (1.0 + 1e-12)) {
        throw std::invalid_argument(
            "cantor_staircase: grid too coarse, need n >= 3^levels = " +
            std::to_string(static_cast<long long>(std::llround(1.0 / scale))));
    }

    // starts of the 2^levels rising intervals, in units of 3^{-levels}*(b-a)
    std::vector<std::int64_t> starts{0};
    for (int k = 0; k < levels; ++k) {
        std::vector<std::int64_t> next;
        next.reserve(starts.size() * 2);
        for (std::int64_t s : starts) {
            next.push_back(3 * s);
            next.push_back(3 * s + 2);
        }
        starts.swap(next);
    }

    BVDisplacement u;
    u.domain = domain;
    u.ac_slope = CellField{domain, std::vector<double>(domain.n, 0.0)};
    u.cantor_mass.assign(domain.n, 0.0);
    u.base_value = 0.0;

    const double mass = 1.0 / static_cast<double>(starts.size());
    const double h = domain.h();
    for (std::int64_t s : starts) {
        const double lo = domain.a + s * len;
        const double hi = lo + len;
        // distribute this interval's mass over the cells it meets
        int i0 = std::clamp(static_cast<int>((lo - domain.a) / h), 0, domain.n - 1);
        for (int i = i0; i < domain.n; ++i) {
            const double cl = domain.a + i * h;
            if (cl >= hi) break;
            const double ov = std::min(hi, cl + h) - std::max(lo, cl);
            if (ov > 0.0)
                u.cantor_mass[i] += mass * (ov / len);
        }
    }
    return u;
}

namespace {

// base + integral of the ac slope + linearly accumulated Cantor mass up to x
double continuous_part(const BVDisplacement& u, double x) {
    const double h = u.domain.h();
    double acc = u.base_value;
    for (int i = 0; i < u.domain.n; ++i) {
        const double cl = u.domain.a + i * h;
        const double cr = cl + h;
        if (x >= cr) {
            acc += u.ac_slope.cells[i] * h + u.cantor_mass[i];
        } else {
            const double frac = std::max(0.0, x - cl);
            acc += u.ac_slope.cells[i] * frac + u.cantor_mass[i] * (frac / h);
            break;
        }
    }
    return acc;
}

} // namespace

double reconstruct_left(const BVDisplacement& u, double x) {
    u.validate();
    if (!(x > u.domain.a) || !(x <= u.domain.b))
        throw std::domain_error("reconstruct_left: x must lie in (a,b]");
    double v = continuous_part(u, x);
    for (const Jump& j : u.jumps)
        if (j.position < x) v += j.amplitude;
    return v;
}

double reconstruct_right(const BVDisplacement& u, double x) {
    u.validate();
    if (!(x >= u.domain.a) || !(x < u.domain.b))
        throw std::domain_error("reconstruct_right: x must lie in [a,b)");
    double v = continuous_part(u, x);
    for (const Jump& j : u.jumps)
        if (j.position <= x) v += j.amplitude;
    return v;
}

double reconstruct(const BVDisplacement& u, double x) {
    u.validate();
    if (!(x > u.domain.a) || !(x < u.domain.b))
        throw std::domain_error("reconstruct: x must lie in (a,b)");
    for (const Jump& j : u.jumps)
        if (j.position == x)
            throw std::domain_error(
                "reconstruct: x coincides with a jump; use reconstruct_left/right");
    return reconstruct_right(u, x);
}

double sup_abs(const GridDisplacement& u) {
    u.validate();
    double m = 0.0;
    for (double v : u.nodes) m = std::max(m, std::fabs(v));
    return m;
}

double sup_abs(const BVDisplacement& u) {
    u.validate();
    // single sweep over cell edges and jump positions; the function is
    // affine between consecutive breakpoints, so extrema sit at them
    const double h = u.domain.h();
    double value = u.base_value;
    double m = std::fabs(value);
    std::size_t jidx = 0;
    for (int i = 0; i < u.domain.n; ++i) {
        const double cl = u.domain.a + i * h;
        const double cr = cl + h;
        const double rate = u.ac_slope.cells[i] + u.cantor_mass[i] / h;
        double pos = cl;
        while (jidx < u.jumps.size() && u.jumps[jidx].position <= cr) {
            const Jump& j = u.jumps[jidx];
            if (j.position > cr) break;
            value += rate * (j.position - pos);
            m = std::max(m, std::fabs(value)); // left limit
            value += j.amplitude;
            m = std::max(m, std::fabs(value)); // right limit
            pos = j.position;
            ++jidx;
        }
        value += rate * (cr - pos);
        m = std::max(m, std::fabs(value));
    }
    return m;
}

double total_variation(const BVDisplacement& u) {
    u.validate();
    const double h = u.domain.h();
    double tv = 0.0;
    for (double s : u.ac_slope.cells) tv += std::fabs(s) * h;
    for (const Jump& j : u.jumps) tv += std::fabs(j.amplitude);
    for (double m : u.cantor_mass) tv += std::fabs(m);
    return tv;
}

// ---------------------------------------------------------------------------

Measure1D subtract(const Measure1D& mu, const Measure1D& nu) {
    mu.validate();
    nu.validate();
    if (!mu.domain.same_as(nu.domain))
        throw std::invalid_argument("subtract: measures must share grid");
    Measure1D out;
    out.domain = mu.domain;
    out.density = CellField{mu.domain, std::vector<double>(mu.domain.n)};
    for (int i = 0; i < mu.domain.n; ++i)
        out.density.cells[i] = mu.density.cells[i] - nu.density.cells[i];

    std::vector<Atom> merged = mu.atoms;
    for (const Atom& at : nu.atoms) merged.push_back({at.position, -at.weight});
    std::sort(merged.begin(), merged.end(),
              [](const Atom& x, const Atom& y) { return x.position < y.position; });
    for (const Atom& at : merged) {
        if (!out.atoms.empty() && out.atoms.back().position == at.position)
            out.atoms.back().weight += at.weight;
        else
            out.atoms.push_back(at);
    }
    out.atoms.erase(std::remove_if(out.atoms.begin(), out.atoms.end(),
                                   [](const Atom& a) { return a.weight == 0.0; }),
                    out.atoms.end());
    return out;
}

Measure1D scale(const Measure1D& mu, double c) {
    Measure1D out = mu;
    for (Atom& at : out.atoms) at.weight *= c;
    for (double& d : out.density.cells) d *= c;
    return out;
}

double total_variation(const Measure1D& mu) {
    mu.validate();
    double tv = 0.0;
    for (const Atom& at : mu.atoms) tv += std::fabs(at.weight);
    const double h = mu.domain.h();
    for (double d : mu.density.cells) tv += std::fabs(d) * h;
    return tv;
}

CellField refine_cells(const CellField& g, int fine_cells) {
    g.validate();
    if (fine_cells < g.domain.n || fine_cells % g.domain.n != 0)
        throw std::invalid_argument("refine_cells: fine grid must be a multiple of the coarse one");
    const int k = fine_cells / g.domain.n;
    CellField out{Domain{g.domain.a, g.domain.b, fine_cells}, std::vector<double>(fine_cells)};
    for (int i = 0; i < g.domain.n; ++i)
        for (int j = 0; j < k; ++j)
            out.cells[i * k + j] = g.cells[i];
    return out;
}

Measure1D gamma_measure(const BVDisplacement& u, const CellField& g) {
    return gamma_measure(u, g, g.domain.n);
}

Measure1D gamma_measure(const BVDisplacement& u, const CellField& g, int fine_cells) {
    u.validate();
    g.validate();
    if (!u.domain.same_as(g.domain))
        throw std::invalid_argument("gamma_measure: u and g must share grid");
    Measure1D out;
    out.domain = Domain{u.domain.a, u.domain.b, fine_cells};
    CellField dens = g;
    const double h = u.domain.h();
    for (int i = 0; i < u.domain.n; ++i)
        dens.cells[i] += u.cantor_mass[i] / h;
    out.density = refine_cells(dens, fine_cells);
    for (const Jump& j : u.jumps)
        out.atoms.push_back({j.position, j.amplitude});
    return out;
}

} // namespace eigendamage
