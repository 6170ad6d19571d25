#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "eigendamage/constitutive.hpp"

namespace eigendamage {

/// Uniform partition of the bar (a,b) into n cells of width h.
struct Domain {
    double a = 0.0;
    double b = 1.0;
    int n = 1;

    double h() const { return (b - a) / n; }
    void validate() const;
    bool same_as(const Domain& o) const { return a == o.a && b == o.b && n == o.n; }
};

/// Continuous piecewise-linear displacement, one value per grid node.
struct GridDisplacement {
    Domain domain;
    std::vector<double> nodes; // size n+1

    void validate() const;
};

/// Piecewise-constant density, one value per cell.
struct CellField {
    Domain domain;
    std::vector<double> cells; // size n

    void validate() const;
};

struct Jump {
    double position = 0.0;  // interior point of (a,b)
    double amplitude = 0.0; // nonzero
};

/// Structured BV displacement: absolutely continuous slope per cell, a
/// finite jump list at arbitrary interior positions, and per-cell Cantor
/// mass. The additive constant is pinned by base_value = u(a+); within a
/// cell the Cantor mass accumulates linearly.
struct BVDisplacement {
    Domain domain;
    CellField ac_slope;
    std::vector<Jump> jumps;         // strictly increasing positions
    std::vector<double> cantor_mass; // size n, signed mass of D^c u per cell
    double base_value = 0.0;

    void validate() const;
};

struct Atom {
    double position = 0.0;
    double weight = 0.0;
};

/// Signed measure on (a,b): finitely many atoms plus a piecewise-constant
/// density on the cell grid.
struct Measure1D {
    Domain domain;
    std::vector<Atom> atoms;
    CellField density;

    void validate() const;
};

// ---------------------------------------------------------------------------
// Grid operations
// ---------------------------------------------------------------------------

/// Discrete derivative of a piecewise-linear displacement.
CellField derivative(const GridDisplacement& u);

/// Prefix-sum table of |g| enabling exact integrals of the absolute density
/// over arbitrary subintervals (partial cells handled exactly).
class PrefixIntegrator {
  public:
    explicit PrefixIntegrator(const CellField& g);

    /// Exact value of \int_{[lo,hi] \cap (a,b)} |g| dt.
    double integrate(double lo, double hi) const;

    const Domain& domain() const { return dom_; }

  private:
    Domain dom_;
    std::vector<double> abs_cells_;
    std::vector<double> prefix_; // prefix_[i] = int_a^{node_i} |g|
    double cumulative_to(double t) const;
};

struct WindowIntegral {
    double integral = 0.0;
    double width = 0.0;
};

/// Integral of |g| over the clipped window (x-eps, x+eps) \cap (a,b) and the
/// clipped window width; the window mean is integral/width.
WindowIntegral window_integral(const CellField& g, double eps, double x);

// ---------------------------------------------------------------------------
// BV operations
// ---------------------------------------------------------------------------

/// Level-`levels` Cantor staircase approximant: zero slope, no jumps, total
/// Cantor mass 1 distributed over the 2^levels rising intervals. Requires
/// the grid to resolve every level-`levels` interval.
BVDisplacement cantor_staircase(int levels, const Domain& domain);

/// Point value of the structured representative. x must lie in (a,b) and not
/// on a jump; use reconstruct_left/right for one-sided limits.
double reconstruct(const BVDisplacement& u, double x);
double reconstruct_left(const BVDisplacement& u, double x);  // limit from below, x in (a,b]
double reconstruct_right(const BVDisplacement& u, double x); // limit from above, x in [a,b)

/// Exact sup norm of the reconstruction (extrema occur at breakpoints).
double sup_abs(const BVDisplacement& u);
double sup_abs(const GridDisplacement& u);

/// Total variation |Du|(a,b) = int |u'| + sum |[u]| + sum |cantor mass|.
double total_variation(const BVDisplacement& u);

// ---------------------------------------------------------------------------
// Measure operations
// ---------------------------------------------------------------------------

/// mu - nu. Requires identical grids; atoms are merged by exact position.
Measure1D subtract(const Measure1D& mu, const Measure1D& nu);

Measure1D scale(const Measure1D& mu, double c);

/// Total variation |mu|(a,b).
double total_variation(const Measure1D& mu);

/// The eigendeformation measure gamma = D^s u + g L^1 associated with u.
/// Jumps become atoms; per-cell Cantor mass enters as cell-uniform density.
/// g may live on a coarser grid whose refinement is `fine_cells`.
Measure1D gamma_measure(const BVDisplacement& u, const CellField& g);
Measure1D gamma_measure(const BVDisplacement& u, const CellField& g, int fine_cells);

/// Exact resampling of a piecewise-constant field onto a refinement of its
/// grid; fine_cells must be a multiple of the coarse cell count.
CellField refine_cells(const CellField& g, int fine_cells);

} // namespace eigendamage
