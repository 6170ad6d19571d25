#pragma once

#include <vector>

#include "eigendamage/fields.hpp"

namespace eigendamage {

/// Result of the flat-norm linear program: the optimal value together with
/// the nodal values of the optimal test function phi on the evaluation grid
/// (|phi| <= 1, |phi_{i+1}-phi_i| <= node spacing, phi = 0 at both ends).
struct FlatNormResult {
    double value = 0.0;
    std::vector<double> nodes;   // evaluation grid (refined grid + atom positions)
    std::vector<double> witness; // optimal phi at the nodes
};

/// Flat norm sup{ int phi dmu : phi in W^{1,inf}_0, max(|phi|,|phi'|) <= 1 },
/// solved exactly over piecewise-linear phi on the measure's grid refined
/// `refine` times with every atom position inserted as a node.
///
/// The chain-constrained LP is solved by dynamic programming on concave
/// piecewise-linear value functions, which is exact for this polytope.
FlatNormResult flat_norm(const Measure1D& mu, int refine);

/// flat_norm(mu - nu).value on a shared grid.
double flat_distance(const Measure1D& mu, const Measure1D& nu, int refine);

/// The pairing sum_i c_i phi_i used as the LP objective, reassembled from mu
/// on the same evaluation grid; flat_norm's `value` equals this applied to
/// its own witness.
double flat_pairing(const Measure1D& mu, int refine, const std::vector<double>& phi);

/// The evaluation grid flat_norm uses for (mu, refine).
std::vector<double> flat_nodes(const Measure1D& mu, int refine);

} // namespace eigendamage
