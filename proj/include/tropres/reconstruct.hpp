#pragma once

#include "tropres/polyhedral.hpp"

#include <cstdint>
#include <vector>

namespace tropres {

// Codimension-1 cones with multiplicities whose union is a tropical hypersurface.
using HypersurfaceInput = WeightedConeSet;

struct RegionStats {
    std::size_t pieces = 0;           // codimension-1 pieces scanned
    std::size_t checks = 0;           // emptiness tests of R ∩ C
    std::size_t interior_points = 0;  // points computed in R ∩ C
};

// Closure of the connected component of the complement containing w.
Cone region(const HypersurfaceInput& h, const RatVector& w, RegionStats* stats = nullptr);

// All regions, found by crossing region facets.
Fan reconstruct_normal_fan(const HypersurfaceInput& h, std::uint64_t seed = 1);

// Polytope vertices up to translation, anchored at the first region of f.
std::vector<IntVector> vertices_from_fan(const Fan& f, const HypersurfaceInput& h);

// Normal cones of the edges of conv(points) with lattice lengths.
HypersurfaceInput tropical_hypersurface_of_polytope(const std::vector<IntVector>& points);

// Face counts of the polytope dual to a complete fan: vertices first, then
// upward to the polytope itself.
std::vector<std::size_t> polytope_fvector(const Fan& normal_fan);

}  // namespace tropres
