#pragma once

#include "tropres/configurations.hpp"
#include "tropres/polyhedral.hpp"

#include <vector>

namespace tropres {

// Marked subdivision: maximal cells as sorted label lists. Labels not in any
// cell are unmarked.
struct Subdivision {
    std::size_t num_points = 0;
    std::vector<std::vector<std::size_t>> cells;

    std::vector<std::size_t> unmarked() const;
    bool operator==(const Subdivision& o) const = default;
};

// Regular subdivision of the configuration given by the columns of a
// homogeneous matrix (all columns on an affine hyperplane), for a weight that
// may carry eps levels. Min convention: lower faces of the lifted points.
Subdivision regular_subdivision(const IntMatrix& homogeneous, const EpsVector& w);
Subdivision regular_subdivision(const IntMatrix& homogeneous, const RatVector& w);
Subdivision regular_subdivision(const PointConfiguration& p, const RatVector& w);

// Per maximal cell, the local labels it uses from each configuration.
struct MixedCell {
    std::vector<std::vector<std::size_t>> parts;
    bool fully_mixed() const;
};
using MixedCellView = std::vector<MixedCell>;

MixedCellView mixed_view(const ConfigTuple& t, const Subdivision& s);
std::vector<MixedCell> fully_mixed_cells(const MixedCellView& v);

// Closure of the set of weights inducing s (H-description).
// Defining forms of the secondary cone before redundancy removal.
struct ConeForms {
    std::vector<IntVector> equations, inequalities;
};
ConeForms secondary_cone_forms(const IntMatrix& homogeneous, const Subdivision& s);
Cone secondary_cone(const IntMatrix& homogeneous, const Subdivision& s);
Cone secondary_cone(const PointConfiguration& p, const Subdivision& s);

// Sub-tuple of a fully mixed cell with the map from its global labels to the
// global labels of the parent tuple.
struct SubTuple {
    ConfigTuple tuple;
    std::vector<std::size_t> embedding;
};
SubTuple sub_tuple(const ConfigTuple& t, const MixedCell& c);
std::vector<SubTuple> link_subconfigurations(const ConfigTuple& t, const EpsVector& w);
std::vector<SubTuple> link_subconfigurations(const ConfigTuple& t, const RatVector& w);

// Per-label sum of lattice-normalized volumes of incident simplices.
RatVector gkz_vector(const IntMatrix& homogeneous, const Subdivision& triangulation);
RatVector gkz_vector(const PointConfiguration& p, const Subdivision& triangulation);

// One cone R>=0{e_i : i not in I} + row(M) per subset I of size rank(M) + 1.
std::vector<Cone> secondary_tropical_cones(const IntMatrix& homogeneous);
std::vector<Cone> secondary_tropical_cones(const PointConfiguration& p);

}  // namespace tropres
