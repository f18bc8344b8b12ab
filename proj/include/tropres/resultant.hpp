#pragma once

#include "tropres/configurations.hpp"
#include "tropres/polyhedral.hpp"
#include "tropres/traversal.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace tropres {

// Independence oracle on the ground set {0, ..., size-1}.
struct MatroidOracle {
    std::size_t size = 0;
    std::function<bool(const std::vector<std::size_t>&)> independent;
};

// Element e may be matched to any set listed in membership[e].
MatroidOracle transversal_matroid(std::vector<std::vector<std::size_t>> membership, std::size_t num_sets);
MatroidOracle vector_matroid(std::vector<IntVector> vectors, std::size_t dim);

// Maximum common independent set (augmenting paths in the exchange graph).
std::vector<std::size_t> matroid_intersection(const MatroidOracle& a, const MatroidOracle& b);

// R>=0{e_ij : j not in E_i} + row(Cay) and the index of the row lattice of Cay(E).
std::pair<Cone, Integer> pair_cone(const ConfigTuple& t, const PairTuple& e);
Integer pair_multiplicity(const ConfigTuple& t, const PairTuple& e);
// Cayley matrix restricted to the columns of E.
IntMatrix pair_cayley(const ConfigTuple& t, const PairTuple& e);

// One weighted cone per choice of pairs, in the order of for_each_pair_tuple.
WeightedConeSet simple_description(const ConfigTuple& t);

std::size_t codimension(const ConfigTuple& t);
std::size_t codimension_bruteforce(const ConfigTuple& t);
std::size_t codimension_sturmfels(const ConfigTuple& t);

bool contains(const ConfigTuple& t, const RatVector& w);
bool contains(const ConfigTuple& t, const EpsVector& w);

EpsVector generic_point(const ConfigTuple& t);

// Link directions of the unspecialized resultant at a ridge, orthogonal to the ridge span.
std::vector<IntVector> resultant_link(const ConfigTuple& t, const Ridge& ridge);

// Sum of multiplicities of the pair cones containing the generic cone with
// the given subdivision.
Integer resultant_multiplicity(const ConfigTuple& t, const Subdivision& s);

Fan traverse(const ConfigTuple& t);

}  // namespace tropres
