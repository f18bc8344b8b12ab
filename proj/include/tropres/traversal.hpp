#pragma once

#include "tropres/configurations.hpp"
#include "tropres/polyhedral.hpp"
#include "tropres/subdivisions.hpp"

#include <functional>
#include <vector>

namespace tropres {

// Coordinates of R^m kept free by a specialization; specialized coordinates are zero.
struct Restriction {
    std::size_t m = 0;
    std::vector<std::size_t> free;

    static Restriction identity(std::size_t m);
    static Restriction of(const ConfigTuple& t, const SpecializationPattern& s);
    std::size_t dim() const { return free.size(); }
    bool is_identity() const { return free.size() == m; }
    IntVector embed(const IntVector& x) const;
    RatVector embed(const RatVector& x) const;
    EpsVector embed(const EpsVector& x) const;
    IntVector restrict(const IntVector& x) const;
    RatVector restrict(const RatVector& x) const;
    EpsVector restrict(const EpsVector& x) const;
    // True if x vanishes on every specialized coordinate.
    bool in_subspace(const RatVector& x) const;
    // Drops the specialized columns of linear forms on R^m.
    std::vector<IntVector> restrict_forms(const std::vector<IntVector>& forms) const;
};

// Cone of the secondary fan of the columns of cay restricted to the free
// coordinates, with p (given in free coordinates) in its relative interior.
struct RestrictedCone {
    Cone cone;
    Subdivision subdivision;
};
RestrictedCone restricted_cone(const IntMatrix& cay, const Restriction& r, const EpsVector& p);

// Maximal cones of the restricted secondary fan (a complete fan in free coordinates).
Fan restricted_secondary_fan(const IntMatrix& cay, const Restriction& r);

// Rays of a facet of a cone: the facet's canonical key, a relative interior
// point and a spanning set.
struct Ridge {
    std::string key;
    IntVector interior;
    std::vector<IntVector> span;
};
Ridge facet_ridge(const Cone& c, std::size_t facet);

struct TraversalOracles {
    // Directions (in free coordinates) of the facets of the link at a ridge.
    std::function<std::vector<IntVector>(const Ridge&)> link;
    std::function<Integer(const RestrictedCone&)> multiplicity;
};

// Breadth-first traversal of a pure subfan of the restricted secondary fan
// that is connected in codimension one, starting from the cone containing start.
Fan traverse_subfan(const IntMatrix& cay, const Restriction& r, const EpsVector& start, std::size_t dim,
                    const TraversalOracles& oracles);

}  // namespace tropres
