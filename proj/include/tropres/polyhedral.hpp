#pragma once

#include "tropres/exactmath.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tropres {

// Double description conversion: {x : E x = 0, I x >= 0} into lineality basis
// and extreme rays (not canonicalized).
struct DDResult {
    std::vector<IntVector> lineality;
    std::vector<IntVector> rays;
};
DDResult double_description(std::size_t n, const std::vector<IntVector>& equations,
                            const std::vector<IntVector>& inequalities);

// Polyhedral cone kept in canonical form with both descriptions:
// lineality in reduced echelon form, rays primitive and reduced modulo the
// lineality, equations in reduced echelon form, facets primitive and reduced
// modulo the equations. Inequalities read <f, x> >= 0.
class Cone {
public:
    Cone() = default;
    static Cone from_h(std::size_t n, const std::vector<IntVector>& equations,
                       const std::vector<IntVector>& inequalities);
    static Cone from_v(std::size_t n, const std::vector<IntVector>& rays,
                       const std::vector<IntVector>& lineality);
    static Cone whole_space(std::size_t n);

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return dim_; }
    std::size_t lineality_dim() const { return lineality_.size(); }
    const std::vector<IntVector>& rays() const { return rays_; }
    const std::vector<IntVector>& lineality() const { return lineality_; }
    const std::vector<IntVector>& equations() const { return equations_; }
    const std::vector<IntVector>& facets() const { return facets_; }
    // Indices of rays lying on each facet.
    const std::vector<std::vector<std::uint32_t>>& facet_rays() const { return facet_rays_; }

    bool contains(const IntVector& x) const;
    bool contains(const RatVector& x) const;
    bool contains(const EpsVector& x) const;
    bool contains_in_relative_interior(const RatVector& x) const;
    bool contains_in_relative_interior(const EpsVector& x) const;
    bool contains(const Cone& other) const;

    IntVector relative_interior_point() const;
    Cone facet_cone(std::size_t i) const;
    // All generators: rays followed by both signs of lineality vectors.
    std::vector<IntVector> generators() const;

    const std::string& key() const { return key_; }
    bool operator==(const Cone& o) const { return key_ == o.key_; }
    bool operator<(const Cone& o) const { return key_ < o.key_; }

private:
    void finish();
    std::size_t n_ = 0;
    std::size_t dim_ = 0;
    std::vector<IntVector> rays_, lineality_, equations_, facets_;
    std::vector<std::vector<std::uint32_t>> facet_rays_;
    std::string key_;
};

// Returns the cone with both descriptions; cones here always carry both.
Cone dual_convert(const Cone& c);
Cone intersect(const Cone& a, const Cone& b);
// Smallest cone containing both.
Cone cone_sum(const Cone& a, const Cone& b);
RatVector relative_interior_point(const Cone& c);

// Cone with a multiplicity; sets of them may overlap arbitrarily.
struct WeightedCone {
    Cone cone;
    Integer multiplicity = 1;
};

struct WeightedConeSet {
    std::size_t ambient_dim = 0;
    std::vector<WeightedCone> pieces;
};

struct Fan {
    std::size_t ambient_dim = 0;
    std::vector<IntVector> lineality;
    std::vector<Cone> cones;  // maximal cones
    std::vector<Integer> multiplicities;

    std::size_t lineality_dim() const { return lineality.size(); }
    void sort_canonically();
};

// Global ray list of a fan (canonical order) and, per cone, indices into it.
struct FanRayIndex {
    std::vector<IntVector> rays;
    std::vector<std::vector<std::size_t>> cone_rays;
};
FanRayIndex index_rays(const Fan& f);

// Face counts from the lineality dimension upward. Pairwise overlap check is
// run when the fan has at most overlap_check_limit cones.
std::vector<std::size_t> fvector(const Fan& f, std::size_t overlap_check_limit = 500);

}  // namespace tropres
