#pragma once

#include "tropres/configurations.hpp"
#include "tropres/polyhedral.hpp"
#include "tropres/resultant.hpp"
#include "tropres/traversal.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace tropres {

// Pieces C1 ∩ C2 with span C1 + span C2 = R^n and the expected dimension.
// With a displacement v, a pair is kept only if v ∈ C2 - C1, which makes the
// multiplicities those of the stable intersection at generic points.
WeightedConeSet stable_intersection(const WeightedConeSet& a, const WeightedConeSet& b,
                                    const EpsVector* displacement = nullptr);

bool is_nonempty(const ConfigTuple& t, const SpecializationPattern& s);

// w has length m and must vanish on specialized coordinates.
bool specialized_contains(const ConfigTuple& t, const SpecializationPattern& s, const RatVector& w);

// A vector of the specialized resultant outside row(Cay), in R^m.
RatVector nontrivial_vector(const ConfigTuple& t, const SpecializationPattern& s);

// Perturbed point of R^m in a maximal cone of the specialized resultant.
EpsVector starting_point(const ConfigTuple& t, const SpecializationPattern& s);

enum class LinkMethod { Slicing, Projections };

// Facet directions of the link at w (length m, relative interior of a ridge),
// as primitive vectors of R^m orthogonal to the ridge span.
std::vector<IntVector> stable_link(const ConfigTuple& t, const SpecializationPattern& s, const RatVector& w,
                                   LinkMethod method = LinkMethod::Slicing);

// Maximal cones with multiplicities, in the free coordinates.
Fan traverse_specialized(const ConfigTuple& t, const SpecializationPattern& s,
                         LinkMethod method = LinkMethod::Slicing);

// Union-of-cones description in the free coordinates: the pieces C_E ∩ U_S
// of the stable intersection with their multiplicities.
WeightedConeSet specialized_description(const ConfigTuple& t, const SpecializationPattern& s);

// Dimension of the specialized resultant (in the free coordinates), or -1 if empty.
long specialized_dimension(const ConfigTuple& t, const SpecializationPattern& s);

// Restriction of a pattern to a sub-tuple given by its label embedding.
SpecializationPattern restrict_pattern(const ConfigTuple& t, const SpecializationPattern& s, const SubTuple& sub);

// Shared per-instance state: cached pair data and sub-fans.
class SpecializedContext {
public:
    SpecializedContext(ConfigTuple t, SpecializationPattern s);

    const ConfigTuple& tuple() const { return t_; }
    const SpecializationPattern& pattern() const { return s_; }
    const Restriction& restriction() const { return r_; }
    const IntMatrix& cay() const { return cay_; }
    std::size_t codim() const { return codim_; }
    bool nonempty() const { return nonempty_; }
    // Dimension in free coordinates when nonempty.
    std::size_t dim() const { return dim_; }
    // Basis of U_S ∩ row(Cay) in free coordinates.
    const std::vector<IntVector>& lineality() const { return lineality_; }

    struct PairData {
        bool transversal = false;
        bool maximal = false;
        bool displaced = false;
        Integer multiplicity = 0;  // m_E times the lattice factor; zero unless all checks pass
    };
    const PairData& pair(const PairTuple& e);

    // Generators of U_S ∩ (cone(e_{cell minus e}) + R^{outside cell} + row(Cay(cell)))
    // in free coordinates; cell and e are global labels.
    struct PieceGenerators {
        std::vector<IntVector> rays, lineality;
    };
    PieceGenerators piece(const std::vector<std::size_t>& cell, const std::vector<std::size_t>& e);

    Integer multiplicity(const Subdivision& s);
    std::vector<IntVector> link(const Ridge& ridge, LinkMethod method);

private:
    // Data that depends only on the specialized labels of a pair tuple.
    struct SpecData {
        bool transversal = false;
        bool displaced = false;
    };
    const SpecData& spec_data(const std::vector<std::size_t>& specialized_in_e);
    std::vector<IntVector> link_projections(const Ridge& ridge);
    std::vector<IntVector> link_slicing(const Ridge& ridge);
    const std::vector<IntVector>& subfan_rays(const SubTuple& sub, const SpecializationPattern& sp);

    ConfigTuple t_;
    SpecializationPattern s_;
    Restriction r_;
    IntMatrix cay_;
    std::vector<bool> mask_;
    std::size_t codim_ = 0;
    bool nonempty_ = false;
    std::size_t dim_ = 0;
    std::vector<IntVector> lineality_;
    std::map<PairTuple, PairData> pairs_;
    std::map<std::vector<std::size_t>, SpecData> spec_;
    std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, DDResult> zcones_;
    std::map<std::vector<std::size_t>, std::vector<IntVector>> subfan_rays_;
};

}  // namespace tropres
