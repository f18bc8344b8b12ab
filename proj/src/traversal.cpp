#include "tropres/traversal.hpp"

#include <algorithm>

#include "tropres/error.hpp"

#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace tropres {

Restriction Restriction::identity(std::size_t m) {
    Restriction r;
    r.m = m;
    for (std::size_t i = 0; i < m; ++i) r.free.push_back(i);
    return r;
}

Restriction Restriction::of(const ConfigTuple& t, const SpecializationPattern& s) {
    Restriction r;
    r.m = t.m();
    r.free = s.free_labels(t);
    return r;
}

IntVector Restriction::embed(const IntVector& x) const {
    IntVector out(m);
    for (std::size_t i = 0; i < free.size(); ++i) out[free[i]] = x[i];
    return out;
}

RatVector Restriction::embed(const RatVector& x) const {
    RatVector out(m);
    for (std::size_t i = 0; i < free.size(); ++i) out[free[i]] = x[i];
    return out;
}

EpsVector Restriction::embed(const EpsVector& x) const {
    EpsVector out;
    for (const auto& l : x.levels) out.levels.push_back(embed(l));
    return out;
}

IntVector Restriction::restrict(const IntVector& x) const {
    IntVector out(free.size());
    for (std::size_t i = 0; i < free.size(); ++i) out[i] = x[free[i]];
    return out;
}

RatVector Restriction::restrict(const RatVector& x) const {
    RatVector out(free.size());
    for (std::size_t i = 0; i < free.size(); ++i) out[i] = x[free[i]];
    return out;
}

EpsVector Restriction::restrict(const EpsVector& x) const {
    EpsVector out;
    for (const auto& l : x.levels) out.levels.push_back(restrict(l));
    out.trim();
    return out;
}

bool Restriction::in_subspace(const RatVector& x) const {
    std::vector<bool> is_free(m, false);
    for (auto f : free) is_free[f] = true;
    for (std::size_t i = 0; i < m; ++i)
        if (!is_free[i] && sgn(x[i]) != 0) return false;
    return true;
}

std::vector<IntVector> Restriction::restrict_forms(const std::vector<IntVector>& forms) const {
    std::vector<IntVector> out;
    for (const auto& f : forms) out.push_back(restrict(f));
    return out;
}

RestrictedCone restricted_cone(const IntMatrix& cay, const Restriction& r, const EpsVector& p) {
    RestrictedCone out;
    out.subdivision = regular_subdivision(cay, r.embed(p));
    if (r.is_identity()) {
        out.cone = secondary_cone(cay, out.subdivision);
    } else {
        auto f = secondary_cone_forms(cay, out.subdivision);
        auto tidy = [&](const std::vector<IntVector>& forms) {
            std::vector<IntVector> v;
            for (const auto& x : r.restrict_forms(forms))
                if (!is_zero(x)) v.push_back(primitive(x));
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            return v;
        };
        out.cone = Cone::from_h(r.dim(), tidy(f.equations), tidy(f.inequalities));
    }
    return out;
}

Ridge facet_ridge(const Cone& c, std::size_t facet) {
    Ridge rd;
    rd.interior.assign(c.ambient_dim(), 0);
    std::ostringstream key;
    key << c.ambient_dim() << "|";
    for (const auto& l : c.lineality()) key << to_string(l);
    key << "|";
    for (auto j : c.facet_rays()[facet]) {
        const auto& ray = c.rays()[j];
        key << to_string(ray);
        for (std::size_t i = 0; i < ray.size(); ++i) rd.interior[i] += ray[i];
        rd.span.push_back(ray);
    }
    rd.span.insert(rd.span.end(), c.lineality().begin(), c.lineality().end());
    rd.key = key.str();
    return rd;
}

Fan traverse_subfan(const IntMatrix& cay, const Restriction& r, const EpsVector& start, std::size_t dim,
                    const TraversalOracles& oracles) {
    std::vector<RestrictedCone> found;
    std::map<std::string, std::size_t> seen;
    std::set<std::string> ridges;
    std::deque<std::size_t> queue;
    auto add = [&](RestrictedCone rc) {
        if (rc.cone.dim() != dim)
            throw Error(ErrorCode::Internal, "traversal reached a cone of dimension " + std::to_string(rc.cone.dim()) +
                                                 " instead of " + std::to_string(dim));
        if (seen.count(rc.cone.key())) return;
        seen.emplace(rc.cone.key(), found.size());
        queue.push_back(found.size());
        found.push_back(std::move(rc));
    };
    add(restricted_cone(cay, r, start));
    while (!queue.empty()) {
        const Cone c = found[queue.front()].cone;
        queue.pop_front();
        for (std::size_t i = 0; i < c.facets().size(); ++i) {
            Ridge rd = facet_ridge(c, i);
            if (!ridges.insert(rd.key).second) continue;
            for (const auto& v : oracles.link(rd))
                add(restricted_cone(cay, r, EpsVector({to_rational(rd.interior), to_rational(v)})));
        }
    }
    Fan f;
    f.ambient_dim = r.dim();
    f.lineality = found.front().cone.lineality();
    for (const auto& rc : found) {
        f.cones.push_back(rc.cone);
        if (oracles.multiplicity) f.multiplicities.push_back(oracles.multiplicity(rc));
    }
    f.sort_canonically();
    return f;
}

Fan restricted_secondary_fan(const IntMatrix& cay, const Restriction& r) {
    const std::size_t n = r.dim();
    std::vector<RatVector> levels;
    for (std::size_t i = 0; i < n; ++i) {
        RatVector e(n);
        e[i] = 1;
        levels.push_back(std::move(e));
    }
    if (levels.empty()) levels.push_back(RatVector{});
    TraversalOracles o;
    o.link = [n](const Ridge& rd) {
        auto normal = kernel_basis(IntMatrix::from_rows(rd.span, n));
        if (normal.size() != 1) throw Error(ErrorCode::Internal, "secondary fan ridge is not of codimension one");
        IntVector neg = normal[0];
        for (auto& x : neg) x = -x;
        return std::vector<IntVector>{normal[0], neg};
    };
    return traverse_subfan(cay, r, EpsVector(levels), n, o);
}

}  // namespace tropres
