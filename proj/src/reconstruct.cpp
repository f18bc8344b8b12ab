#include "tropres/reconstruct.hpp"

#include "tropres/error.hpp"
#include "tropres/lp.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <random>

namespace tropres {

namespace {

EpsScalar scaled(const EpsScalar& a, const Rational& s) {
    EpsScalar out(a);
    for (auto& x : out) x *= s;
    return out;
}

EpsScalar sum(const EpsScalar& a, const EpsScalar& b) {
    EpsScalar out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

// Codimension-1 piece with cached generators.
struct Piece {
    const Cone* cone;
    IntVector normal;
    std::vector<IntVector> generators;
    Integer multiplicity;
};

std::vector<Piece> prepare(const HypersurfaceInput& h) {
    std::vector<Piece> out;
    for (const auto& p : h.pieces) {
        if (p.cone.ambient_dim() != h.ambient_dim) throw Error(ErrorCode::InvalidInput, "piece has wrong ambient dimension");
        if (p.cone.dim() == h.ambient_dim) throw Error(ErrorCode::InvalidInput, "piece is full-dimensional");
        if (p.cone.dim() + 1 != h.ambient_dim) continue;
        out.push_back({&p.cone, p.cone.equations()[0], p.cone.generators(), p.multiplicity});
    }
    return out;
}

// A point of int(R) ∩ relint(C), if any. R is {x : <r, x> > 0 for r in constraints}.
std::optional<RatVector> interior_meet(const Piece& c, const std::vector<IntVector>& constraints) {
    const auto& g = c.generators;
    const std::size_t nv = g.size() + 1;
    std::vector<RatVector> a;
    RatVector b;
    auto add_form = [&](const IntVector& f) {
        RatVector row(nv);
        for (std::size_t j = 0; j < g.size(); ++j) row[j] = -dot(f, g[j]);
        row[g.size()] = 1;
        a.push_back(std::move(row));
        b.push_back(0);
    };
    for (const auto& r : constraints) add_form(r);
    for (const auto& f : c.cone->facets()) add_form(f);
    RatVector cap(nv);
    cap[g.size()] = 1;
    a.push_back(cap);
    b.push_back(1);
    auto res = lp_maximize(a, b, cap);
    if (!res.unbounded && sgn(res.value) <= 0) return std::nullopt;
    RatVector p(c.normal.size());
    for (std::size_t j = 0; j < g.size(); ++j)
        if (sgn(res.x[j]) != 0)
            for (std::size_t i = 0; i < p.size(); ++i) p[i] += res.x[j] * g[j][i];
    return p;
}

// Some constraint has every generator of C on its closed negative side.
bool quickly_disjoint(const Piece& c, const std::vector<IntVector>& constraints) {
    for (const auto& r : constraints) {
        bool all = true;
        for (const auto& v : c.generators)
            if (sgn(dot(r, v)) > 0) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

// Crossing of the half-line w + s*dir (s > 0) with a piece, s = num / den.
struct Hit {
    Rational num;
    EpsScalar den;
};

std::optional<Hit> crossing(const Piece& d, const RatVector& w, const EpsVector& dir) {
    Rational num = -dot(d.normal, w);
    EpsScalar den = eps_dot(d.normal, dir);
    const int sd = eps_sign(den);
    if (sd == 0 || sgn(num) == 0 || sgn(num) != sd) return std::nullopt;
    const Rational sign = sd;
    for (const auto& f : d.cone->facets()) {
        EpsScalar v = sum(scaled(den, dot(f, w)), scaled(eps_dot(f, dir), num));
        if (eps_sign(scaled(v, sign)) < 0) return std::nullopt;
    }
    return Hit{num, den};
}

// Sign of a.num/a.den - b.num/b.den.
int compare_hits(const Hit& a, const Hit& b) {
    EpsScalar diff = sum(scaled(b.den, a.num), scaled(a.den, -b.num));
    return eps_sign(diff) * eps_sign(a.den) * eps_sign(b.den);
}

}  // namespace

Cone region(const HypersurfaceInput& h, const RatVector& w, RegionStats* stats) {
    const std::size_t n = h.ambient_dim;
    if (w.size() != n) throw Error(ErrorCode::InvalidInput, "point has wrong dimension");
    auto pieces = prepare(h);
    for (const auto& p : pieces)
        if (p.cone->contains(w)) throw Error(ErrorCode::PointOnHypersurface, "point lies on the hypersurface");
    RegionStats st;
    st.pieces = pieces.size();
    std::vector<IntVector> constraints;
    for (const auto& c : pieces) {
        while (true) {
            ++st.checks;
            if (quickly_disjoint(c, constraints)) break;
            auto p = interior_meet(c, constraints);
            if (!p) break;
            ++st.interior_points;
            std::vector<RatVector> levels;
            RatVector base(n);
            for (std::size_t i = 0; i < n; ++i) base[i] = (*p)[i] - w[i];
            levels.push_back(std::move(base));
            for (std::size_t i = 0; i < n; ++i) {
                RatVector e(n);
                e[i] = 1;
                levels.push_back(std::move(e));
            }
            EpsVector dir(levels);
            const Piece* best = nullptr;
            std::optional<Hit> best_hit;
            for (const auto& d : pieces) {
                auto hit = crossing(d, w, dir);
                if (!hit) continue;
                if (!best_hit || compare_hits(*hit, *best_hit) < 0) {
                    best = &d;
                    best_hit = hit;
                }
            }
            if (!best) throw Error(ErrorCode::Internal, "half-line misses the hypersurface");
            IntVector normal = best->normal;
            if (sgn(dot(normal, w)) < 0)
                for (auto& x : normal) x = -x;
            constraints.push_back(std::move(normal));
        }
    }
    Cone out = Cone::from_h(n, {}, constraints);
    if (st.checks != st.pieces + out.facets().size() || st.interior_points != out.facets().size())
        throw Error(ErrorCode::Internal, "region check counts disagree with the facet count");
    if (stats) *stats = st;
    return out;
}

namespace {

RatVector sample_off(const std::vector<Piece>& pieces, std::size_t n, std::mt19937_64& rng) {
    for (long range = 4;; range *= 2) {
        std::uniform_int_distribution<long> d(-range, range);
        for (int attempt = 0; attempt < 64; ++attempt) {
            RatVector w(n);
            for (auto& x : w) x = d(rng);
            bool on = false;
            for (const auto& p : pieces)
                if (p.cone->contains(w)) {
                    on = true;
                    break;
                }
            if (!on) return w;
        }
    }
}

// Smallest positive s with u + s v on a piece, or none.
std::optional<Rational> first_touch(const Piece& d, const IntVector& u, const IntVector& v) {
    const Rational a = dot(d.normal, u), b = dot(d.normal, v);
    if (sgn(b) != 0) {
        Rational s = -a / b;
        if (sgn(s) <= 0) return std::nullopt;
        for (const auto& f : d.cone->facets())
            if (sgn(dot(f, u) + s * dot(f, v)) < 0) return std::nullopt;
        return s;
    }
    if (sgn(a) != 0) return std::nullopt;
    Rational lo = 0;
    bool closed_at_zero = true;
    std::optional<Rational> hi;
    for (const auto& f : d.cone->facets()) {
        const Rational fu = dot(f, u), fv = dot(f, v);
        if (sgn(fv) == 0) {
            if (sgn(fu) < 0) return std::nullopt;
        } else if (sgn(fv) > 0) {
            Rational t = -fu / fv;
            if (t >= lo) {
                if (sgn(t) > 0) closed_at_zero = false;
                lo = t;
            }
        } else {
            Rational t = -fu / fv;
            if (!hi || t < *hi) hi = t;
        }
    }
    if (hi && *hi < lo) return std::nullopt;
    if (hi && sgn(*hi) <= 0) return std::nullopt;
    if (closed_at_zero) throw Error(ErrorCode::Internal, "a piece leaves the wall through the crossing point");
    return lo;
}

std::vector<IntVector> facet_span(const Cone& f) {
    std::vector<IntVector> g = f.rays();
    g.insert(g.end(), f.lineality().begin(), f.lineality().end());
    return g;
}

}  // namespace

Fan reconstruct_normal_fan(const HypersurfaceInput& h, std::uint64_t seed) {
    const std::size_t n = h.ambient_dim;
    auto pieces = prepare(h);
    std::mt19937_64 rng(seed);
    Fan fan;
    fan.ambient_dim = n;
    if (pieces.empty()) {
        fan.cones.push_back(Cone::whole_space(n));
        fan.multiplicities.push_back(1);
        fan.lineality = fan.cones[0].lineality();
        return fan;
    }
    std::map<std::string, std::size_t> seen;
    std::queue<std::size_t> todo;
    auto admit = [&](Cone c) {
        auto [it, fresh] = seen.emplace(c.key(), fan.cones.size());
        if (fresh) {
            fan.cones.push_back(std::move(c));
            todo.push(it->second);
        }
    };
    admit(region(h, sample_off(pieces, n, rng)));
    while (!todo.empty()) {
        const std::size_t ci = todo.front();
        todo.pop();
        const Cone c = fan.cones[ci];
        for (std::size_t i = 0; i < c.facets().size(); ++i) {
            IntVector u = c.facet_cone(i).relative_interior_point();
            IntVector v = c.facets()[i];
            for (auto& x : v) x = -x;
            std::optional<Rational> step;
            for (const auto& p : pieces) {
                auto s = first_touch(p, u, v);
                if (s && (!step || *s < *step)) step = s;
            }
            const Rational delta = step ? *step / 2 : Rational(1);
            RatVector w(n);
            for (std::size_t j = 0; j < n; ++j) w[j] = u[j] + delta * v[j];
            Cone next = region(h, w);
            if (!next.contains(u)) throw Error(ErrorCode::Internal, "neighbouring region misses the shared facet");
            admit(std::move(next));
        }
    }
    fan.multiplicities.assign(fan.cones.size(), 1);
    fan.lineality = fan.cones[0].lineality();
    fan.sort_canonically();
    return fan;
}

std::vector<IntVector> vertices_from_fan(const Fan& f, const HypersurfaceInput& h) {
    if (f.cones.empty()) return {};
    const std::size_t n = f.ambient_dim;
    auto pieces = prepare(h);
    // Facet key -> (cone, facet index) for every maximal cone.
    std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> walls;
    for (std::size_t ci = 0; ci < f.cones.size(); ++ci)
        for (std::size_t i = 0; i < f.cones[ci].facets().size(); ++i)
            walls[f.cones[ci].facet_cone(i).key()].push_back({ci, i});
    std::vector<std::optional<IntVector>> vert(f.cones.size());
    vert[0] = IntVector(n);
    std::queue<std::size_t> todo;
    todo.push(0);
    while (!todo.empty()) {
        const std::size_t ci = todo.front();
        todo.pop();
        const Cone& c = f.cones[ci];
        for (std::size_t i = 0; i < c.facets().size(); ++i) {
            Cone wall = c.facet_cone(i);
            const auto& sides = walls[wall.key()];
            if (sides.size() != 2) throw Error(ErrorCode::NotAFan, "a wall is not shared by exactly two regions");
            const std::size_t other = sides[0].first == ci ? sides[1].first : sides[0].first;
            // Generic point of the wall: its interior point perturbed along a spanning set.
            std::vector<RatVector> levels{to_rational(wall.relative_interior_point())};
            for (const auto& g : facet_span(wall)) levels.push_back(to_rational(g));
            EpsVector generic(levels);
            Integer mult = 0;
            for (const auto& p : pieces)
                if (p.cone->contains(generic)) mult += p.multiplicity;
            IntVector next = *vert[ci];
            for (std::size_t j = 0; j < n; ++j) next[j] += mult * c.facets()[i][j];
            if (vert[other]) {
                if (*vert[other] != next) throw Error(ErrorCode::InconsistentCycle, "paths to a region give different vertices");
            } else {
                vert[other] = std::move(next);
                todo.push(other);
            }
        }
    }
    std::vector<IntVector> out;
    for (auto& v : vert) {
        if (!v) throw Error(ErrorCode::NotAFan, "region adjacency graph is disconnected");
        out.push_back(std::move(*v));
    }
    return out;
}

HypersurfaceInput tropical_hypersurface_of_polytope(const std::vector<IntVector>& points) {
    if (points.empty()) throw Error(ErrorCode::InvalidInput, "no points");
    const std::size_t n = points[0].size();
    std::vector<IntVector> pts(points);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto diff = [&](const IntVector& a, const IntVector& b) {
        IntVector d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = a[i] - b[i];
        return d;
    };
    HypersurfaceInput out;
    out.ambient_dim = n;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const IntVector e = diff(pts[j], pts[i]);
            std::vector<IntVector> ineqs;
            for (std::size_t q = 0; q < pts.size(); ++q)
                if (q != i && q != j) ineqs.push_back(diff(pts[q], pts[i]));
            Cone c = Cone::from_h(n, {e}, ineqs);
            if (c.dim() + 1 != n) continue;
            // The face cut out at a generic normal must have i and j as its endpoints.
            const IntVector w = c.relative_interior_point();
            const Integer base = dot(w, pts[i]);
            bool endpoints = true;
            for (std::size_t q = 0; q < pts.size() && endpoints; ++q) {
                if (q == i || q == j || dot(w, pts[q]) != base) continue;
                const Integer t = dot(e, diff(pts[q], pts[i]));
                if (sgn(t) < 0 || t > dot(e, e)) endpoints = false;
            }
            if (!endpoints) continue;
            Integer len = 0;
            for (const auto& x : e) len = gcd(len, x);
            out.pieces.push_back({std::move(c), abs(len)});
        }
    return out;
}

std::vector<std::size_t> polytope_fvector(const Fan& normal_fan) {
    auto f = fvector(normal_fan);
    std::reverse(f.begin(), f.end());
    return f;
}

}  // namespace tropres
