#include "tropres/specialized.hpp"

#include "tropres/error.hpp"
#include "tropres/lp.hpp"
#include "tropres/subdivisions.hpp"

#include <algorithm>
#include <set>

namespace tropres {

namespace {

std::vector<IntVector> negate_all(std::vector<IntVector> v) {
    for (auto& x : v)
        for (auto& y : x) y = -y;
    return v;
}

std::vector<IntVector> span_generators(const Cone& c) {
    std::vector<IntVector> g = c.rays();
    g.insert(g.end(), c.lineality().begin(), c.lineality().end());
    return g;
}

// Basis of U_S ∩ row(Cay) in R^m.
std::vector<IntVector> subspace_row_basis(const IntMatrix& cay, const std::vector<std::size_t>& specialized) {
    auto z = kernel_basis(cay.select_columns(specialized).transpose());
    std::vector<IntVector> out;
    for (const auto& v : z) {
        IntVector w(cay.cols());
        for (std::size_t j = 0; j < cay.cols(); ++j)
            for (std::size_t r = 0; r < cay.rows(); ++r) w[j] += v[r] * cay(r, j);
        out.push_back(std::move(w));
    }
    return canonical_basis(out, cay.cols());
}

}  // namespace

WeightedConeSet stable_intersection(const WeightedConeSet& a, const WeightedConeSet& b, const EpsVector* displacement) {
    if (a.ambient_dim != b.ambient_dim) throw Error(ErrorCode::InvalidInput, "stable_intersection: dimension mismatch");
    const std::size_t n = a.ambient_dim;
    WeightedConeSet out;
    out.ambient_dim = n;
    for (const auto& p : a.pieces) {
        auto ga = span_generators(p.cone);
        for (const auto& q : b.pieces) {
            auto gb = span_generators(q.cone);
            std::vector<IntVector> both = ga;
            both.insert(both.end(), gb.begin(), gb.end());
            if (rank(both, n) != n) continue;
            Cone c = intersect(p.cone, q.cone);
            if (c.dim() + n != p.cone.dim() + q.cone.dim()) continue;
            if (displacement) {
                auto rays = q.cone.rays();
                auto neg = negate_all(p.cone.rays());
                rays.insert(rays.end(), neg.begin(), neg.end());
                auto lin = q.cone.lineality();
                lin.insert(lin.end(), p.cone.lineality().begin(), p.cone.lineality().end());
                Cone diff = Cone::from_v(n, rays, lin);
                if (!diff.contains(*displacement)) continue;
            }
            auto sa = saturation_basis(IntMatrix::from_rows(ga, n));
            auto sb = saturation_basis(IntMatrix::from_rows(gb, n));
            sa.insert(sa.end(), sb.begin(), sb.end());
            Integer factor = lattice_index(IntMatrix::from_rows(sa, n));
            out.pieces.push_back({std::move(c), p.multiplicity * q.multiplicity * factor});
        }
    }
    return out;
}

bool is_nonempty(const ConfigTuple& t, const SpecializationPattern& s) {
    return codimension(extended_tuple(t, s)) == 0;
}

SpecializationPattern restrict_pattern(const ConfigTuple& t, const SpecializationPattern& s, const SubTuple& sub) {
    auto mask = s.mask(t);
    SpecializationPattern out;
    out.sets.assign(sub.tuple.k(), {});
    for (std::size_t g = 0; g < sub.embedding.size(); ++g) {
        if (!mask[sub.embedding[g]]) continue;
        auto [i, j] = sub.tuple.locate(g);
        out.sets[i].push_back(j);
    }
    return out;
}

bool specialized_contains(const ConfigTuple& t, const SpecializationPattern& s, const RatVector& w) {
    s.validate(t);
    if (w.size() != t.m()) throw Error(ErrorCode::InvalidInput, "weight length differs from number of points");
    if (!Restriction::of(t, s).in_subspace(w))
        throw Error(ErrorCode::NotInSubspace, "weight is nonzero on a specialized coordinate");
    for (const auto& sub : link_subconfigurations(t, w))
        if (is_nonempty(sub.tuple, restrict_pattern(t, s, sub))) return true;
    return false;
}

long specialized_dimension(const ConfigTuple& t, const SpecializationPattern& s) {
    if (!is_nonempty(t, s)) return -1;
    return static_cast<long>(s.free_labels(t).size()) - static_cast<long>(codimension(t));
}

SpecializedContext::SpecializedContext(ConfigTuple t, SpecializationPattern s)
    : t_(std::move(t)), s_(std::move(s)) {
    s_.validate(t_);
    r_ = Restriction::of(t_, s_);
    cay_ = cayley(t_);
    mask_ = s_.mask(t_);
    codim_ = codimension(t_);
    nonempty_ = is_nonempty(t_, s_);
    dim_ = nonempty_ ? r_.dim() - codim_ : 0;
    for (const auto& v : subspace_row_basis(cay_, s_.specialized_labels(t_))) lineality_.push_back(r_.restrict(v));
    lineality_ = canonical_basis(lineality_, r_.dim());
}

namespace {

// Decides whether e_s lies in cone(e_l : l in ineq) + {x : x_l = 0 for l in eq \ s} ∩ row(Cay)
// projected to the listed coordinates: exists z with (Cay^T z)_s = 1, (Cay^T z)_l = 0 on eq,
// (Cay^T z)_l <= 0 on ineq.
bool unit_in_cone(const IntMatrix& cay, std::size_t s, const std::vector<std::size_t>& eq,
                  const std::vector<std::size_t>& ineq) {
    const std::size_t r = cay.rows();
    auto col = [&](std::size_t l, int sign) {
        RatVector row(2 * r);
        for (std::size_t i = 0; i < r; ++i) {
            row[i] = sign * cay(i, l);
            row[r + i] = -sign * cay(i, l);
        }
        return row;
    };
    std::vector<RatVector> a;
    RatVector b;
    a.push_back(col(s, 1));
    b.push_back(1);
    for (auto l : eq) {
        a.push_back(col(l, 1));
        b.push_back(0);
        a.push_back(col(l, -1));
        b.push_back(0);
    }
    for (auto l : ineq) {
        a.push_back(col(l, 1));
        b.push_back(0);
    }
    auto res = lp_maximize(a, b, col(s, 1));
    return res.unbounded || sgn(res.value) > 0;
}

}  // namespace

const SpecializedContext::SpecData& SpecializedContext::spec_data(const std::vector<std::size_t>& es) {
    auto it = spec_.find(es);
    if (it != spec_.end()) return it->second;
    SpecData d;
    d.transversal = rank(cay_.select_columns(es)) == es.size();
    if (d.transversal) {
        // Generic displacement e_{s1} + eps e_{s2} + ... over the specialized labels,
        // tested level by level against successive tangent cones.
        std::vector<std::size_t> eq = es, ineq;
        for (std::size_t l = 0; l < t_.m(); ++l)
            if (mask_[l] && !std::binary_search(es.begin(), es.end(), l)) ineq.push_back(l);
        d.displaced = true;
        for (std::size_t l = 0; l < t_.m() && d.displaced; ++l) {
            if (!mask_[l]) continue;
            auto pos = std::find(eq.begin(), eq.end(), l);
            if (pos != eq.end()) {
                eq.erase(pos);
                d.displaced = unit_in_cone(cay_, l, eq, ineq);
            } else {
                ineq.erase(std::find(ineq.begin(), ineq.end(), l));
            }
        }
    }
    return spec_.emplace(es, d).first->second;
}

const SpecializedContext::PairData& SpecializedContext::pair(const PairTuple& e) {
    auto it = pairs_.find(e);
    if (it != pairs_.end()) return it->second;
    PairData d;
    auto labels = global_labels(t_, e);
    std::vector<std::size_t> es;
    for (auto l : labels)
        if (mask_[l]) es.push_back(l);
    std::sort(es.begin(), es.end());
    const auto& sd = spec_data(es);
    d.transversal = sd.transversal;
    if (d.transversal) {
        IntMatrix pc = cay_.select_columns(labels);
        d.maximal = rank(pc) + codim_ == 2 * t_.k();
        d.displaced = sd.displaced;
        if (d.maximal && d.displaced) {
            Integer factor = 1;
            if (!es.empty()) {
                auto sat = saturation_basis(pc);
                std::vector<std::size_t> cols;
                for (std::size_t q = 0; q < labels.size(); ++q)
                    if (mask_[labels[q]]) cols.push_back(q);
                factor = lattice_index(IntMatrix::from_rows(sat, labels.size()).select_columns(cols));
            }
            d.multiplicity = lattice_index(pc) * factor;
        }
    }
    return pairs_.emplace(e, d).first->second;
}

Integer SpecializedContext::multiplicity(const Subdivision& s) {
    std::set<PairTuple> seen;
    Integer total = 0;
    for (const auto& cell : fully_mixed_cells(mixed_view(t_, s)))
        for_each_pair_tuple(cell.parts, [&](const PairTuple& e) {
            if (seen.insert(e).second) total += pair(e).multiplicity;
        });
    return total;
}

// Generators, in free coordinates, of U_S ∩ (R>=0{e_j : j in cell \ e} + R^{outside cell} + row(Cay(cell))).
SpecializedContext::PieceGenerators SpecializedContext::piece(const std::vector<std::size_t>& cell,
                                                              const std::vector<std::size_t>& e) {
    const std::size_t zdim = cay_.rows();
    std::vector<bool> in_cell(cay_.cols(), false), in_e(cay_.cols(), false);
    for (auto l : cell) in_cell[l] = true;
    for (auto l : e) in_e[l] = true;
    std::pair<std::vector<std::size_t>, std::vector<std::size_t>> key;
    for (std::size_t l = 0; l < cay_.cols(); ++l) {
        if (!mask_[l] || !in_cell[l]) continue;
        (in_e[l] ? key.first : key.second).push_back(l);
    }
    auto it = zcones_.find(key);
    if (it == zcones_.end()) {
        std::vector<IntVector> eqs, ineqs;
        for (auto l : key.first) eqs.push_back(cay_.column(l));
        for (auto l : key.second) ineqs.push_back(negate_all({cay_.column(l)})[0]);
        it = zcones_.emplace(key, double_description(zdim, eqs, ineqs)).first;
    }
    const auto& dd = it->second;
    auto image = [&](const IntVector& z) {
        IntVector w(r_.dim());
        for (std::size_t i = 0; i < r_.dim(); ++i) {
            const std::size_t l = r_.free[i];
            if (!in_cell[l]) continue;
            for (std::size_t q = 0; q < zdim; ++q) w[i] += z[q] * cay_(q, l);
        }
        return w;
    };
    PieceGenerators g;
    for (const auto& z : dd.rays) g.rays.push_back(image(z));
    for (const auto& z : dd.lineality) g.lineality.push_back(image(z));
    for (std::size_t i = 0; i < r_.dim(); ++i) {
        const std::size_t l = r_.free[i];
        IntVector u(r_.dim());
        u[i] = 1;
        if (!in_cell[l])
            g.lineality.push_back(std::move(u));
        else if (!in_e[l])
            g.rays.push_back(std::move(u));
    }
    return g;
}

namespace {

using PieceGens = SpecializedContext::PieceGenerators;

std::size_t piece_dim(const PieceGens& g, std::size_t n) {
    std::vector<IntVector> all = g.rays;
    all.insert(all.end(), g.lineality.begin(), g.lineality.end());
    return rank(all, n);
}

}  // namespace

std::vector<IntVector> SpecializedContext::link(const Ridge& ridge, LinkMethod method) {
    return method == LinkMethod::Slicing ? link_slicing(ridge) : link_projections(ridge);
}

std::vector<IntVector> SpecializedContext::link_projections(const Ridge& ridge) {
    std::set<IntVector> out;
    auto emit = [&](const IntVector& g, bool both) {
        IntVector p = project_orthogonal(g, ridge.span);
        if (is_zero(p)) return;
        out.insert(p);
        if (both) out.insert(negate_all({p})[0]);
    };
    for (const auto& sub : link_subconfigurations(t_, r_.embed(to_rational(ridge.interior)))) {
        std::vector<std::vector<std::size_t>> parts(sub.tuple.k());
        for (std::size_t i = 0; i < sub.tuple.k(); ++i)
            for (std::size_t j = 0; j < sub.tuple.size(i); ++j) parts[i].push_back(j);
        for_each_pair_tuple(parts, [&](const PairTuple& e) {
            std::vector<std::size_t> labels;
            for (auto g : global_labels(sub.tuple, e)) labels.push_back(sub.embedding[g]);
            std::vector<std::size_t> es;
            for (auto l : labels)
                if (mask_[l]) es.push_back(l);
            if (rank(cay_.select_columns(es)) != es.size()) return;
            auto g = piece(sub.embedding, labels);
            if (piece_dim(g, r_.dim()) != dim_) return;
            for (const auto& v : g.rays) emit(v, false);
            for (const auto& v : g.lineality) emit(v, true);
        });
    }
    return {out.begin(), out.end()};
}

const std::vector<IntVector>& SpecializedContext::subfan_rays(const SubTuple& sub, const SpecializationPattern& sp) {
    auto it = subfan_rays_.find(sub.embedding);
    if (it != subfan_rays_.end()) return it->second;
    const Restriction rs = Restriction::of(sub.tuple, sp);
    Fan f = restricted_secondary_fan(cayley(sub.tuple), rs);
    std::set<IntVector> rays;
    for (const auto& c : f.cones) rays.insert(c.rays().begin(), c.rays().end());
    std::vector<IntVector> keep;
    for (const auto& v : rays)
        if (specialized_contains(sub.tuple, sp, rs.embed(to_rational(v)))) keep.push_back(v);
    return subfan_rays_.emplace(sub.embedding, std::move(keep)).first->second;
}

std::vector<IntVector> SpecializedContext::link_slicing(const Ridge& ridge) {
    std::set<IntVector> out;
    std::vector<long> free_index(t_.m(), -1);
    for (std::size_t i = 0; i < r_.dim(); ++i) free_index[r_.free[i]] = static_cast<long>(i);
    auto emit = [&](const IntVector& g, bool both) {
        IntVector p = project_orthogonal(g, ridge.span);
        if (is_zero(p)) return;
        out.insert(p);
        if (both) out.insert(negate_all({p})[0]);
    };
    for (const auto& sub : link_subconfigurations(t_, r_.embed(to_rational(ridge.interior)))) {
        const auto sp = restrict_pattern(t_, s_, sub);
        if (!is_nonempty(sub.tuple, sp)) continue;
        const Restriction rs = Restriction::of(sub.tuple, sp);
        // Sub free coordinate -> parent free coordinate.
        std::vector<std::size_t> to_parent;
        std::vector<bool> covered(r_.dim(), false);
        for (auto g : rs.free) {
            auto idx = static_cast<std::size_t>(free_index[sub.embedding[g]]);
            to_parent.push_back(idx);
            covered[idx] = true;
        }
        auto lift = [&](const IntVector& v) {
            IntVector w(r_.dim());
            for (std::size_t i = 0; i < v.size(); ++i) w[to_parent[i]] = v[i];
            return w;
        };
        std::vector<IntVector> lin;
        for (const auto& v : subspace_row_basis(cayley(sub.tuple), sp.specialized_labels(sub.tuple)))
            lin.push_back(lift(rs.restrict(v)));
        for (std::size_t i = 0; i < r_.dim(); ++i)
            if (!covered[i]) {
                IntVector u(r_.dim());
                u[i] = 1;
                lin.push_back(std::move(u));
            }
        const std::size_t lin_dim = rank(lin, r_.dim());
        if (lin_dim == dim_) {
            for (const auto& v : lin) emit(v, true);
        } else if (lin_dim + 1 == dim_) {
            for (const auto& v : subfan_rays(sub, sp)) emit(lift(v), false);
        }
    }
    return {out.begin(), out.end()};
}

RatVector nontrivial_vector(const ConfigTuple& t, const SpecializationPattern& s) {
    SpecializedContext ctx(t, s);
    const auto& r = ctx.restriction();
    std::vector<std::size_t> all(t.m());
    for (std::size_t j = 0; j < t.m(); ++j) all[j] = j;
    RowReducer lin(r.dim());
    for (const auto& v : ctx.lineality()) lin.add(v);
    std::vector<std::vector<std::size_t>> labels(t.k());
    for (std::size_t i = 0; i < t.k(); ++i)
        for (std::size_t j = 0; j < t.size(i); ++j) labels[i].push_back(j);
    std::optional<IntVector> found;
    for_each_pair_tuple(labels, [&](const PairTuple& e) {
        if (found || !ctx.pair(e).transversal) return;
        auto g = ctx.piece(all, global_labels(t, e));
        for (const auto& v : g.rays)
            if (!lin.in_span(v)) {
                found = v;
                return;
            }
        for (const auto& v : g.lineality)
            if (!lin.in_span(v)) {
                found = v;
                return;
            }
    });
    if (!found) throw Error(ErrorCode::NoSuchVector, "the specialized resultant equals its lineality space");
    return r.embed(to_rational(*found));
}

EpsVector starting_point(const ConfigTuple& t, const SpecializationPattern& s) {
    SpecializedContext ctx(t, s);
    if (!ctx.nonempty()) throw Error(ErrorCode::EmptySpecializedResultant, "the specialized resultant is empty");
    const auto& r = ctx.restriction();
    if (ctx.lineality().size() == ctx.dim()) {
        std::vector<RatVector> levels;
        for (const auto& b : ctx.lineality()) levels.push_back(r.embed(to_rational(b)));
        if (levels.empty()) levels.push_back(RatVector(t.m()));
        return EpsVector(levels);
    }
    RatVector w = nontrivial_vector(t, s);
    for (const auto& sub : link_subconfigurations(t, w)) {
        auto sp = restrict_pattern(t, s, sub);
        if (!is_nonempty(sub.tuple, sp) || codimension(sub.tuple) != ctx.codim()) continue;
        EpsVector inner = starting_point(sub.tuple, sp);
        std::vector<RatVector> levels{w};
        for (const auto& l : inner.levels) {
            RatVector x(t.m());
            for (std::size_t g = 0; g < sub.embedding.size(); ++g) x[sub.embedding[g]] = l[g];
            levels.push_back(std::move(x));
        }
        return EpsVector(levels);
    }
    throw Error(ErrorCode::Internal, "no fully mixed cell preserves the codimension");
}

std::vector<IntVector> stable_link(const ConfigTuple& t, const SpecializationPattern& s, const RatVector& w,
                                   LinkMethod method) {
    SpecializedContext ctx(t, s);
    const auto& r = ctx.restriction();
    if (w.size() != t.m()) throw Error(ErrorCode::InvalidInput, "weight length differs from number of points");
    if (!r.in_subspace(w)) throw Error(ErrorCode::NotInSubspace, "weight is nonzero on a specialized coordinate");
    if (!ctx.nonempty()) throw Error(ErrorCode::NotARidge, "the specialized resultant is empty");
    auto rc = restricted_cone(ctx.cay(), r, EpsVector(r.restrict(w)));
    if (rc.cone.dim() + 1 != ctx.dim())
        throw Error(ErrorCode::NotARidge, "point lies in a cone of dimension " + std::to_string(rc.cone.dim()));
    Ridge ridge;
    ridge.interior = to_primitive(r.restrict(w));
    ridge.span = rc.cone.rays();
    ridge.span.insert(ridge.span.end(), rc.cone.lineality().begin(), rc.cone.lineality().end());
    std::vector<IntVector> out;
    for (const auto& v : ctx.link(ridge, method)) out.push_back(r.embed(v));
    return out;
}

Fan traverse_specialized(const ConfigTuple& t, const SpecializationPattern& s, LinkMethod method) {
    SpecializedContext ctx(t, s);
    const auto& r = ctx.restriction();
    if (!ctx.nonempty()) {
        Fan f;
        f.ambient_dim = r.dim();
        f.lineality = ctx.lineality();
        return f;
    }
    TraversalOracles o;
    if (s.empty())
        o.link = [&t](const Ridge& rd) { return resultant_link(t, rd); };
    else
        o.link = [&ctx, method](const Ridge& rd) { return ctx.link(rd, method); };
    o.multiplicity = [&ctx](const RestrictedCone& rc) { return ctx.multiplicity(rc.subdivision); };
    return traverse_subfan(ctx.cay(), r, r.restrict(starting_point(t, s)), ctx.dim(), o);
}

WeightedConeSet specialized_description(const ConfigTuple& t, const SpecializationPattern& s) {
    SpecializedContext ctx(t, s);
    const auto& r = ctx.restriction();
    WeightedConeSet out;
    out.ambient_dim = r.dim();
    if (!ctx.nonempty()) return out;
    std::vector<std::size_t> all(t.m());
    for (std::size_t j = 0; j < t.m(); ++j) all[j] = j;
    std::vector<std::vector<std::size_t>> labels(t.k());
    for (std::size_t i = 0; i < t.k(); ++i)
        for (std::size_t j = 0; j < t.size(i); ++j) labels[i].push_back(j);
    std::map<std::string, std::size_t> index;
    for_each_pair_tuple(labels, [&](const PairTuple& e) {
        const auto& d = ctx.pair(e);
        if (sgn(d.multiplicity) == 0) return;
        auto g = ctx.piece(all, global_labels(t, e));
        Cone c = Cone::from_v(r.dim(), g.rays, g.lineality);
        if (c.dim() != ctx.dim()) return;
        auto [it, fresh] = index.emplace(c.key(), out.pieces.size());
        if (fresh)
            out.pieces.push_back({std::move(c), d.multiplicity});
        else
            out.pieces[it->second].multiplicity += d.multiplicity;
    });
    return out;
}

}  // namespace tropres
