#include "tropres/polyhedral.hpp"

#include "tropres/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace tropres {

namespace {

struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
    void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    Bits operator&(const Bits& o) const {
        Bits r;
        r.w.resize(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
};

struct DDRay {
    IntVector v;
    Bits tight;
};

IntVector combine(const Integer& a, const IntVector& x, const Integer& b, const IntVector& y) {
    IntVector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] - b * y[i];
    return primitive(std::move(r));
}

std::vector<IntVector> clean_rows(const std::vector<IntVector>& rows) {
    std::set<IntVector> seen;
    std::vector<IntVector> out;
    for (const auto& r : rows) {
        if (is_zero(r)) continue;
        IntVector p = primitive(r);
        if (seen.insert(p).second) out.push_back(std::move(p));
    }
    return out;
}

struct DDState {
    std::vector<IntVector> lin;
    std::vector<DDRay> rays;
};

DDState run_dd(std::size_t n, const std::vector<IntVector>& eqs, const std::vector<IntVector>& ineqs) {
    DDState st;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n);
        e[i] = 1;
        st.lin.push_back(std::move(e));
    }
    auto& lin = st.lin;
    for (const auto& a : eqs) {
        std::size_t p = lin.size();
        for (std::size_t i = 0; i < lin.size(); ++i)
            if (sgn(dot(a, lin[i])) != 0) {
                p = i;
                break;
            }
        if (p == lin.size()) continue;
        Integer alpha = dot(a, lin[p]);
        for (std::size_t q = 0; q < lin.size(); ++q) {
            if (q == p) continue;
            Integer beta = dot(a, lin[q]);
            if (sgn(beta) != 0) lin[q] = combine(alpha, lin[q], beta, lin[p]);
        }
        lin.erase(lin.begin() + p);
    }
    const std::size_t big_d = lin.size();
    const std::size_t k = ineqs.size();
    auto& rays = st.rays;
    for (std::size_t t = 0; t < k; ++t) {
        const IntVector& a = ineqs[t];
        std::size_t p = lin.size();
        for (std::size_t i = 0; i < lin.size(); ++i)
            if (sgn(dot(a, lin[i])) != 0) {
                p = i;
                break;
            }
        if (p < lin.size()) {
            Integer alpha = dot(a, lin[p]);
            if (sgn(alpha) < 0) {
                for (auto& x : lin[p]) x = -x;
                alpha = -alpha;
            }
            for (std::size_t q = 0; q < lin.size(); ++q) {
                if (q == p) continue;
                Integer beta = dot(a, lin[q]);
                if (sgn(beta) != 0) lin[q] = combine(alpha, lin[q], beta, lin[p]);
            }
            for (auto& r : rays) {
                Integer beta = dot(a, r.v);
                if (sgn(beta) != 0) r.v = combine(alpha, r.v, beta, lin[p]);
                r.tight.set(t);
            }
            DDRay nr{lin[p], Bits(k)};
            for (std::size_t s = 0; s < t; ++s) nr.tight.set(s);
            rays.push_back(std::move(nr));
            lin.erase(lin.begin() + p);
            continue;
        }
        std::vector<Integer> d(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            d[i] = dot(a, rays[i].v);
            int s = sgn(d[i]);
            if (s > 0) pos.push_back(i);
            else if (s < 0) neg.push_back(i);
        }
        if (neg.empty()) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (sgn(d[i]) == 0) rays[i].tight.set(t);
            continue;
        }
        const std::size_t pointed = big_d - lin.size();
        const std::size_t need = pointed >= 2 ? pointed - 2 : 0;
        std::vector<DDRay> created;
        for (auto ip : pos) {
            for (auto in : neg) {
                Bits z = rays[ip].tight & rays[in].tight;
                if (z.count() < need) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == ip || r == in) continue;
                    if (z.subset_of(rays[r].tight)) adjacent = false;
                }
                if (!adjacent) continue;
                // <a,p> q - <a,q> p, both coefficients positive.
                IntVector v = combine(d[ip], rays[in].v, d[in], rays[ip].v);
                z.set(t);
                created.push_back(DDRay{std::move(v), std::move(z)});
            }
        }
        std::vector<DDRay> next;
        next.reserve(pos.size() + created.size() + rays.size() - pos.size() - neg.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            int s = sgn(d[i]);
            if (s < 0) continue;
            if (s == 0) rays[i].tight.set(t);
            next.push_back(std::move(rays[i]));
        }
        for (auto& c : created) next.push_back(std::move(c));
        rays = std::move(next);
    }
    return st;
}

std::vector<IntVector> sorted_unique(std::vector<IntVector> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

DDResult double_description(std::size_t n, const std::vector<IntVector>& equations,
                            const std::vector<IntVector>& inequalities) {
    auto st = run_dd(n, clean_rows(equations), clean_rows(inequalities));
    DDResult r;
    r.lineality = std::move(st.lin);
    for (auto& ray : st.rays) r.rays.push_back(std::move(ray.v));
    return r;
}

Cone Cone::from_h(std::size_t n, const std::vector<IntVector>& equations,
                  const std::vector<IntVector>& inequalities) {
    for (const auto& e : equations)
        if (e.size() != n) throw Error(ErrorCode::InvalidInput, "equation length mismatch");
    for (const auto& e : inequalities)
        if (e.size() != n) throw Error(ErrorCode::InvalidInput, "inequality length mismatch");
    auto eqs = clean_rows(equations);
    auto ineqs = clean_rows(inequalities);
    auto st = run_dd(n, eqs, ineqs);
    Cone c;
    c.n_ = n;
    c.lineality_ = canonical_basis(st.lin, n);
    std::vector<IntVector> rays;
    for (auto& r : st.rays) rays.push_back(reduce_modulo(r.v, c.lineality_));
    c.rays_ = sorted_unique(std::move(rays));
    std::vector<IntVector> gens = c.rays_;
    gens.insert(gens.end(), c.lineality_.begin(), c.lineality_.end());
    c.dim_ = c.lineality_.size() + rank(c.rays_, n);
    c.equations_ = canonical_basis(kernel_basis(IntMatrix::from_rows(gens, n)), n);
    std::vector<IntVector> facets;
    const std::size_t pointed = c.dim_ - c.lineality_.size();
    for (const auto& a : ineqs) {
        IntVector f = reduce_modulo(a, c.equations_);
        if (is_zero(f)) continue;
        std::vector<IntVector> tight;
        for (const auto& r : c.rays_)
            if (sgn(dot(f, r)) == 0) tight.push_back(r);
        if (tight.size() + 1 < pointed) continue;
        if (rank(tight, n) + 1 == pointed) facets.push_back(std::move(f));
    }
    c.facets_ = sorted_unique(std::move(facets));
    c.finish();
    return c;
}

Cone Cone::from_v(std::size_t n, const std::vector<IntVector>& rays, const std::vector<IntVector>& lineality) {
    for (const auto& e : rays)
        if (e.size() != n) throw Error(ErrorCode::InvalidInput, "ray length mismatch");
    for (const auto& e : lineality)
        if (e.size() != n) throw Error(ErrorCode::InvalidInput, "lineality length mismatch");
    auto lin_in = clean_rows(lineality);
    auto rays_in = clean_rows(rays);
    auto st = run_dd(n, lin_in, rays_in);
    Cone c;
    c.n_ = n;
    c.equations_ = canonical_basis(st.lin, n);
    std::vector<IntVector> facets;
    for (auto& r : st.rays) facets.push_back(reduce_modulo(r.v, c.equations_));
    c.facets_ = sorted_unique(std::move(facets));
    std::vector<IntVector> hrows = c.equations_;
    hrows.insert(hrows.end(), c.facets_.begin(), c.facets_.end());
    c.lineality_ = canonical_basis(kernel_basis(IntMatrix::from_rows(hrows, n)), n);
    c.dim_ = n - c.equations_.size();
    const std::size_t pointed = c.dim_ - c.lineality_.size();
    std::vector<IntVector> out;
    for (const auto& r : rays_in) {
        IntVector v = reduce_modulo(r, c.lineality_);
        if (is_zero(v)) continue;
        std::vector<IntVector> tight;
        for (const auto& f : c.facets_)
            if (sgn(dot(f, v)) == 0) tight.push_back(f);
        if (tight.size() + 1 < pointed) continue;
        if (rank(tight, n) + 1 == pointed) out.push_back(std::move(v));
    }
    c.rays_ = sorted_unique(std::move(out));
    c.finish();
    return c;
}

Cone Cone::whole_space(std::size_t n) { return from_h(n, {}, {}); }

void Cone::finish() {
    facet_rays_.assign(facets_.size(), {});
    for (std::size_t i = 0; i < facets_.size(); ++i)
        for (std::size_t j = 0; j < rays_.size(); ++j)
            if (sgn(dot(facets_[i], rays_[j])) == 0) facet_rays_[i].push_back(static_cast<std::uint32_t>(j));
    std::ostringstream os;
    os << n_ << "|";
    for (const auto& l : lineality_) os << to_string(l);
    os << "|";
    for (const auto& r : rays_) os << to_string(r);
    key_ = os.str();
}

bool Cone::contains(const IntVector& x) const {
    for (const auto& e : equations_)
        if (sgn(dot(e, x)) != 0) return false;
    for (const auto& f : facets_)
        if (sgn(dot(f, x)) < 0) return false;
    return true;
}

bool Cone::contains(const RatVector& x) const {
    for (const auto& e : equations_)
        if (sgn(dot(e, x)) != 0) return false;
    for (const auto& f : facets_)
        if (sgn(dot(f, x)) < 0) return false;
    return true;
}

bool Cone::contains(const EpsVector& x) const {
    for (const auto& e : equations_)
        if (eps_sign(eps_dot(e, x)) != 0) return false;
    for (const auto& f : facets_)
        if (eps_sign(eps_dot(f, x)) < 0) return false;
    return true;
}

bool Cone::contains_in_relative_interior(const RatVector& x) const {
    for (const auto& e : equations_)
        if (sgn(dot(e, x)) != 0) return false;
    for (const auto& f : facets_)
        if (sgn(dot(f, x)) <= 0) return false;
    return true;
}

bool Cone::contains_in_relative_interior(const EpsVector& x) const {
    for (const auto& e : equations_)
        if (eps_sign(eps_dot(e, x)) != 0) return false;
    for (const auto& f : facets_)
        if (eps_sign(eps_dot(f, x)) <= 0) return false;
    return true;
}

bool Cone::contains(const Cone& other) const {
    for (const auto& r : other.rays_)
        if (!contains(r)) return false;
    for (const auto& l : other.lineality_) {
        for (const auto& e : equations_)
            if (sgn(dot(e, l)) != 0) return false;
        for (const auto& f : facets_)
            if (sgn(dot(f, l)) != 0) return false;
    }
    return true;
}

IntVector Cone::relative_interior_point() const {
    IntVector p(n_);
    for (const auto& r : rays_)
        for (std::size_t i = 0; i < n_; ++i) p[i] += r[i];
    return p;
}

Cone Cone::facet_cone(std::size_t i) const {
    std::vector<IntVector> r;
    for (auto j : facet_rays_.at(i)) r.push_back(rays_[j]);
    return from_v(n_, r, lineality_);
}

std::vector<IntVector> Cone::generators() const {
    std::vector<IntVector> g = rays_;
    for (const auto& l : lineality_) {
        g.push_back(l);
        IntVector m = l;
        for (auto& x : m) x = -x;
        g.push_back(std::move(m));
    }
    return g;
}

Cone dual_convert(const Cone& c) { return c; }

Cone intersect(const Cone& a, const Cone& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::InvalidInput, "intersect: dimension mismatch");
    std::vector<IntVector> eqs = a.equations(), ineqs = a.facets();
    eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
    ineqs.insert(ineqs.end(), b.facets().begin(), b.facets().end());
    return Cone::from_h(a.ambient_dim(), eqs, ineqs);
}

Cone cone_sum(const Cone& a, const Cone& b) {
    std::vector<IntVector> rays = a.rays(), lin = a.lineality();
    rays.insert(rays.end(), b.rays().begin(), b.rays().end());
    lin.insert(lin.end(), b.lineality().begin(), b.lineality().end());
    return Cone::from_v(a.ambient_dim(), rays, lin);
}

RatVector relative_interior_point(const Cone& c) { return to_rational(c.relative_interior_point()); }

void Fan::sort_canonically() {
    std::vector<std::size_t> idx(cones.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return cones[x].key() < cones[y].key(); });
    std::vector<Cone> c;
    std::vector<Integer> m;
    for (auto i : idx) {
        c.push_back(cones[i]);
        if (i < multiplicities.size()) m.push_back(multiplicities[i]);
    }
    cones = std::move(c);
    multiplicities = std::move(m);
}

FanRayIndex index_rays(const Fan& f) {
    FanRayIndex out;
    std::set<IntVector> all;
    for (const auto& c : f.cones)
        for (const auto& r : c.rays()) all.insert(r);
    out.rays.assign(all.begin(), all.end());
    std::map<IntVector, std::size_t> id;
    for (std::size_t i = 0; i < out.rays.size(); ++i) id[out.rays[i]] = i;
    for (const auto& c : f.cones) {
        std::vector<std::size_t> ids;
        for (const auto& r : c.rays()) ids.push_back(id[r]);
        std::sort(ids.begin(), ids.end());
        out.cone_rays.push_back(std::move(ids));
    }
    return out;
}

namespace {

bool separated(const Cone& a, const Cone& b) {
    for (const auto& e : a.equations()) {
        bool all_zero = true;
        for (const auto& r : b.rays())
            if (sgn(dot(e, r)) != 0) all_zero = false;
        for (const auto& l : b.lineality())
            if (sgn(dot(e, l)) != 0) all_zero = false;
        if (!all_zero) return true;
    }
    for (const auto& f : a.facets()) {
        bool nonpos = true;
        for (const auto& r : b.rays())
            if (sgn(dot(f, r)) > 0) {
                nonpos = false;
                break;
            }
        if (nonpos) return true;
    }
    return false;
}

}  // namespace

std::vector<std::size_t> fvector(const Fan& f, std::size_t overlap_check_limit) {
    if (f.cones.empty()) return {};
    const std::size_t l = f.cones[0].lineality_dim();
    for (const auto& c : f.cones)
        if (c.lineality_dim() != l) throw Error(ErrorCode::NotAFan, "cones have different lineality spaces");
    if (f.cones.size() <= overlap_check_limit) {
        for (std::size_t i = 0; i < f.cones.size(); ++i)
            for (std::size_t j = i + 1; j < f.cones.size(); ++j) {
                const Cone& a = f.cones[i];
                const Cone& b = f.cones[j];
                if (a.dim() != b.dim()) continue;
                if (separated(a, b) || separated(b, a)) continue;
                if (intersect(a, b).dim() == a.dim())
                    throw Error(ErrorCode::NotAFan, "two maximal cones overlap in their relative interiors");
            }
    }
    auto idx = index_rays(f);
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::size_t> counts;
    auto record = [&](std::vector<std::size_t> ids, std::size_t dim) {
        if (!seen.insert(std::move(ids)).second) return false;
        if (counts.size() <= dim - l) counts.resize(dim - l + 1, 0);
        ++counts[dim - l];
        return true;
    };
    for (std::size_t ci = 0; ci < f.cones.size(); ++ci) {
        const Cone& c = f.cones[ci];
        // Both ray lists are sorted, so local ids map by binary search.
        std::vector<std::size_t> local_to_global(c.rays().size());
        for (std::size_t j = 0; j < c.rays().size(); ++j) {
            auto it = std::lower_bound(idx.rays.begin(), idx.rays.end(), c.rays()[j]);
            local_to_global[j] = static_cast<std::size_t>(it - idx.rays.begin());
        }
        const auto& facet_sets = c.facet_rays();
        std::vector<std::pair<std::vector<std::uint32_t>, std::size_t>> stack;
        std::set<std::vector<std::uint32_t>> local_seen;
        std::vector<std::uint32_t> all(c.rays().size());
        for (std::size_t j = 0; j < all.size(); ++j) all[j] = static_cast<std::uint32_t>(j);
        stack.push_back({all, c.dim()});
        local_seen.insert(all);
        while (!stack.empty()) {
            auto [face, dim] = stack.back();
            stack.pop_back();
            std::vector<std::size_t> g;
            for (auto j : face) g.push_back(local_to_global[j]);
            std::sort(g.begin(), g.end());
            bool fresh = record(g, dim);
            if (!fresh || dim == l) continue;
            // Facets of this face: maximal proper intersections with facets of the cone.
            std::vector<std::vector<std::uint32_t>> cand;
            for (const auto& fs : facet_sets) {
                std::vector<std::uint32_t> x;
                std::set_intersection(face.begin(), face.end(), fs.begin(), fs.end(), std::back_inserter(x));
                if (x.size() == face.size()) continue;
                cand.push_back(std::move(x));
            }
            std::sort(cand.begin(), cand.end());
            cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
            for (std::size_t a = 0; a < cand.size(); ++a) {
                bool maximal = true;
                for (std::size_t b = 0; b < cand.size() && maximal; ++b) {
                    if (a == b || cand[b].size() <= cand[a].size()) continue;
                    if (std::includes(cand[b].begin(), cand[b].end(), cand[a].begin(), cand[a].end())) maximal = false;
                }
                if (!maximal) continue;
                if (local_seen.insert(cand[a]).second) stack.push_back({cand[a], dim - 1});
            }
        }
    }
    return counts;
}

}  // namespace tropres
