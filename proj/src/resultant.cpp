#include "tropres/resultant.hpp"

#include "tropres/error.hpp"
#include "tropres/subdivisions.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tropres {

MatroidOracle transversal_matroid(std::vector<std::vector<std::size_t>> membership, std::size_t num_sets) {
    MatroidOracle m;
    m.size = membership.size();
    m.independent = [membership = std::move(membership), num_sets](const std::vector<std::size_t>& x) {
        std::vector<long> owner(num_sets, -1);
        std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t e, std::vector<bool>& used) {
            for (auto s : membership[e]) {
                if (used[s]) continue;
                used[s] = true;
                if (owner[s] < 0 || augment(static_cast<std::size_t>(owner[s]), used)) {
                    owner[s] = static_cast<long>(e);
                    return true;
                }
            }
            return false;
        };
        for (auto e : x) {
            std::vector<bool> used(num_sets, false);
            if (!augment(e, used)) return false;
        }
        return true;
    };
    return m;
}

MatroidOracle vector_matroid(std::vector<IntVector> vectors, std::size_t dim) {
    MatroidOracle m;
    m.size = vectors.size();
    m.independent = [vectors = std::move(vectors), dim](const std::vector<std::size_t>& x) {
        RowReducer rr(dim);
        for (auto e : x)
            if (!rr.add(vectors[e])) return false;
        return true;
    };
    return m;
}

std::vector<std::size_t> matroid_intersection(const MatroidOracle& a, const MatroidOracle& b) {
    if (a.size != b.size) throw Error(ErrorCode::InvalidInput, "matroids on different ground sets");
    const std::size_t n = a.size;
    std::vector<bool> in(n, false);
    while (true) {
        std::vector<std::size_t> cur;
        for (std::size_t e = 0; e < n; ++e)
            if (in[e]) cur.push_back(e);
        auto with = [&](std::size_t add) {
            auto s = cur;
            s.push_back(add);
            return s;
        };
        auto swap = [&](std::size_t drop, std::size_t add) {
            std::vector<std::size_t> s;
            for (auto e : cur)
                if (e != drop) s.push_back(e);
            s.push_back(add);
            return s;
        };
        std::vector<bool> source(n, false), sink(n, false);
        for (std::size_t y = 0; y < n; ++y) {
            if (in[y]) continue;
            source[y] = a.independent(with(y));
            sink[y] = b.independent(with(y));
        }
        // Shortest path from a source to a sink; arcs x->y (x in I, y not) if I-x+y in a,
        // arcs y->x if I-x+y in b.
        std::vector<long> prev(n, -2);
        std::deque<std::size_t> queue;
        for (std::size_t y = 0; y < n; ++y)
            if (source[y]) {
                prev[y] = -1;
                queue.push_back(y);
            }
        long end = -1;
        while (!queue.empty() && end < 0) {
            std::size_t v = queue.front();
            queue.pop_front();
            if (!in[v] && sink[v]) {
                end = static_cast<long>(v);
                break;
            }
            for (std::size_t w = 0; w < n; ++w) {
                if (prev[w] != -2 || in[w] == in[v]) continue;
                bool arc = in[v] ? a.independent(swap(v, w)) : b.independent(swap(w, v));
                if (!arc) continue;
                prev[w] = static_cast<long>(v);
                queue.push_back(w);
            }
        }
        if (end < 0) return cur;
        for (long v = end; v >= 0; v = prev[static_cast<std::size_t>(v)]) in[static_cast<std::size_t>(v)] = !in[static_cast<std::size_t>(v)];
    }
}

IntMatrix pair_cayley(const ConfigTuple& t, const PairTuple& e) {
    return cayley(t).select_columns(global_labels(t, e));
}

Integer pair_multiplicity(const ConfigTuple& t, const PairTuple& e) { return lattice_index(pair_cayley(t, e)); }

std::pair<Cone, Integer> pair_cone(const ConfigTuple& t, const PairTuple& e) {
    const std::size_t m = t.m();
    auto labels = global_labels(t, e);
    std::vector<IntVector> rays;
    for (std::size_t j = 0; j < m; ++j) {
        if (std::find(labels.begin(), labels.end(), j) != labels.end()) continue;
        IntVector v(m);
        v[j] = 1;
        rays.push_back(std::move(v));
    }
    return {Cone::from_v(m, rays, cayley(t).row_list()), pair_multiplicity(t, e)};
}

namespace {

std::vector<std::vector<std::size_t>> all_labels(const ConfigTuple& t) {
    std::vector<std::vector<std::size_t>> out(t.k());
    for (std::size_t i = 0; i < t.k(); ++i)
        for (std::size_t j = 0; j < t.size(i); ++j) out[i].push_back(j);
    return out;
}

IntVector difference(const IntVector& a, const IntVector& b) {
    IntVector d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

// Labels j of configuration i such that a_ij - a_i0 form a basis of the
// linear span of the differences.
std::vector<std::size_t> affine_basis(const ConfigTuple& t, std::size_t i) {
    std::vector<IntVector> diffs;
    for (std::size_t j = 1; j < t.size(i); ++j) diffs.push_back(difference(t.point(i, j), t.point(i, 0)));
    std::vector<std::size_t> out;
    for (auto x : independent_subset(diffs, t.n())) out.push_back(x + 1);
    return out;
}

}  // namespace

WeightedConeSet simple_description(const ConfigTuple& t) {
    WeightedConeSet out;
    out.ambient_dim = t.m();
    for_each_pair_tuple(all_labels(t), [&](const PairTuple& e) {
        auto [c, mult] = pair_cone(t, e);
        out.pieces.push_back({std::move(c), mult});
    });
    return out;
}

std::size_t codimension(const ConfigTuple& t) {
    std::vector<std::vector<std::size_t>> membership;
    std::vector<IntVector> vecs;
    for (std::size_t i = 0; i < t.k(); ++i)
        for (auto j : affine_basis(t, i)) {
            membership.push_back({i});
            vecs.push_back(difference(t.point(i, j), t.point(i, 0)));
        }
    auto common = matroid_intersection(transversal_matroid(membership, t.k()), vector_matroid(vecs, t.n()));
    return t.k() - common.size();
}

std::size_t codimension_bruteforce(const ConfigTuple& t) {
    std::vector<std::vector<std::size_t>> allowed(t.k());
    for (std::size_t i = 0; i < t.k(); ++i) {
        allowed[i].push_back(0);
        for (auto j : affine_basis(t, i)) allowed[i].push_back(j);
        if (allowed[i].size() == 1) allowed[i].push_back(1);
    }
    std::size_t best = 0;
    for_each_pair_tuple(allowed, [&](const PairTuple& e) {
        std::vector<IntVector> d;
        for (std::size_t i = 0; i < t.k(); ++i) d.push_back(difference(t.point(i, e[i][1]), t.point(i, e[i][0])));
        best = std::max(best, rank(d, t.n()));
    });
    return t.k() - best;
}

std::size_t codimension_sturmfels(const ConfigTuple& t) {
    const std::size_t k = t.k();
    if (k >= 63) throw Error(ErrorCode::InvalidInput, "too many configurations for subset enumeration");
    std::vector<std::vector<IntVector>> spans(k);
    for (std::size_t i = 0; i < k; ++i)
        for (auto j : affine_basis(t, i)) spans[i].push_back(difference(t.point(i, j), t.point(i, 0)));
    long best = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<IntVector> rows;
        long size = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) {
                ++size;
                rows.insert(rows.end(), spans[i].begin(), spans[i].end());
            }
        best = std::max(best, size - static_cast<long>(rank(rows, t.n())));
    }
    return static_cast<std::size_t>(best);
}

bool contains(const ConfigTuple& t, const EpsVector& w) {
    if (w.size() != t.m()) throw Error(ErrorCode::InvalidInput, "weight length differs from number of points");
    auto s = regular_subdivision(cayley(t), w);
    return !fully_mixed_cells(mixed_view(t, s)).empty();
}

bool contains(const ConfigTuple& t, const RatVector& w) { return contains(t, EpsVector(w)); }

EpsVector generic_point(const ConfigTuple& t) {
    const std::size_t c = codimension(t);
    auto keep = all_labels(t);
    auto sub = [&](const std::vector<std::vector<std::size_t>>& labels) {
        std::vector<std::vector<IntVector>> pts(t.k());
        for (std::size_t i = 0; i < t.k(); ++i)
            for (auto j : labels[i]) pts[i].push_back(t.point(i, j));
        return ConfigTuple::from_points(pts);
    };
    for (std::size_t i = 0; i < t.k(); ++i) {
        for (std::size_t pos = 0; keep[i].size() > 2 && pos < keep[i].size();) {
            auto trial = keep;
            trial[i].erase(trial[i].begin() + static_cast<std::ptrdiff_t>(pos));
            if (codimension(sub(trial)) == c)
                keep = std::move(trial);
            else
                ++pos;
        }
    }
    PairTuple e(t.k());
    for (std::size_t i = 0; i < t.k(); ++i) e[i] = {keep[i][0], keep[i][1]};
    auto [cone, mult] = pair_cone(t, e);
    std::vector<IntVector> levels{cone.relative_interior_point()};
    for (const auto& r : cone.rays()) levels.push_back(r);
    for (const auto& l : cone.lineality()) levels.push_back(l);
    return EpsVector::from_ints(levels);
}

std::vector<IntVector> resultant_link(const ConfigTuple& t, const Ridge& ridge) {
    const std::size_t m = t.m(), k = t.k();
    const std::size_t c = codimension(t);
    std::set<IntVector> out;
    auto emit = [&](const IntVector& g) {
        IntVector p = project_orthogonal(g, ridge.span);
        if (!is_zero(p)) out.insert(std::move(p));
    };
    for (const auto& st : link_subconfigurations(t, to_rational(ridge.interior))) {
        const ConfigTuple& a = st.tuple;
        const IntMatrix cay = cayley(a);
        std::vector<bool> in_cell(m, false);
        for (auto g : st.embedding) in_cell[g] = true;
        // Lineality of every piece of this cell.
        std::vector<IntVector> lineality;
        for (std::size_t j = 0; j < m; ++j)
            if (!in_cell[j]) {
                IntVector e(m);
                e[j] = 1;
                lineality.push_back(std::move(e));
            }
        for (std::size_t r = 0; r < cay.rows(); ++r) {
            IntVector v(m);
            for (std::size_t g = 0; g < st.embedding.size(); ++g) v[st.embedding[g]] = cay(r, g);
            lineality.push_back(std::move(v));
        }
        std::set<IntVector> lin_dirs;
        for (const auto& l : lineality) {
            IntVector p = project_orthogonal(l, ridge.span);
            if (is_zero(p)) continue;
            lin_dirs.insert(p);
            for (auto& x : p) x = -x;
            lin_dirs.insert(std::move(p));
        }
        for_each_pair_tuple(all_labels(a), [&](const PairTuple& e) {
            if (rank(cay.select_columns(global_labels(a, e))) != 2 * k - c) return;
            out.insert(lin_dirs.begin(), lin_dirs.end());
            auto labels = global_labels(a, e);
            for (std::size_t g = 0; g < st.embedding.size(); ++g) {
                if (std::find(labels.begin(), labels.end(), g) != labels.end()) continue;
                IntVector v(m);
                v[st.embedding[g]] = 1;
                emit(v);
            }
        });
    }
    return {out.begin(), out.end()};
}

Integer resultant_multiplicity(const ConfigTuple& t, const Subdivision& s) {
    const std::size_t c = codimension(t);
    const IntMatrix cay = cayley(t);
    std::set<PairTuple> pairs;
    for (const auto& cell : fully_mixed_cells(mixed_view(t, s))) for_each_pair_tuple(cell.parts, [&](const PairTuple& e) { pairs.insert(e); });
    Integer total = 0;
    for (const auto& e : pairs) {
        IntMatrix sub = cay.select_columns(global_labels(t, e));
        if (rank(sub) == 2 * t.k() - c) total += lattice_index(sub);
    }
    return total;
}

Fan traverse(const ConfigTuple& t) {
    const std::size_t c = codimension(t);
    const IntMatrix cay = cayley(t);
    TraversalOracles o;
    o.link = [&t](const Ridge& r) { return resultant_link(t, r); };
    o.multiplicity = [&t](const RestrictedCone& rc) { return resultant_multiplicity(t, rc.subdivision); };
    return traverse_subfan(cay, Restriction::identity(t.m()), generic_point(t), t.m() - c, o);
}

}  // namespace tropres
