#include "tropres/subdivisions.hpp"

#include "tropres/error.hpp"

#include <algorithm>
#include <numeric>

namespace tropres {

std::vector<std::size_t> Subdivision::unmarked() const {
    std::vector<bool> marked(num_points, false);
    for (const auto& c : cells)
        for (auto j : c) marked[j] = true;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < num_points; ++j)
        if (!marked[j]) out.push_back(j);
    return out;
}

namespace {

std::vector<IntVector> column_vectors(const IntMatrix& m, const std::vector<std::size_t>& rows,
                                      const std::vector<std::size_t>& cols) {
    std::vector<IntVector> out;
    for (auto c : cols) {
        IntVector v(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) v[i] = m(rows[i], c);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::size_t> independent_rows(const IntMatrix& m, const std::vector<std::size_t>& cols) {
    std::vector<IntVector> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        IntVector v(cols.size());
        for (std::size_t i = 0; i < cols.size(); ++i) v[i] = m(r, cols[i]);
        rows.push_back(std::move(v));
    }
    return independent_subset(rows, cols.size());
}

std::vector<std::size_t> all_rows(const IntMatrix& m) {
    std::vector<std::size_t> r(m.cols());
    std::iota(r.begin(), r.end(), 0);
    return independent_rows(m, r);
}

// Label sets of the lower facets of the lifted cell.
std::vector<std::vector<std::size_t>> lower_cells(const IntMatrix& m, const std::vector<std::size_t>& cell,
                                                  const RatVector& w) {
    bool constant = true;
    for (auto j : cell)
        if (w[j] != w[cell[0]]) constant = false;
    if (constant) return {cell};
    auto rows = independent_rows(m, cell);
    const std::size_t r = rows.size();
    Integer den = 1;
    for (auto j : cell) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), w[j].get_den_mpz_t());
    std::vector<IntVector> gens = column_vectors(m, rows, cell);
    for (std::size_t i = 0; i < cell.size(); ++i) {
        Rational x = w[cell[i]] * den;
        gens[i].push_back(x.get_num());
    }
    std::vector<IntVector> ineqs = gens;
    IntVector up(r + 1);
    up[r] = 1;
    ineqs.push_back(up);
    auto dd = double_description(r + 1, {}, ineqs);
    if (!dd.lineality.empty()) throw Error(ErrorCode::Internal, "lifted cell is not full-dimensional");
    std::vector<std::vector<std::size_t>> out;
    for (const auto& h : dd.rays) {
        if (sgn(h[r]) <= 0) continue;
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i < cell.size(); ++i)
            if (sgn(dot(h, gens[i])) == 0) c.push_back(cell[i]);
        out.push_back(std::move(c));
    }
    return out;
}

Integer determinant(std::vector<IntVector> a) {
    const std::size_t n = a.size();
    Integer prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                a[i][j] = a[c][c] * a[i][j] - a[i][c] * a[c][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[c][c];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace

Subdivision regular_subdivision(const IntMatrix& homogeneous, const EpsVector& w) {
    const std::size_t m = homogeneous.cols();
    if (w.size() != m) throw Error(ErrorCode::InvalidInput, "weight length differs from number of points");
    std::vector<std::size_t> all(m);
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<std::size_t>> cells{all};
    for (const auto& level : w.levels) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& c : cells) {
            auto sub = lower_cells(homogeneous, c, level);
            for (auto& s : sub) next.push_back(std::move(s));
        }
        cells = std::move(next);
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return Subdivision{m, std::move(cells)};
}

Subdivision regular_subdivision(const IntMatrix& homogeneous, const RatVector& w) {
    return regular_subdivision(homogeneous, EpsVector(w));
}

Subdivision regular_subdivision(const PointConfiguration& p, const RatVector& w) {
    return regular_subdivision(homogenize(p), EpsVector(w));
}

bool MixedCell::fully_mixed() const {
    for (const auto& p : parts)
        if (p.size() < 2) return false;
    return true;
}

MixedCellView mixed_view(const ConfigTuple& t, const Subdivision& s) {
    MixedCellView v;
    for (const auto& c : s.cells) {
        MixedCell mc;
        mc.parts.assign(t.k(), {});
        for (auto g : c) {
            auto [i, j] = t.locate(g);
            mc.parts[i].push_back(j);
        }
        for (const auto& p : mc.parts)
            if (p.empty()) throw Error(ErrorCode::EmptyFactor, "mixed cell misses a configuration");
        v.push_back(std::move(mc));
    }
    return v;
}

std::vector<MixedCell> fully_mixed_cells(const MixedCellView& v) {
    std::vector<MixedCell> out;
    for (const auto& c : v)
        if (c.fully_mixed()) out.push_back(c);
    return out;
}

ConeForms secondary_cone_forms(const IntMatrix& homogeneous, const Subdivision& s) {
    const IntMatrix& mat = homogeneous;
    const std::size_t m = mat.cols();
    auto rows = all_rows(mat);
    const std::size_t r = rows.size();
    std::vector<std::size_t> labels(m);
    std::iota(labels.begin(), labels.end(), 0);
    const std::vector<IntVector> cols = column_vectors(mat, rows, labels);

    struct CellData {
        std::vector<std::size_t> basis;
        std::vector<IntVector> basis_rows;  // P_B as rows
    };
    std::vector<CellData> data;
    for (const auto& c : s.cells) {
        std::vector<IntVector> cv;
        for (auto j : c) cv.push_back(cols[j]);
        auto idx = independent_subset(cv, r);
        if (idx.size() != r) throw Error(ErrorCode::Internal, "secondary_cone: cell is not full-dimensional");
        CellData d;
        for (auto i : idx) d.basis.push_back(c[i]);
        d.basis_rows.assign(r, IntVector(r));
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b) d.basis_rows[a][b] = cols[d.basis[b]][a];
        data.push_back(std::move(d));
    }
    // Linear form w_j - (affine extension of w over the basis of cell ci)(a_j).
    auto forms = [&](std::size_t ci, const std::vector<std::size_t>& js) {
        std::vector<IntVector> rhs;
        for (auto j : js) rhs.push_back(cols[j]);
        std::vector<RatVector> sol;
        if (!solve_square(data[ci].basis_rows, rhs, sol)) throw Error(ErrorCode::Internal, "singular cell basis");
        std::vector<IntVector> out;
        for (std::size_t q = 0; q < js.size(); ++q) {
            RatVector f(m);
            f[js[q]] += 1;
            for (std::size_t b = 0; b < r; ++b) f[data[ci].basis[b]] -= sol[q][b];
            out.push_back(to_primitive(f));
        }
        return out;
    };
    std::vector<IntVector> eqs, ineqs;
    const auto unmarked = s.unmarked();
    for (std::size_t ci = 0; ci < s.cells.size(); ++ci) {
        const auto& c = s.cells[ci];
        std::vector<std::size_t> rest;
        for (auto j : c)
            if (std::find(data[ci].basis.begin(), data[ci].basis.end(), j) == data[ci].basis.end()) rest.push_back(j);
        for (auto& f : forms(ci, rest)) eqs.push_back(std::move(f));
        for (auto& f : forms(ci, unmarked)) ineqs.push_back(std::move(f));
    }
    for (std::size_t a = 0; a < s.cells.size(); ++a)
        for (std::size_t b = 0; b < s.cells.size(); ++b) {
            if (a == b) continue;
            std::vector<std::size_t> common;
            std::set_intersection(s.cells[a].begin(), s.cells[a].end(), s.cells[b].begin(), s.cells[b].end(),
                                  std::back_inserter(common));
            if (common.size() + 1 < r) continue;
            RowReducer rr(r);
            for (auto j : common) rr.add(cols[j]);
            if (rr.rank() + 1 != r) continue;
            for (auto p : s.cells[b]) {
                if (rr.in_span(cols[p])) continue;
                ineqs.push_back(forms(a, {p})[0]);
                break;
            }
        }
    auto dedupe = [](std::vector<IntVector>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedupe(eqs);
    dedupe(ineqs);
    return {std::move(eqs), std::move(ineqs)};
}

Cone secondary_cone(const IntMatrix& homogeneous, const Subdivision& s) {
    auto f = secondary_cone_forms(homogeneous, s);
    return Cone::from_h(homogeneous.cols(), f.equations, f.inequalities);
}

Cone secondary_cone(const PointConfiguration& p, const Subdivision& s) { return secondary_cone(homogenize(p), s); }

SubTuple sub_tuple(const ConfigTuple& t, const MixedCell& c) {
    std::vector<PointConfiguration> cs;
    SubTuple st;
    for (std::size_t i = 0; i < t.k(); ++i) {
        PointConfiguration pc{t.n(), {}};
        for (auto j : c.parts[i]) {
            pc.points.push_back(t.point(i, j));
            st.embedding.push_back(t.offset(i) + j);
        }
        cs.push_back(std::move(pc));
    }
    st.tuple = ConfigTuple(t.n(), std::move(cs));
    return st;
}

std::vector<SubTuple> link_subconfigurations(const ConfigTuple& t, const EpsVector& w) {
    auto s = regular_subdivision(cayley(t), w);
    std::vector<SubTuple> out;
    for (const auto& c : fully_mixed_cells(mixed_view(t, s))) out.push_back(sub_tuple(t, c));
    return out;
}

std::vector<SubTuple> link_subconfigurations(const ConfigTuple& t, const RatVector& w) {
    return link_subconfigurations(t, EpsVector(w));
}

RatVector gkz_vector(const IntMatrix& homogeneous, const Subdivision& triangulation) {
    const IntMatrix& mat = homogeneous;
    auto rows = all_rows(mat);
    const std::size_t r = rows.size();
    auto sat = saturation_basis(mat.transpose());
    std::vector<IntVector> q(r, IntVector(r));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) q[a][b] = sat[b][rows[a]];
    Integer unit = abs(determinant(q));
    RatVector phi(mat.cols());
    for (const auto& c : triangulation.cells) {
        if (c.size() != r) throw Error(ErrorCode::NotATriangulation, "cell is not a simplex");
        std::vector<IntVector> a(r, IntVector(r));
        for (std::size_t x = 0; x < r; ++x)
            for (std::size_t y = 0; y < r; ++y) a[x][y] = mat(rows[x], c[y]);
        Integer det = abs(determinant(a));
        if (sgn(det) == 0) throw Error(ErrorCode::NotATriangulation, "degenerate simplex");
        Rational vol(det, unit);
        vol.canonicalize();
        for (auto j : c) phi[j] += vol;
    }
    return phi;
}

RatVector gkz_vector(const PointConfiguration& p, const Subdivision& triangulation) {
    return gkz_vector(homogenize(p), triangulation);
}

std::vector<Cone> secondary_tropical_cones(const IntMatrix& homogeneous) {
    const std::size_t m = homogeneous.cols();
    const std::size_t s = rank(homogeneous) + 1;
    std::vector<Cone> out;
    if (s > m) return out;
    auto lin = homogeneous.row_list();
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(s), true);
    do {
        std::vector<IntVector> rays;
        for (std::size_t i = 0; i < m; ++i)
            if (!pick[i]) {
                IntVector e(m);
                e[i] = 1;
                rays.push_back(std::move(e));
            }
        out.push_back(Cone::from_v(m, rays, lin));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

std::vector<Cone> secondary_tropical_cones(const PointConfiguration& p) {
    return secondary_tropical_cones(homogenize(p));
}

}  // namespace tropres
