#pragma once

// Independent reference computations used by the unit and acceptance tests.

#include "tropres/configurations.hpp"
#include "tropres/exactmath.hpp"
#include "tropres/polyhedral.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace oracle {

using tropres::Integer;
using tropres::IntMatrix;
using tropres::IntVector;
using tropres::Rational;
using tropres::RatVector;

// Basis of the row lattice by integer row reduction (Euclid on pivot columns).
inline std::vector<IntVector> row_lattice_basis(const IntMatrix& m) {
    std::vector<IntVector> rows = m.row_list();
    std::vector<IntVector> basis;
    const std::size_t n = m.cols();
    for (std::size_t c = 0; c < n && !rows.empty(); ++c) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
            if (best == rows.size()) break;
            bool done = true;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == best || rows[i][c] == 0) continue;
                Integer q = rows[i][c] / rows[best][c];
                for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[best][j];
                if (rows[i][c] != 0) done = false;
            }
            if (done) {
                basis.push_back(rows[best]);
                rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
                break;
            }
        }
    }
    return basis;
}

inline bool invert(std::vector<RatVector> a, std::vector<RatVector>& inv) {
    const std::size_t s = a.size();
    inv.assign(s, RatVector(s));
    for (std::size_t i = 0; i < s; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < s; ++c) {
        std::size_t p = c;
        while (p < s && a[p][c] == 0) ++p;
        if (p == s) return false;
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational f = 1 / a[c][c];
        for (std::size_t j = 0; j < s; ++j) {
            a[c][j] *= f;
            inv[c][j] *= f;
        }
        for (std::size_t i = 0; i < s; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational g = a[i][c];
            for (std::size_t j = 0; j < s; ++j) {
                a[i][j] -= g * a[c][j];
                inv[i][j] -= g * inv[c][j];
            }
        }
    }
    return true;
}

// Counts integer points of the row space inside the half-open parallelepiped
// spanned by a lattice basis.
inline Integer brute_force_lattice_index(const IntMatrix& m) {
    auto b = row_lattice_basis(m);
    const std::size_t s = b.size(), n = m.cols();
    if (s == 0) return 1;
    // Pick s columns J with B_J nonsingular.
    std::vector<std::size_t> cols;
    std::vector<RatVector> inv;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(s), true);
    do {
        cols.clear();
        for (std::size_t j = 0; j < n; ++j)
            if (pick[j]) cols.push_back(j);
        std::vector<RatVector> bj(s, RatVector(s));
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) bj[i][j] = b[i][cols[j]];
        if (invert(bj, inv)) break;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    // Box of the projection of the parallelepiped onto J.
    std::vector<Integer> lo(s, 0), hi(s, 0);
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t i = 0; i < s; ++i) {
            const Integer& x = b[i][cols[j]];
            if (x < 0) lo[j] += x;
            else hi[j] += x;
        }
    Integer count = 0;
    std::vector<Integer> x = lo;
    while (true) {
        // t = x_J * inv (row vector times matrix)
        RatVector t(s);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) t[i] += Rational(x[j]) * inv[j][i];
        bool ok = true;
        for (auto& ti : t)
            if (ti < 0 || ti >= 1) ok = false;
        if (ok) {
            for (std::size_t c = 0; c < n && ok; ++c) {
                Rational v = 0;
                for (std::size_t i = 0; i < s; ++i) v += t[i] * b[i][c];
                if (v.get_den() != 1) ok = false;
            }
            if (ok) ++count;
        }
        std::size_t k = 0;
        while (k < s) {
            if (x[k] < hi[k]) {
                ++x[k];
                break;
            }
            x[k] = lo[k];
            ++k;
        }
        if (k == s) break;
    }
    return count;
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t max_rows, std::size_t max_cols, int bound) {
    std::uniform_int_distribution<std::size_t> dr(1, max_rows), dc(1, max_cols);
    std::uniform_int_distribution<int> de(-bound, bound);
    IntMatrix m(dr(rng), dc(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = de(rng);
    return m;
}

// Vertices by the full-dimensional normal cone test.
inline std::vector<IntVector> hull_vertices(const std::vector<IntVector>& points) {
    const std::size_t n = points[0].size();
    std::vector<IntVector> uniq(points);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<IntVector> out;
    for (const auto& p : uniq) {
        std::vector<IntVector> ineqs;
        for (const auto& q : uniq)
            if (q != p) {
                IntVector d(n);
                for (std::size_t i = 0; i < n; ++i) d[i] = q[i] - p[i];
                ineqs.push_back(d);
            }
        if (tropres::Cone::from_h(n, {}, ineqs).dim() == n) out.push_back(p);
    }
    return out;
}

// Sorted and translated so the smallest point is the origin.
inline std::vector<IntVector> normalized(std::vector<IntVector> v) {
    std::sort(v.begin(), v.end());
    const IntVector base = v[0];
    for (auto& x : v)
        for (std::size_t i = 0; i < x.size(); ++i) x[i] -= base[i];
    std::sort(v.begin(), v.end());
    return v;
}

// Random tuple: 1..max_k configurations of 2..max_m points in Z^n, n in 1..max_n, coordinates in [0, bound].
inline tropres::ConfigTuple random_tuple(std::mt19937& rng, std::size_t max_k, std::size_t max_n, std::size_t max_m, int bound) {
    std::uniform_int_distribution<std::size_t> kk(1, max_k), nn(1, max_n), mm(2, max_m);
    std::uniform_int_distribution<int> c(0, bound);
    const std::size_t k = kk(rng), n = nn(rng);
    std::vector<std::vector<tropres::IntVector>> p(k);
    for (auto& cfg : p) {
        const std::size_t sz = mm(rng);
        for (std::size_t j = 0; j < sz; ++j) {
            tropres::IntVector v(n);
            for (auto& x : v) x = c(rng);
            cfg.push_back(v);
        }
    }
    return tropres::ConfigTuple::from_points(p);
}

}  // namespace oracle
