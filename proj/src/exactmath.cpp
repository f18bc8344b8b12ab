#include "tropres/exactmath.hpp"

#include "tropres/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace tropres {

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error(ErrorCode::InvalidInput, "row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

std::vector<IntVector> IntMatrix::row_list() const {
    std::vector<IntVector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& cols) const {
    IntMatrix m(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = (*this)(r, cols[c]);
    return m;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& rows) const {
    IntMatrix m(rows.size(), cols_);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(rows[r], c);
    return m;
}

Integer dot(const IntVector& a, const IntVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

bool is_zero(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

IntVector primitive(IntVector v) {
    Integer g = 0;
    for (const auto& x : v) {
        if (sgn(x) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return v;
    }
    if (g > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

IntVector to_primitive(const RatVector& v) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (l / v[i].get_den());
    return primitive(std::move(out));
}

RatVector to_rational(const IntVector& v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols) {
    // Bareiss fraction-free elimination.
    std::vector<IntVector> a = rows;
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && sgn(a[p][c]) == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

std::size_t rank(const IntMatrix& m) { return rank(m.row_list(), m.cols()); }

namespace {

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVector>& a, std::size_t cols) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && sgn(a[p][c]) == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        Rational inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(a[r][j]) != 0) a[i][j] -= f * a[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    a.resize(r);
    return piv;
}

std::vector<RatVector> to_rat_rows(const std::vector<IntVector>& rows) {
    std::vector<RatVector> a;
    a.reserve(rows.size());
    for (const auto& r : rows) a.push_back(to_rational(r));
    return a;
}

}  // namespace

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
    std::vector<RatVector> a = to_rat_rows(m.row_list());
    std::size_t n = m.cols();
    auto piv = rref(a, n);
    std::vector<bool> is_piv(n, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<IntVector> out;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        RatVector v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][f];
        out.push_back(to_primitive(v));
    }
    return out;
}

std::vector<IntVector> canonical_basis(const std::vector<IntVector>& rows, std::size_t cols) {
    std::vector<RatVector> a = to_rat_rows(rows);
    rref(a, cols);
    std::vector<IntVector> out;
    out.reserve(a.size());
    for (const auto& r : a) out.push_back(to_primitive(r));
    return out;
}

std::vector<std::size_t> pivot_columns(const std::vector<IntVector>& basis) {
    std::vector<std::size_t> piv;
    for (const auto& b : basis) {
        std::size_t c = 0;
        while (c < b.size() && sgn(b[c]) == 0) ++c;
        piv.push_back(c);
    }
    return piv;
}

IntVector reduce_modulo(const IntVector& v, const std::vector<IntVector>& basis) {
    IntVector w = v;
    for (const auto& b : basis) {
        std::size_t c = 0;
        while (sgn(b[c]) == 0) ++c;
        if (sgn(w[c]) == 0) continue;
        Integer bc = b[c], wc = w[c];
        Integer g = gcd(bc, wc);
        bc /= g;
        wc /= g;
        if (sgn(bc) < 0) {
            bc = -bc;
            wc = -wc;
        }
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = bc * w[j] - wc * b[j];
        w = primitive(std::move(w));
    }
    return primitive(std::move(w));
}

std::vector<IntVector> kernel_lattice_basis(const IntMatrix& m) {
    // Column reduction of M with the same operations applied to an identity;
    // columns of the transform over zero columns of M span the integer kernel.
    std::size_t r = m.rows(), n = m.cols();
    std::vector<IntVector> col(n, IntVector(r)), u(n, IntVector(n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < r; ++i) col[j][i] = m(i, j);
        u[j][j] = 1;
    }
    std::size_t k = 0;
    auto combine = [&](std::size_t a, std::size_t b, const Integer& q) {
        // col[a] -= q * col[b]
        for (std::size_t i = 0; i < r; ++i) col[a][i] -= q * col[b][i];
        for (std::size_t i = 0; i < n; ++i) u[a][i] -= q * u[b][i];
    };
    for (std::size_t i = 0; i < r && k < n; ++i) {
        while (true) {
            std::size_t best = n;
            for (std::size_t j = k; j < n; ++j)
                if (sgn(col[j][i]) != 0 && (best == n || abs(col[j][i]) < abs(col[best][i]))) best = j;
            if (best == n) break;
            std::swap(col[k], col[best]);
            std::swap(u[k], u[best]);
            bool done = true;
            for (std::size_t j = k + 1; j < n; ++j) {
                if (sgn(col[j][i]) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), col[j][i].get_mpz_t(), col[k][i].get_mpz_t());
                combine(j, k, q);
                if (sgn(col[j][i]) != 0) done = false;
            }
            if (done) {
                ++k;
                break;
            }
        }
    }
    std::vector<IntVector> out;
    for (std::size_t j = k; j < n; ++j) out.push_back(u[j]);
    return out;
}

std::vector<IntVector> saturation_basis(const IntMatrix& m) {
    auto ker = kernel_basis(m);
    if (ker.empty()) {
        std::vector<IntVector> id(m.cols(), IntVector(m.cols()));
        for (std::size_t i = 0; i < m.cols(); ++i) id[i][i] = 1;
        return id;
    }
    return kernel_lattice_basis(IntMatrix::from_rows(ker, m.cols()));
}

std::vector<Integer> smith_diagonal(const IntMatrix& m) {
    std::size_t r = m.rows(), n = m.cols();
    std::vector<IntVector> a = m.row_list();
    std::vector<Integer> diag;
    std::size_t t = 0;
    while (t < r && t < n) {
        // Smallest nonzero entry in the remaining block as pivot.
        std::size_t pi = r, pj = n;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (sgn(a[i][j]) != 0 && (pi == r || abs(a[i][j]) < abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == r) break;
        std::swap(a[t], a[pi]);
        for (std::size_t i = 0; i < r; ++i) std::swap(a[i][t], a[i][pj]);
        bool clean = true;
        for (std::size_t i = t + 1; i < r; ++i) {
            if (sgn(a[i][t]) == 0) continue;
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
            for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
            if (sgn(a[i][t]) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (sgn(a[t][j]) == 0) continue;
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
            for (std::size_t i = t; i < r; ++i) a[i][j] -= q * a[i][t];
            if (sgn(a[t][j]) != 0) clean = false;
        }
        if (!clean) continue;
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    return diag;
}

Integer lattice_index(const IntMatrix& m) {
    Integer p = 1;
    for (const auto& d : smith_diagonal(m)) p *= d;
    return p;
}

IntVector RowReducer::reduce(IntVector v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::size_t c = pivots_[k];
        if (sgn(v[c]) == 0) continue;
        const IntVector& b = rows_[k];
        Integer g = gcd(b[c], v[c]);
        Integer bc = b[c] / g, vc = v[c] / g;
        for (std::size_t j = 0; j < cols_; ++j) v[j] = bc * v[j] - vc * b[j];
        v = primitive(std::move(v));
    }
    return v;
}

bool RowReducer::add(const IntVector& v) {
    IntVector w = reduce(v);
    std::size_t c = 0;
    while (c < cols_ && sgn(w[c]) == 0) ++c;
    if (c == cols_) return false;
    for (auto& b : rows_) {
        if (sgn(b[c]) == 0) continue;
        Integer g = gcd(b[c], w[c]);
        Integer wc = w[c] / g, bc = b[c] / g;
        if (sgn(wc) < 0) {
            wc = -wc;
            bc = -bc;
        }
        for (std::size_t j = 0; j < cols_; ++j) b[j] = wc * b[j] - bc * w[j];
        b = primitive(std::move(b));
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(c);
    return true;
}

bool RowReducer::in_span(const IntVector& v) const { return is_zero(reduce(v)); }

std::vector<std::size_t> independent_subset(const std::vector<IntVector>& vecs, std::size_t cols) {
    RowReducer rr(cols);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vecs.size() && rr.rank() < cols; ++i)
        if (rr.add(vecs[i])) out.push_back(i);
    return out;
}

bool solve_square(const std::vector<IntVector>& a_rows, const std::vector<IntVector>& rhs,
                  std::vector<RatVector>& out) {
    std::size_t n = a_rows.size();
    std::vector<RatVector> a(n, RatVector(n + rhs.size()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = a_rows[i][j];
        for (std::size_t k = 0; k < rhs.size(); ++k) a[i][n + k] = rhs[k][i];
    }
    auto piv = rref(a, n + rhs.size());
    if (piv.size() < n || piv[n - 1] != n - 1) return false;
    out.assign(rhs.size(), RatVector(n));
    for (std::size_t k = 0; k < rhs.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) out[k][i] = a[i][n + k];
    return true;
}

IntVector project_orthogonal(const IntVector& v, const std::vector<IntVector>& rows) {
    std::vector<IntVector> basis;
    for (auto i : independent_subset(rows, v.size())) basis.push_back(rows[i]);
    if (basis.empty()) return primitive(v);
    const std::size_t r = basis.size();
    std::vector<IntVector> gram(r, IntVector(r));
    IntVector rhs(r);
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = 0; b < r; ++b) gram[a][b] = dot(basis[a], basis[b]);
        rhs[a] = dot(basis[a], v);
    }
    std::vector<RatVector> sol;
    solve_square(gram, {rhs}, sol);
    RatVector out = to_rational(v);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t i = 0; i < v.size(); ++i) out[i] -= sol[0][a] * basis[a][i];
    return to_primitive(out);
}

EpsVector::EpsVector(std::vector<RatVector> lv) : levels(std::move(lv)) {
    for (const auto& l : levels)
        if (l.size() != levels[0].size()) throw Error(ErrorCode::InvalidInput, "EpsVector levels differ in length");
    trim();
}

EpsVector EpsVector::from_ints(const std::vector<IntVector>& lv) {
    std::vector<RatVector> r;
    for (const auto& v : lv) r.push_back(to_rational(v));
    return EpsVector(std::move(r));
}

void EpsVector::trim() {
    while (levels.size() > 1 && is_zero(levels.back())) levels.pop_back();
}

EpsVector EpsVector::append(const EpsVector& tail) const {
    EpsVector out = *this;
    for (const auto& l : tail.levels) out.levels.push_back(l);
    out.trim();
    return out;
}

int eps_compare(const EpsScalar& a, const EpsScalar& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        Rational x = i < a.size() ? a[i] : Rational(0);
        Rational y = i < b.size() ? b[i] : Rational(0);
        int c = cmp(x, y);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

int eps_sign(const EpsScalar& a) {
    for (const auto& x : a)
        if (sgn(x) != 0) return sgn(x);
    return 0;
}

EpsScalar eps_dot(const IntVector& a, const EpsVector& v) {
    EpsScalar out;
    out.reserve(v.levels.size());
    for (const auto& l : v.levels) out.push_back(dot(a, l));
    return out;
}

std::string to_string(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ')';
    return os.str();
}

}  // namespace tropres
