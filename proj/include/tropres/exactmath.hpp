#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace tropres {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    IntVector column(std::size_t c) const;
    std::vector<IntVector> row_list() const;
    IntMatrix transpose() const;
    IntMatrix select_columns(const std::vector<std::size_t>& cols) const;
    IntMatrix select_rows(const std::vector<std::size_t>& rows) const;

    bool operator==(const IntMatrix& o) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);
Rational dot(const RatVector& a, const RatVector& b);
bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

// Divides by the gcd of the entries; zero stays zero.
IntVector primitive(IntVector v);
// Clears denominators and divides by the content.
IntVector to_primitive(const RatVector& v);
RatVector to_rational(const IntVector& v);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols);

// Rational kernel: primitive integer vectors, cols - rank of them.
std::vector<IntVector> kernel_basis(const IntMatrix& m);
// Z-basis of the integer kernel {x in Z^cols : Mx = 0}.
std::vector<IntVector> kernel_lattice_basis(const IntMatrix& m);
// Z-basis of rowspace(M) intersected with Z^cols.
std::vector<IntVector> saturation_basis(const IntMatrix& m);

// Nonzero diagonal entries after integer diagonalization (absolute values).
std::vector<Integer> smith_diagonal(const IntMatrix& m);
// Index of the row lattice of M in its saturation.
Integer lattice_index(const IntMatrix& m);

// Reduced echelon basis of the span of the rows, each row scaled to a
// primitive integer vector with positive pivot.
std::vector<IntVector> canonical_basis(const std::vector<IntVector>& rows, std::size_t cols);
// Pivot column of each canonical basis row.
std::vector<std::size_t> pivot_columns(const std::vector<IntVector>& basis);
// Subtracts multiples of a canonical basis to zero its pivot columns; result is primitive.
IntVector reduce_modulo(const IntVector& v, const std::vector<IntVector>& basis);

// Incremental row echelon form used for rank and span queries.
class RowReducer {
public:
    explicit RowReducer(std::size_t cols) : cols_(cols) {}
    // Returns true if v was independent of the rows added so far.
    bool add(const IntVector& v);
    bool in_span(const IntVector& v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<IntVector>& rows() const { return rows_; }

private:
    IntVector reduce(IntVector v) const;
    std::size_t cols_;
    std::vector<IntVector> rows_;
    std::vector<std::size_t> pivots_;
};

// Indices of a maximal independent subset of the given vectors, chosen greedily.
std::vector<std::size_t> independent_subset(const std::vector<IntVector>& vecs, std::size_t cols);

// Solves A x = b for square nonsingular A given by rows; returns false if singular.
bool solve_square(const std::vector<IntVector>& a_rows, const std::vector<IntVector>& rhs, std::vector<RatVector>& out);

// Primitive integer multiple of the component of v orthogonal to span(rows).
IntVector project_orthogonal(const IntVector& v, const std::vector<IntVector>& rows);

// Symbolically perturbed vector levels[0] + eps*levels[1] + ...
struct EpsVector {
    std::vector<RatVector> levels;

    EpsVector() = default;
    explicit EpsVector(RatVector v) { levels.push_back(std::move(v)); }
    explicit EpsVector(std::vector<RatVector> lv);
    static EpsVector from_ints(const std::vector<IntVector>& lv);

    std::size_t size() const { return levels.empty() ? 0 : levels[0].size(); }
    void trim();
    EpsVector append(const EpsVector& tail) const;
};

// Value of a linear form at an EpsVector: coefficient of eps^i at index i.
using EpsScalar = std::vector<Rational>;

int eps_compare(const EpsScalar& a, const EpsScalar& b);
int eps_sign(const EpsScalar& a);
EpsScalar eps_dot(const IntVector& a, const EpsVector& v);

std::string to_string(const IntVector& v);

}  // namespace tropres
