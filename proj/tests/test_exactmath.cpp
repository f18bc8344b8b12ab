#include "doctest.h"
#include "oracles.hpp"

#include "tropres/exactmath.hpp"
#include "tropres/lp.hpp"

#include <random>

using namespace tropres;

namespace {
IntMatrix mat(std::vector<std::vector<long>> rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}
}  // namespace

TEST_CASE("rank examples") {
    CHECK(rank(mat({{1, 0}, {0, 1}})) == 2);
    CHECK(rank(mat({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}})) == 0);
    CHECK(rank(mat({{1, 1, 0}, {2, 2, 0}, {0, 0, 1}})) == 2);
}

TEST_CASE("kernel_basis examples") {
    auto k = kernel_basis(mat({{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(abs(k[0][0]) == 1);
    CHECK(k[0][0] == -k[0][1]);
    CHECK(kernel_basis(mat({{1, 0}, {0, 1}})).empty());
    auto k3 = kernel_basis(mat({{1, 2, 3}}));
    REQUIRE(k3.size() == 2);
    CHECK(rank(k3, 3) == 2);
    // Small integer solutions of x + 2y + 3z = 0 all lie in the span.
    for (int x = -3; x <= 3; ++x)
        for (int y = -3; y <= 3; ++y)
            for (int z = -3; z <= 3; ++z) {
                if (x + 2 * y + 3 * z != 0) continue;
                auto rows = k3;
                rows.push_back(IntVector{x, y, z});
                CHECK(rank(rows, 3) == 2);
            }
}

TEST_CASE("lattice_index examples") {
    CHECK(lattice_index(mat({{1, 0}, {0, 1}})) == 1);
    CHECK(lattice_index(mat({{2, 0}, {0, 3}})) == 6);
    CHECK(lattice_index(mat({{1, 1, 0}, {0, 2, 2}})) == 2);
    CHECK(lattice_index(mat({{1, 1}, {0, 2}})) == 2);
}

TEST_CASE("eps_compare examples") {
    CHECK(eps_compare({1}, {1}) == 0);
    CHECK(eps_compare({0, 3}, {0, -1}) == 1);
    CHECK(eps_compare({2, -100}, {1, 100}) == 1);
    CHECK(eps_compare({1}, {1, 0, 0}) == 0);
}

TEST_CASE("property: kernel dimension plus rank equals columns") {
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
        auto m = oracle::random_matrix(rng, 4, 6, 3);
        auto k = kernel_basis(m);
        CHECK(k.size() + rank(m) == m.cols());
        for (const auto& v : k) {
            CHECK(primitive(v) == v);
            for (std::size_t r = 0; r < m.rows(); ++r) CHECK(dot(m.row(r), v) == 0);
        }
    }
}

TEST_CASE("property: lattice index equals fundamental domain count") {
    std::mt19937 rng(11);
    for (int it = 0; it < 60; ++it) {
        auto m = oracle::random_matrix(rng, 3, 5, 4);
        CHECK(lattice_index(m) == oracle::brute_force_lattice_index(m));
    }
}

TEST_CASE("property: integer kernel basis is a lattice basis") {
    std::mt19937 rng(3);
    for (int it = 0; it < 100; ++it) {
        auto m = oracle::random_matrix(rng, 3, 5, 4);
        auto kl = kernel_lattice_basis(m);
        CHECK(kl.size() == m.cols() - rank(m));
        for (const auto& v : kl)
            for (std::size_t r = 0; r < m.rows(); ++r) CHECK(dot(m.row(r), v) == 0);
        if (!kl.empty()) CHECK(lattice_index(IntMatrix::from_rows(kl, m.cols())) == 1);
    }
}

TEST_CASE("property: eps_compare is a total order") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-2, 2), len(1, 4);
    auto gen = [&] {
        EpsScalar s(static_cast<std::size_t>(len(rng)));
        for (auto& x : s) x = Rational(d(rng), 1 + (d(rng) + 2));
        return s;
    };
    for (int it = 0; it < 500; ++it) {
        auto a = gen(), b = gen(), c = gen();
        CHECK(eps_compare(a, b) == -eps_compare(b, a));
        if (eps_compare(a, b) <= 0 && eps_compare(b, c) <= 0) CHECK(eps_compare(a, c) <= 0);
    }
}

TEST_CASE("row reducer and solve") {
    RowReducer rr(3);
    CHECK(rr.add(IntVector{1, 2, 3}));
    CHECK(!rr.add(IntVector{2, 4, 6}));
    CHECK(rr.add(IntVector{0, 1, 1}));
    CHECK(rr.in_span(IntVector{1, 3, 4}));
    CHECK(!rr.in_span(IntVector{0, 0, 1}));
    std::vector<RatVector> sol;
    REQUIRE(solve_square({IntVector{2, 0}, IntVector{0, 4}}, {IntVector{1, 1}}, sol));
    CHECK(sol[0][0] == Rational(1, 2));
    CHECK(sol[0][1] == Rational(1, 4));
}

TEST_CASE("lp_maximize small programs") {
    // max x + y s.t. x + 2y <= 4, 3x + y <= 6
    auto r = lp_maximize({RatVector{1, 2}, RatVector{3, 1}}, RatVector{4, 6}, RatVector{1, 1});
    CHECK(!r.unbounded);
    CHECK(r.value == Rational(14, 5));
    auto u = lp_maximize({RatVector{1, -1}}, RatVector{1}, RatVector{1, 0});
    CHECK(u.unbounded);
}
