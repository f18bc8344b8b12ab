#include "doctest.h"
#include "examples.hpp"

#include "tropres/error.hpp"
#include "tropres/subdivisions.hpp"

#include <random>

using namespace tropres;
using examples::pts;

namespace {
PointConfiguration line3() { return PointConfiguration{1, pts({{0}, {1}, {2}})}; }
using Cells = std::vector<std::vector<std::size_t>>;
}  // namespace

TEST_CASE("regular subdivision examples") {
    auto p = line3();
    CHECK(regular_subdivision(p, RatVector{0, 0, 0}).cells == Cells{{0, 1, 2}});
    CHECK(regular_subdivision(p, RatVector{0, -1, 0}).cells == Cells{{0, 1}, {1, 2}});
    auto s = regular_subdivision(p, RatVector{0, 1, 0});
    CHECK(s.cells == Cells{{0, 2}});
    CHECK(s.unmarked() == std::vector<std::size_t>{1});
}

TEST_CASE("eps weights refine level by level") {
    auto p = line3();
    auto s = regular_subdivision(homogenize(p), EpsVector({RatVector{0, 0, 0}, RatVector{0, -1, 0}}));
    CHECK(s.cells == Cells{{0, 1}, {1, 2}});
}

TEST_CASE("mixed cells of three triangles") {
    auto t = examples::three_triangles();
    auto s = regular_subdivision(cayley(t), RatVector{0, 0, 0, 0, 1, 5, 0, 1, 5});
    CHECK(fully_mixed_cells(mixed_view(t, s)).size() == 2);
    auto s2 = regular_subdivision(cayley(t), RatVector{0, 0, 0, 0, -1, -1, 0, 0, 1});
    CHECK(fully_mixed_cells(mixed_view(t, s2)).size() == 2);
    auto triv = regular_subdivision(cayley(t), RatVector(9, 0));
    auto v = mixed_view(t, triv);
    REQUIRE(v.size() == 1);
    CHECK(v[0].fully_mixed());
}

TEST_CASE("fully mixed uses label counts") {
    MixedCell a{{{0, 1}, {0}}};
    MixedCell b{{{0, 1}, {2, 3}}};
    CHECK(fully_mixed_cells({a, b}).size() == 1);
    // Geometric duplicates with distinct labels count as two labels.
    auto t = ConfigTuple::from_points({pts({{0}, {0}, {1}}), pts({{0}, {1}})});
    auto s = regular_subdivision(cayley(t), RatVector{0, 0, 0, 0, 0});
    CHECK(fully_mixed_cells(mixed_view(t, s)).size() == 1);
}

TEST_CASE("secondary cone examples") {
    auto p = line3();
    auto triv = regular_subdivision(p, RatVector{0, 0, 0});
    auto c = secondary_cone(p, triv);
    CHECK(c.dim() == 2);
    CHECK(c.lineality_dim() == 2);
    auto s = regular_subdivision(p, RatVector{0, -1, 0});
    auto c2 = secondary_cone(p, s);
    CHECK(c2.dim() == 3);
    CHECK(c2.contains_in_relative_interior(RatVector{0, -1, 0}));
    CHECK(c2.facets() == std::vector<IntVector>{IntVector{1, -2, 1}});
}

TEST_CASE("gkz vectors") {
    auto p = line3();
    CHECK(gkz_vector(p, Subdivision{3, {{0, 1}, {1, 2}}}) == RatVector{1, 2, 1});
    CHECK(gkz_vector(p, Subdivision{3, {{0, 2}}}) == RatVector{2, 0, 2});
    CHECK_THROWS_AS(gkz_vector(p, Subdivision{3, {{0, 1, 2}}}), Error);
}

TEST_CASE("secondary tropical cones") {
    auto p = line3();
    auto cs = secondary_tropical_cones(p);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].dim() == 2);
    PointConfiguration q{2, pts({{0, 0}, {1, 0}, {0, 1}, {2, 3}})};
    CHECK(secondary_tropical_cones(q).size() == 1);
}

TEST_CASE("link subconfigurations at zero") {
    auto t = examples::three_triangles();
    auto subs = link_subconfigurations(t, RatVector(9, 0));
    REQUIRE(subs.size() == 1);
    CHECK(cayley(subs[0].tuple) == cayley(t));
}

TEST_CASE("property: secondary cone contains its weight and reproduces the subdivision") {
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> c(0, 3), w(-3, 3);
    for (int it = 0; it < 40; ++it) {
        PointConfiguration p{2, {}};
        for (int j = 0; j < 6; ++j) p.points.push_back(IntVector{c(rng), c(rng)});
        if (rank(homogenize(p)) < 3) continue;
        RatVector wt(6);
        for (auto& x : wt) x = w(rng);
        auto s = regular_subdivision(p, wt);
        auto cone = secondary_cone(p, s);
        CHECK(cone.contains_in_relative_interior(wt));
        auto q = relative_interior_point(cone);
        CHECK(regular_subdivision(p, q) == s);
        // Lexicographically perturbed point in the relative interior gives the same subdivision.
        RatVector mix(6);
        for (std::size_t i = 0; i < 6; ++i) mix[i] = wt[i] * 7 + q[i];
        CHECK(regular_subdivision(p, mix) == s);
        CHECK(cone.dim() == 6 - cone.equations().size());
    }
}

TEST_CASE("property: induced triangulation minimizes the GKZ functional") {
    std::mt19937 rng(22);
    std::uniform_int_distribution<int> c(0, 3), w(-20, 20);
    int checked = 0;
    for (int it = 0; it < 60 && checked < 25; ++it) {
        PointConfiguration p{2, {}};
        for (int j = 0; j < 5; ++j) p.points.push_back(IntVector{c(rng), c(rng)});
        if (rank(homogenize(p)) < 3) continue;
        RatVector w1(5), w2(5);
        for (auto& x : w1) x = w(rng);
        for (auto& x : w2) x = w(rng);
        auto t1 = regular_subdivision(p, w1), t2 = regular_subdivision(p, w2);
        bool simplicial = true;
        for (const auto& cell : t1.cells) simplicial = simplicial && cell.size() == 3;
        for (const auto& cell : t2.cells) simplicial = simplicial && cell.size() == 3;
        if (!simplicial) continue;
        ++checked;
        CHECK(dot(w1, gkz_vector(p, t1)) <= dot(w1, gkz_vector(p, t2)));
    }
    CHECK(checked > 5);
}
