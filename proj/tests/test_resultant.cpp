#include "doctest.h"
#include "examples.hpp"
#include "oracles.hpp"

#include "tropres/error.hpp"
#include "tropres/resultant.hpp"
#include "tropres/subdivisions.hpp"

#include <random>

using namespace tropres;
using examples::pts;

namespace {

ConfigTuple parallel_segments(std::size_t k) {
    std::vector<std::vector<IntVector>> p(k, pts({{0}, {1}}));
    return ConfigTuple::from_points(p);
}

}  // namespace

TEST_CASE("pair cone examples") {
    auto t = ConfigTuple::from_points({pts({{0}, {2}, {1}})});
    auto [c, mult] = pair_cone(t, PairTuple{{0, 1}});
    CHECK(mult == 2);
    CHECK(c.dim() == 3);
    auto seg = ConfigTuple::from_points({pts({{0}, {1}})});
    auto [lin, one] = pair_cone(seg, PairTuple{{0, 1}});
    CHECK(one == 1);
    CHECK(lin.rays().empty());
    CHECK(lin.lineality_dim() == 2);
    // Differences (1,-1), (2,1), (1,2) have pairwise determinants 3.
    auto tri = examples::three_triangles();
    CHECK(pair_multiplicity(tri, PairTuple{{1, 2}, {0, 2}, {0, 2}}) == 3);
    CHECK(pair_multiplicity(tri, PairTuple{{0, 1}, {0, 1}, {0, 1}}) == 1);
    for_each_pair_tuple({{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}, [&](const PairTuple& e) {
        CHECK(pair_multiplicity(tri, e) == oracle::brute_force_lattice_index(pair_cayley(tri, e)));
    });
}

TEST_CASE("simple description sizes") {
    CHECK(simple_description(examples::three_triangles()).pieces.size() == 27);
    CHECK(simple_description(examples::two_segments()).pieces.size() == 9);
    CHECK(simple_description(ConfigTuple::from_points({pts({{0}, {1}})})).pieces.size() == 1);
}

TEST_CASE("codimension examples") {
    auto tri = examples::three_triangles();
    CHECK(codimension(tri) == 1);
    CHECK(codimension_bruteforce(tri) == 1);
    CHECK(codimension_sturmfels(tri) == 1);
    auto par = parallel_segments(3);
    CHECK(codimension(par) == 2);
    CHECK(codimension_bruteforce(par) == 2);
    CHECK(codimension_sturmfels(par) == 2);
    auto j = examples::four_triangles();
    CHECK(codimension(j) == 2);
    CHECK(codimension_bruteforce(j) == 2);
    CHECK(codimension_sturmfels(j) == 2);
}

TEST_CASE("matroid intersection on small matroids") {
    // Uniform-ish partition versus a vector matroid with a parallel pair.
    auto part = transversal_matroid({{0}, {0}, {1}, {1}}, 2);
    auto vec = vector_matroid({IntVector{1, 0}, IntVector{1, 0}, IntVector{1, 0}, IntVector{0, 0}}, 2);
    CHECK(matroid_intersection(part, vec).size() == 1);
    auto vec2 = vector_matroid({IntVector{1, 0}, IntVector{0, 1}, IntVector{1, 0}, IntVector{1, 1}}, 2);
    CHECK(matroid_intersection(part, vec2).size() == 2);
    // Transversal independence needs augmenting paths.
    auto tr = transversal_matroid({{0, 1}, {0}}, 2);
    CHECK(tr.independent({0, 1}));
    auto tr2 = transversal_matroid({{0}, {0}}, 2);
    CHECK_FALSE(tr2.independent({0, 1}));
}

TEST_CASE("membership examples") {
    auto tri = examples::three_triangles();
    CHECK(contains(tri, RatVector{0, 0, 0, 0, 1, 5, 0, 1, 5}));
    CHECK(contains(tri, RatVector(9, 0)));
    auto two = ConfigTuple::from_points({pts({{0}, {1}}), pts({{0}, {1}})});
    CHECK_FALSE(contains(two, RatVector{0, 0, 0, 1}));
    CHECK(contains(two, RatVector{0, 1, 0, 1}));
}

TEST_CASE("generic point") {
    auto seg = ConfigTuple::from_points({pts({{0}, {1}})});
    auto p = generic_point(seg);
    CHECK(contains(seg, p));
    auto tri = examples::three_triangles();
    auto q = generic_point(tri);
    CHECK(contains(tri, q));
    auto rc = restricted_cone(cayley(tri), Restriction::identity(9), q);
    CHECK(rc.cone.dim() == 8);
    auto two = ConfigTuple::from_points({pts({{0}, {1}}), pts({{0}, {1}})});
    auto g = generic_point(two);
    for (const auto& l : g.levels) CHECK(l[0] - l[1] - l[2] + l[3] == 0);
    auto rc2 = restricted_cone(cayley(two), Restriction::identity(4), g);
    CHECK(rc2.cone.dim() == 3);
}

TEST_CASE("traverse three triangles") {
    auto tri = examples::three_triangles();
    auto f = traverse(tri);
    CHECK(f.cones.size() == 89);
    for (const auto& c : f.cones) CHECK(c.dim() == 8);
    for (const auto& m : f.multiplicities) CHECK(m >= 1);
}

TEST_CASE("traverse of a hyperplane resultant") {
    auto two = ConfigTuple::from_points({pts({{0}, {1}}), pts({{0}, {1}})});
    auto f = traverse(two);
    REQUIRE(f.cones.size() == 1);
    CHECK(f.cones[0].dim() == 3);
    CHECK(f.multiplicities[0] == 1);
}

TEST_CASE("property: codimension routes agree") {
    std::mt19937 rng(5);
    for (int it = 0; it < 100; ++it) {
        auto t = oracle::random_tuple(rng, 4, 3, 4, 4);
        auto a = codimension(t);
        CHECK(a == codimension_bruteforce(t));
        CHECK(a == codimension_sturmfels(t));
    }
}

TEST_CASE("property: membership equals union of pair cones") {
    std::mt19937 rng(6);
    std::uniform_int_distribution<int> w(-6, 6);
    for (int it = 0; it < 12; ++it) {
        auto t = oracle::random_tuple(rng, 3, 2, 3, 3);
        auto desc = simple_description(t);
        for (int s = 0; s < 10; ++s) {
            RatVector x(t.m());
            for (auto& v : x) v = Rational(w(rng), 1 + s % 3);
            bool in_union = false;
            for (const auto& p : desc.pieces) in_union = in_union || p.cone.contains(x);
            CHECK(contains(t, x) == in_union);
        }
    }
}

TEST_CASE("property: traversal cones are pure and inside the union") {
    std::mt19937 rng(7);
    for (int it = 0; it < 6; ++it) {
        auto t = oracle::random_tuple(rng, 3, 2, 3, 3);
        auto f = traverse(t);
        auto desc = simple_description(t);
        const std::size_t c = codimension(t);
        for (std::size_t i = 0; i < f.cones.size(); ++i) {
            CHECK(f.cones[i].dim() == t.m() - c);
            auto p = relative_interior_point(f.cones[i]);
            CHECK(contains(t, p));
            Integer total = 0;
            for (const auto& piece : desc.pieces)
                if (piece.cone.dim() == t.m() - c && piece.cone.contains(f.cones[i])) total += piece.multiplicity;
            CHECK(total == f.multiplicities[i]);
        }
    }
}
