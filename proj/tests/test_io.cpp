#include "doctest.h"
#include "examples.hpp"

#include "tropres/commands.hpp"
#include "tropres/error.hpp"
#include "tropres/io.hpp"
#include "tropres/resultant.hpp"

#include <functional>

using namespace tropres;
using examples::pt;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("integers and rationals serialize exactly") {
    Integer big("123456789012345678901234567890");
    CHECK(to_json(Integer(-7)) == Json(-7));
    CHECK(to_json(big) == Json("123456789012345678901234567890"));
    CHECK(integer_from_json(to_json(big)) == big);
    CHECK(to_json(Rational(-3, 6)) == Json("-1/2"));
    CHECK(to_json(Rational(4)) == Json("4"));
    CHECK(rational_from_json(Json("6/4")) == Rational(3, 2));
    CHECK(rational_from_json(Json(5)) == Rational(5));
    CHECK(code_of([] { rational_from_json(Json("1/0")); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { integer_from_json(Json(1.5)); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { integer_from_json(Json("12a")); }) == ErrorCode::InvalidInput);
}

TEST_CASE("tuple documents round-trip with 1-based labels") {
    auto t = examples::specialized_squares();
    auto s = examples::specialized_squares_pattern();
    Json j = to_json(t, &s);
    CHECK(j["specialized"] == Json::parse("[[1,4],[3,4],[1,2]]"));
    auto in = tuple_from_json(j);
    REQUIRE(in.pattern.has_value());
    CHECK(in.pattern->sets == s.sets);
    CHECK(cayley(in.tuple).row_list() == cayley(t).row_list());
    CHECK_FALSE(tuple_from_json(to_json(t)).pattern.has_value());
}

TEST_CASE("malformed tuple documents are rejected") {
    for (const char* doc : {R"({})", R"({"configurations": []})", R"({"configurations": [[[0],[1]],[[0,0],[1,1]]]})",
                            R"({"configurations": [[[0]]]})", R"({"configurations": [[[0],[1]]], "specialized": [[0]]})",
                            R"({"configurations": [[[0],[1]]], "specialized": [[3]]})",
                            R"({"configurations": [[[0],[1]]], "specialized": [[1,1]]})",
                            R"({"configurations": [[[0],[1]]], "specialized": [[1],[2]]})"}) {
        CAPTURE(doc);
        try {
            tuple_from_json(Json::parse(doc));
            FAIL("accepted");
        } catch (const Error& e) {
            CHECK((e.code() == ErrorCode::InvalidInput || e.code() == ErrorCode::DegenerateConfig));
        }
    }
}

TEST_CASE("text tuples: rows are points, blank lines separate configurations") {
    auto t = tuple_from_text("# two segments\n0\n1\n2\n\n\n0\n1\n2   # trailing comment\n\n");
    CHECK(t.k() == 2);
    CHECK(t.m() == 6);
    CHECK(t.point(1, 2) == pt({2}));
    CHECK(code_of([] { tuple_from_text("0 x\n1 1\n"); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { tuple_from_text("\n# nothing\n"); }) == ErrorCode::InvalidInput);
}

TEST_CASE("cones and cone sets round-trip") {
    auto d = simple_description(examples::two_segments());
    auto back = cone_set_from_json(Json::parse(to_json(d).dump()));
    REQUIRE(back.pieces.size() == d.pieces.size());
    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
        CHECK(back.pieces[i].cone == d.pieces[i].cone);
        CHECK(back.pieces[i].multiplicity == d.pieces[i].multiplicity);
    }
    Json h = Json::parse(R"({"equations": [[1,0]], "inequalities": [[0,1]]})");
    CHECK(cone_from_json(2, h) == Cone::from_v(2, {pt({0, 1})}, {}));
    CHECK(code_of([] { cone_from_json(2, Json::parse(R"({"rays": [[1,0]], "equations": [[1,0]]})")); }) ==
          ErrorCode::InvalidInput);
    CHECK(code_of([] { cone_from_json(2, Json::parse(R"({"rays": [[1,0,0]]})")); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] {
              cone_set_from_json(Json::parse(R"({"ambient_dim": 1, "pieces": [{"rays": [], "multiplicity": 0}]})"));
          }) == ErrorCode::InvalidInput);
}

TEST_CASE("fans round-trip") {
    Fan f = traverse(examples::two_segments());
    Json j = to_json(f);
    CHECK(j["f_vector"] == Json(fvector(f)));
    Fan g = fan_from_json(Json::parse(j.dump()));
    REQUIRE(g.cones.size() == f.cones.size());
    for (std::size_t i = 0; i < f.cones.size(); ++i) {
        CHECK(g.cones[i] == f.cones[i]);
        CHECK(g.multiplicities[i] == f.multiplicities[i]);
    }
    CHECK(code_of([] { fan_from_json(Json::parse(R"({"ambient_dim": 1, "rays": [[1]], "cones": [[1]]})")); }) ==
          ErrorCode::InvalidInput);
}

TEST_CASE("options parse strictly") {
    auto o = options_from_json(Json::parse(R"({"method": "projections", "seed": 7, "threads": 2, "prune": false})"));
    CHECK(o.method == LinkMethod::Projections);
    CHECK(o.seed == 7);
    CHECK(o.threads == 2);
    CHECK_FALSE(o.prune);
    CHECK(options_from_json(Json()).method == LinkMethod::Slicing);
    CHECK_THROWS_AS(options_from_json(Json::parse(R"({"method": "both"})")), UsageError);
    CHECK_THROWS_AS(options_from_json(Json::parse(R"({"threads": 0})")), UsageError);
    CHECK_THROWS_AS(options_from_json(Json::parse(R"({"colour": true})")), UsageError);
    CHECK_THROWS_AS(run_command("nope", Json::object(), RunOptions{}), UsageError);
}

TEST_CASE("commands on small inputs") {
    RunOptions o;
    Json tri = to_json(examples::three_triangles());
    Json c = run_command("codim", tri, o);
    CHECK(c["codimension"] == 1);
    CHECK(c["hypersurface"] == true);

    Json segs = to_json(examples::two_segments());
    CHECK(run_command("polytope", segs, o)["f_vector"] == Json::parse("[6,11,7,1]"));
    Json sf = run_command("secondary-fan", segs, o);
    CHECK(sf["polytope_f_vector"] == Json::parse("[14,21,9,1]"));
    CHECK(sf["distinct_gkz_vectors"] == 14);

    // Cones piped into reconstruct give the same polytope.
    Json cones = run_command("cones", segs, o);
    CHECK(run_command("reconstruct", cones, o)["f_vector"] == Json::parse("[6,11,7,1]"));

    Json cube = Json::parse(R"({"ambient_dim": 3, "pieces": [
        {"lineality": [[1,0,0],[0,1,0]]}, {"lineality": [[1,0,0],[0,0,1]]}, {"lineality": [[0,1,0],[0,0,1]]}]})");
    Json r = run_command("reconstruct", cube, o);
    CHECK(r["f_vector"] == Json::parse("[8,12,6,1]"));
    CHECK(r["normal_fan"]["cones"].size() == 8);

    Json sh = run_command("secondary-hypersurface", Json::parse(R"({"points": [[0],[1],[2]]})"), o);
    CHECK(sh["pieces"].size() == 1);

    Json wrong = Json::parse(R"({"configurations": [[[0],[1]],[[0],[1]],[[0],[1]]]})");
    CHECK(run_command("codim", wrong, o)["codimension"] == 2);
    CHECK(code_of([&] { run_command("polytope", wrong, o); }) == ErrorCode::InvalidInput);
    RunOptions sp;
    sp.special = true;
    CHECK(code_of([&] { run_command("fan", segs, sp); }) == ErrorCode::InvalidInput);
}
