#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tropres.h"

#include <json.hpp>

#include <cstring>
#include <set>
#include <string>

using nlohmann::json;

namespace {

const char* kSegments = R"({"configurations": [[[0],[1],[2]], [[0],[1],[2]]]})";

struct Result {
    tr_status status;
    json doc;
    std::string message;
};

Result run(const char* command, const char* input, const char* options = nullptr) {
    tr_context* ctx = tr_context_new();
    char* out = nullptr;
    tr_status st = tr_run(ctx, command, input, options, &out);
    Result r{st, out ? json::parse(out) : json(), tr_last_error_message(ctx)};
    tr_string_free(out);
    tr_context_free(ctx);
    return r;
}

}  // namespace

TEST_CASE("successful runs return a document and clear the error") {
    tr_context* ctx = tr_context_new();
    char* out = nullptr;
    REQUIRE(tr_run(ctx, "codim", "{}", nullptr, &out) == TR_ERR_INVALID_INPUT);
    CHECK(std::strlen(tr_last_error_message(ctx)) > 0);
    tr_string_free(out);
    REQUIRE(tr_run(ctx, "polytope", kSegments, nullptr, &out) == TR_OK);
    CHECK(std::string(tr_last_error_message(ctx)).empty());
    auto doc = json::parse(out);
    CHECK(doc["f_vector"] == json::parse("[6,11,7,1]"));
    CHECK(doc["vertices"].size() == 6);
    tr_string_free(out);
    tr_context_free(ctx);
}

TEST_CASE("errors map to status codes with a structured document") {
    auto usage = run("no-such-command", kSegments);
    CHECK(usage.status == TR_ERR_USAGE);
    CHECK(usage.doc["error"]["code"] == "Usage");

    CHECK(run("fan", kSegments, R"({"method": "sideways"})").status == TR_ERR_USAGE);
    CHECK(run("fan", kSegments, "{not json").status == TR_ERR_USAGE);

    auto bad = run("codim", R"({"configurations": [[[0]]]})");
    CHECK(bad.status == TR_ERR_DEGENERATE_CONFIG);
    CHECK(bad.doc["error"]["code"] == "DegenerateConfig");
    CHECK(bad.doc["error"]["message"] == bad.message);

    CHECK(run("codim", "[1,").status == TR_ERR_INVALID_INPUT);
    CHECK(run("reconstruct", R"({"ambient_dim": 2, "pieces": [{"lineality": [[1,0],[0,1]]}]})").status ==
          TR_ERR_INVALID_INPUT);

    // Two collinear segments specialized to their endpoints: the specialized resultant is empty.
    auto empty = run("cones", R"({"configurations": [[[0],[1]], [[0],[1]]], "specialized": [[1,2],[1,2]]})");
    CHECK(empty.status == TR_ERR_EMPTY_SPECIALIZED_RESULTANT);

    CHECK(tr_run(nullptr, "codim", kSegments, nullptr, nullptr) == TR_ERR_USAGE);
}

TEST_CASE("status names and command list") {
    CHECK(std::string(tr_status_name(TR_OK)) == "OK");
    CHECK(std::string(tr_status_name(TR_ERR_INCONSISTENT_CYCLE)) == "InconsistentCycle");
    std::set<std::string> names;
    for (int i = 0; i < tr_command_count(); ++i) names.insert(tr_command_name(i));
    CHECK(names == std::set<std::string>{"codim", "cones", "fan", "implicitize", "polytope", "reconstruct",
                                         "secondary-fan", "secondary-hypersurface"});
    CHECK(tr_command_name(-1) == nullptr);
    CHECK(tr_command_name(tr_command_count()) == nullptr);
}

TEST_CASE("output is deterministic for a fixed seed") {
    const char* opts = R"({"seed": 5})";
    auto a = run("polytope", kSegments, opts);
    auto b = run("polytope", kSegments, opts);
    CHECK(a.doc.dump() == b.doc.dump());
    auto c = run("polytope", kSegments, R"({"seed": 6, "threads": 3})");
    CHECK(c.doc["f_vector"] == a.doc["f_vector"]);
}

TEST_CASE("text input") {
    auto r = run("codim", "0 0\n0 1\n1 0\n\n0 0\n1 0\n2 1\n\n0 0\n0 1\n1 2\n", R"({"text": true})");
    REQUIRE(r.status == TR_OK);
    CHECK(r.doc["codimension"] == 1);
    CHECK(r.doc["ambient_dim"] == 9);
}

TEST_CASE("specialized fan and implicitization") {
    auto f = run("fan", R"({"configurations": [[[0],[1],[2]], [[0],[1],[2]]], "specialized": [[2],[2]]})",
                 R"({"special": true, "method": "projections"})");
    REQUIRE(f.status == TR_OK);
    CHECK(f.doc["coordinates"] == json::parse("[1,3,4,6]"));
    auto g = run("fan", R"({"configurations": [[[0],[1],[2]], [[0],[1],[2]]], "specialized": [[2],[2]]})",
                 R"({"special": true, "method": "slicing"})");
    CHECK(g.doc == f.doc);

    // Curve (a + b s, c + d s^2): the implicit equation has support {1, x, x^2, y}, a triangle.
    auto p = run("implicitize", R"({"supports": [[[0],[1]], [[0],[2]]]})");
    REQUIRE(p.status == TR_OK);
    CHECK(p.doc["f_vector"] == json::parse("[3,3,1]"));
}
