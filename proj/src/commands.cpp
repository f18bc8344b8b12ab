#include "tropres/commands.hpp"

#include "tropres/error.hpp"
#include "tropres/reconstruct.hpp"
#include "tropres/resultant.hpp"
#include "tropres/subdivisions.hpp"
#include "tropres/traversal.hpp"

#include <functional>
#include <optional>
#include <map>
#include <set>
#include <tuple>

namespace tropres {

namespace {

Json coordinates(const ConfigTuple& t, const SpecializationPattern& s) {
    Json a = Json::array();
    for (auto g : s.free_labels(t)) a.push_back(g + 1);
    return a;
}

// Normal fan, vertices and f-vector of the polytope whose tropical hypersurface is h.
Json polytope_json(const HypersurfaceInput& h, const RunOptions& o) {
    Fan f = reconstruct_normal_fan(h, o.seed);
    auto verts = vertices_from_fan(f, h);
    return Json{{"ambient_dim", h.ambient_dim},
                {"vertices", to_json(verts)},
                {"f_vector", polytope_fvector(f)},
                {"normal_fan", to_json(f)}};
}

WeightedConeSet hypersurface_description(const ConfigTuple& t, const SpecializationPattern* s) {
    if (s) {
        long d = specialized_dimension(t, *s);
        if (d < 0) throw Error(ErrorCode::EmptySpecializedResultant, "the specialized resultant is empty");
        if (static_cast<std::size_t>(d) + 1 != s->free_labels(t).size())
            throw Error(ErrorCode::InvalidInput, "the specialized resultant is not a hypersurface");
        return specialized_description(t, *s);
    }
    if (codimension(t) != 1) throw Error(ErrorCode::InvalidInput, "the resultant variety is not a hypersurface");
    return simple_description(t);
}

IntMatrix homogeneous_input(const Json& in) {
    if (in.is_object() && in.contains("points")) {
        auto pts = int_rows_from_json(in.at("points"));
        if (pts.empty()) throw Error(ErrorCode::InvalidInput, "\"points\" must be nonempty");
        PointConfiguration p{pts[0].size(), pts};
        for (const auto& x : pts)
            if (x.size() != p.n) throw Error(ErrorCode::InvalidInput, "point dimension mismatch");
        return homogenize(p);
    }
    return cayley(tuple_from_json(in).tuple);
}

Json cmd_codim(const Json& in, const RunOptions&) {
    auto ti = tuple_from_json(in);
    std::size_t c = codimension(ti.tuple);
    Json out{{"codimension", c}, {"hypersurface", c == 1}, {"ambient_dim", ti.tuple.m()}};
    if (ti.pattern) {
        long d = specialized_dimension(ti.tuple, *ti.pattern);
        out["specialized_nonempty"] = d >= 0;
        if (d >= 0) out["specialized_dimension"] = d;
    }
    return out;
}

Json cmd_cones(const Json& in, const RunOptions&) {
    auto ti = tuple_from_json(in);
    if (!ti.pattern) return to_json(simple_description(ti.tuple));
    if (!is_nonempty(ti.tuple, *ti.pattern))
        throw Error(ErrorCode::EmptySpecializedResultant, "the specialized resultant is empty");
    Json out = to_json(specialized_description(ti.tuple, *ti.pattern));
    out["coordinates"] = coordinates(ti.tuple, *ti.pattern);
    return out;
}

Json cmd_fan(const Json& in, const RunOptions& o) {
    auto ti = tuple_from_json(in);
    if (!o.special) return to_json(traverse(ti.tuple));
    if (!ti.pattern) throw Error(ErrorCode::InvalidInput, "--special needs a \"specialized\" field");
    Json out = to_json(traverse_specialized(ti.tuple, *ti.pattern, o.method));
    out["coordinates"] = coordinates(ti.tuple, *ti.pattern);
    return out;
}

Json cmd_polytope(const Json& in, const RunOptions& o) {
    auto ti = tuple_from_json(in);
    const SpecializationPattern* s = ti.pattern ? &*ti.pattern : nullptr;
    Json out = polytope_json(hypersurface_description(ti.tuple, s), o);
    if (s) out["coordinates"] = coordinates(ti.tuple, *s);
    return out;
}

Json cmd_reconstruct(const Json& in, const RunOptions& o) { return polytope_json(cone_set_from_json(in), o); }

Json cmd_implicitize(const Json& in, const RunOptions& o) {
    if (!in.is_object() || !in.contains("supports") || !in.at("supports").is_array())
        throw Error(ErrorCode::InvalidInput, "missing field \"supports\"");
    std::vector<std::vector<IntVector>> supports;
    for (const auto& s : in.at("supports")) supports.push_back(int_rows_from_json(s));
    auto [t, s] = implicitization_setup(supports);
    if (o.prune) std::tie(t, s) = drop_redundant_specialized(t, s);
    Json out = polytope_json(hypersurface_description(t, &s), o);
    out["tuple"] = to_json(t, &s);
    out["coordinates"] = coordinates(t, s);
    return out;
}

Json cmd_secondary_hypersurface(const Json& in, const RunOptions&) {
    IntMatrix h = homogeneous_input(in);
    WeightedConeSet set;
    set.ambient_dim = h.cols();
    for (auto& c : secondary_tropical_cones(h)) set.pieces.push_back({std::move(c), 1});
    return to_json(set);
}

Json cmd_secondary_fan(const Json& in, const RunOptions&) {
    IntMatrix h = homogeneous_input(in);
    Restriction r = Restriction::identity(h.cols());
    std::optional<TupleInput> ti;
    if (!in.contains("points")) {
        ti = tuple_from_json(in);
        if (ti->pattern) r = Restriction::of(ti->tuple, *ti->pattern);
    }
    Fan f = restricted_secondary_fan(h, r);
    Json out = to_json(f);
    out["polytope_f_vector"] = polytope_fvector(f);
    if (r.is_identity()) {
        Json gkz = Json::array();
        std::set<RatVector> distinct;
        for (const auto& c : f.cones) {
            try {
                auto v = gkz_vector(h, regular_subdivision(h, relative_interior_point(c)));
                distinct.insert(v);
                gkz.push_back(to_json(v));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::NotATriangulation) throw;
                gkz.push_back(nullptr);
            }
        }
        out["gkz_vectors"] = gkz;
        out["distinct_gkz_vectors"] = distinct.size();
    } else {
        out["coordinates"] = coordinates(ti->tuple, *ti->pattern);
    }
    return out;
}

using Handler = std::function<Json(const Json&, const RunOptions&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> h = {
        {"codim", cmd_codim},
        {"cones", cmd_cones},
        {"fan", cmd_fan},
        {"polytope", cmd_polytope},
        {"reconstruct", cmd_reconstruct},
        {"implicitize", cmd_implicitize},
        {"secondary-hypersurface", cmd_secondary_hypersurface},
        {"secondary-fan", cmd_secondary_fan},
    };
    return h;
}

}  // namespace

RunOptions options_from_json(const Json& j) {
    RunOptions o;
    if (j.is_null()) return o;
    if (!j.is_object()) throw UsageError("options must be a JSON object");
    for (const auto& [key, v] : j.items()) {
        if (key == "method") {
            if (v == "slicing") o.method = LinkMethod::Slicing;
            else if (v == "projections") o.method = LinkMethod::Projections;
            else throw UsageError("method must be \"slicing\" or \"projections\"");
        } else if (key == "seed") {
            if (!v.is_number_unsigned()) throw UsageError("seed must be a nonnegative integer");
            o.seed = v.get<std::uint64_t>();
        } else if (key == "threads") {
            if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) throw UsageError("threads must be positive");
            o.threads = v.get<unsigned>();
        } else if (key == "special" || key == "prune" || key == "text") {
            if (!v.is_boolean()) throw UsageError(key + " must be a boolean");
            (key == "special" ? o.special : key == "prune" ? o.prune : o.text) = v.get<bool>();
        } else {
            throw UsageError("unknown option \"" + key + "\"");
        }
    }
    return o;
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, h] : handlers()) v.push_back(name);
        return v;
    }();
    return names;
}

Json parse_input(const std::string& input, const RunOptions& options) {
    if (options.text) return to_json(tuple_from_text(input));
    try {
        return Json::parse(input);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
}

Json run_command(const std::string& command, const Json& input, const RunOptions& options) {
    auto it = handlers().find(command);
    if (it == handlers().end()) throw UsageError("unknown command \"" + command + "\"");
    try {
        return it->second(input, options);
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::InvalidInput, e.what());
    }
}

}  // namespace tropres
