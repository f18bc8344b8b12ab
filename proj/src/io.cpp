#include "tropres/io.hpp"

#include "tropres/error.hpp"

#include <algorithm>
#include <sstream>

namespace tropres {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

std::size_t size_from_json(const Json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        bad(std::string(what) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

}  // namespace

Json to_json(const Integer& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

Json to_json(const Rational& x) {
    Rational c(x);
    c.canonicalize();
    return Json(c.get_str());
}

Json to_json(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

Json to_json(const RatVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

Json to_json(const std::vector<IntVector>& rows) {
    Json a = Json::array();
    for (const auto& r : rows) a.push_back(to_json(r));
    return a;
}

Json to_json(const IntMatrix& m) { return to_json(m.row_list()); }

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        Integer x;
        if (x.set_str(j.get<std::string>(), 10) != 0) bad("bad integer \"" + j.get<std::string>() + "\"");
        return x;
    }
    bad("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(integer_from_json(j));
    if (j.is_string()) {
        Rational x;
        if (x.set_str(j.get<std::string>(), 10) != 0 || x.get_den() == 0)
            bad("bad rational \"" + j.get<std::string>() + "\"");
        x.canonicalize();
        return x;
    }
    bad("expected a rational, got " + j.dump());
}

IntVector int_vector_from_json(const Json& j) {
    if (!j.is_array()) bad("expected an integer array, got " + j.dump());
    IntVector v;
    for (const auto& x : j) v.push_back(integer_from_json(x));
    return v;
}

RatVector rat_vector_from_json(const Json& j) {
    if (!j.is_array()) bad("expected a rational array, got " + j.dump());
    RatVector v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

std::vector<IntVector> int_rows_from_json(const Json& j) {
    if (!j.is_array()) bad("expected an array of integer arrays");
    std::vector<IntVector> rows;
    for (const auto& r : j) rows.push_back(int_vector_from_json(r));
    return rows;
}

TupleInput tuple_from_json(const Json& j) {
    const Json& cs = field(j, "configurations");
    if (!cs.is_array() || cs.empty()) bad("\"configurations\" must be a nonempty array");
    std::vector<std::vector<IntVector>> pts;
    for (const auto& c : cs) {
        auto rows = int_rows_from_json(c);
        if (rows.empty()) bad("empty configuration");
        pts.push_back(std::move(rows));
    }
    TupleInput in{ConfigTuple::from_points(pts), std::nullopt};
    if (j.contains("specialized")) {
        const Json& sj = j.at("specialized");
        if (!sj.is_array()) bad("\"specialized\" must be an array of label arrays");
        SpecializationPattern s;
        for (const auto& set : sj) {
            if (!set.is_array()) bad("\"specialized\" must be an array of label arrays");
            std::vector<std::size_t> labels;
            for (const auto& x : set) {
                std::size_t l = size_from_json(x, "specialized label");
                if (l == 0) bad("specialized labels are 1-based");
                labels.push_back(l - 1);
            }
            std::sort(labels.begin(), labels.end());
            if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) bad("repeated specialized label");
            s.sets.push_back(std::move(labels));
        }
        s.validate(in.tuple);
        in.pattern = std::move(s);
    }
    return in;
}

Json to_json(const ConfigTuple& t, const SpecializationPattern* s) {
    Json cs = Json::array();
    for (const auto& c : t.configs()) cs.push_back(to_json(c.points));
    Json j{{"configurations", cs}};
    if (s) {
        Json sj = Json::array();
        for (const auto& set : s->sets) {
            Json a = Json::array();
            for (auto l : set) a.push_back(l + 1);
            sj.push_back(a);
        }
        j["specialized"] = sj;
    }
    return j;
}

ConfigTuple tuple_from_text(const std::string& text) {
    std::vector<std::vector<IntVector>> pts(1);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        IntVector row;
        std::string tok;
        while (ls >> tok) {
            Integer x;
            if (x.set_str(tok, 10) != 0) bad("bad integer \"" + tok + "\" in text input");
            row.push_back(x);
        }
        if (row.empty()) {
            if (!pts.back().empty()) pts.emplace_back();
        } else {
            pts.back().push_back(std::move(row));
        }
    }
    if (pts.back().empty()) pts.pop_back();
    if (pts.empty()) bad("text input has no points");
    return ConfigTuple::from_points(pts);
}

Json to_json(const Cone& c) {
    return Json{{"rays", to_json(c.rays())}, {"lineality", to_json(c.lineality())}};
}

Cone cone_from_json(std::size_t n, const Json& j) {
    auto rows = [&](const char* name) {
        auto r = j.contains(name) ? int_rows_from_json(j.at(name)) : std::vector<IntVector>{};
        for (const auto& v : r)
            if (v.size() != n) bad(std::string("vector of wrong length in \"") + name + "\"");
        return r;
    };
    if (!j.is_object()) bad("a cone must be an object");
    bool v_form = j.contains("rays") || j.contains("lineality");
    bool h_form = j.contains("equations") || j.contains("inequalities");
    if (v_form == h_form) bad("a cone needs either rays/lineality or equations/inequalities");
    if (v_form) return Cone::from_v(n, rows("rays"), rows("lineality"));
    return Cone::from_h(n, rows("equations"), rows("inequalities"));
}

Json to_json(const WeightedConeSet& s) {
    Json pieces = Json::array();
    for (const auto& p : s.pieces) {
        Json c = to_json(p.cone);
        c["multiplicity"] = to_json(p.multiplicity);
        pieces.push_back(c);
    }
    return Json{{"ambient_dim", s.ambient_dim}, {"pieces", pieces}};
}

WeightedConeSet cone_set_from_json(const Json& j) {
    WeightedConeSet s;
    s.ambient_dim = size_from_json(field(j, "ambient_dim"), "\"ambient_dim\"");
    const Json& pieces = field(j, "pieces");
    if (!pieces.is_array()) bad("\"pieces\" must be an array");
    for (const auto& p : pieces) {
        WeightedCone w{cone_from_json(s.ambient_dim, p), 1};
        if (p.contains("multiplicity")) w.multiplicity = integer_from_json(p.at("multiplicity"));
        if (w.multiplicity <= 0) bad("multiplicities must be positive");
        s.pieces.push_back(std::move(w));
    }
    return s;
}

Json to_json(const Fan& f) {
    auto idx = index_rays(f);
    Json cones = Json::array();
    for (const auto& c : idx.cone_rays) cones.push_back(c);
    Json mult = Json::array();
    for (const auto& m : f.multiplicities) mult.push_back(to_json(m));
    return Json{{"ambient_dim", f.ambient_dim}, {"lineality", to_json(f.lineality)},
                {"rays", to_json(idx.rays)},     {"cones", cones},
                {"multiplicities", mult},        {"f_vector", fvector(f)}};
}

Fan fan_from_json(const Json& j) {
    Fan f;
    f.ambient_dim = size_from_json(field(j, "ambient_dim"), "\"ambient_dim\"");
    f.lineality = j.contains("lineality") ? int_rows_from_json(j.at("lineality")) : std::vector<IntVector>{};
    auto rays = j.contains("rays") ? int_rows_from_json(j.at("rays")) : std::vector<IntVector>{};
    for (const auto& v : rays)
        if (v.size() != f.ambient_dim) bad("ray of wrong length");
    for (const auto& v : f.lineality)
        if (v.size() != f.ambient_dim) bad("lineality vector of wrong length");
    const Json& cones = field(j, "cones");
    if (!cones.is_array()) bad("\"cones\" must be an array");
    for (const auto& c : cones) {
        if (!c.is_array()) bad("a fan cone must be an array of ray indices");
        std::vector<IntVector> gens;
        for (const auto& x : c) {
            std::size_t i = size_from_json(x, "ray index");
            if (i >= rays.size()) bad("ray index out of range");
            gens.push_back(rays[i]);
        }
        f.cones.push_back(Cone::from_v(f.ambient_dim, gens, f.lineality));
    }
    if (j.contains("multiplicities")) {
        for (const auto& m : j.at("multiplicities")) f.multiplicities.push_back(integer_from_json(m));
        if (f.multiplicities.size() != f.cones.size()) bad("one multiplicity per cone expected");
    } else {
        f.multiplicities.assign(f.cones.size(), 1);
    }
    return f;
}

}  // namespace tropres
