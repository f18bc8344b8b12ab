#include "tropres/configurations.hpp"

#include "tropres/error.hpp"
#include "tropres/polyhedral.hpp"

#include <algorithm>

namespace tropres {

ConfigTuple::ConfigTuple(std::size_t n, std::vector<PointConfiguration> configs)
    : n_(n), configs_(std::move(configs)) {
    if (configs_.empty()) throw Error(ErrorCode::InvalidInput, "a tuple needs at least one configuration");
    for (const auto& c : configs_) {
        if (c.n != n_) throw Error(ErrorCode::InvalidInput, "configurations must share the ambient dimension");
        if (c.points.size() < 2) throw Error(ErrorCode::DegenerateConfig, "every configuration needs at least two points");
        for (const auto& p : c.points)
            if (p.size() != n_) throw Error(ErrorCode::InvalidInput, "point dimension mismatch");
        offsets_.push_back(m_);
        m_ += c.points.size();
    }
}

ConfigTuple ConfigTuple::from_points(const std::vector<std::vector<IntVector>>& pts) {
    if (pts.empty() || pts[0].empty()) throw Error(ErrorCode::InvalidInput, "empty configuration list");
    std::size_t n = pts[0][0].size();
    std::vector<PointConfiguration> cs;
    for (const auto& p : pts) cs.push_back(PointConfiguration{n, p});
    return ConfigTuple(n, std::move(cs));
}

std::pair<std::size_t, std::size_t> ConfigTuple::locate(std::size_t global) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), global);
    std::size_t i = static_cast<std::size_t>(it - offsets_.begin()) - 1;
    return {i, global - offsets_[i]};
}

SpecializationPattern SpecializationPattern::none(const ConfigTuple& t) {
    SpecializationPattern s;
    s.sets.assign(t.k(), {});
    return s;
}

bool SpecializationPattern::empty() const {
    for (const auto& x : sets)
        if (!x.empty()) return false;
    return true;
}

void SpecializationPattern::validate(const ConfigTuple& t) const {
    if (sets.size() != t.k()) throw Error(ErrorCode::InvalidInput, "specialization pattern has wrong number of sets");
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (auto j : sets[i])
            if (j >= t.size(i)) throw Error(ErrorCode::InvalidInput, "specialized label out of range");
}

std::vector<bool> SpecializationPattern::mask(const ConfigTuple& t) const {
    std::vector<bool> m(t.m(), false);
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (auto j : sets[i]) m[t.offset(i) + j] = true;
    return m;
}

std::vector<std::size_t> SpecializationPattern::specialized_labels(const ConfigTuple& t) const {
    auto m = mask(t);
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < m.size(); ++g)
        if (m[g]) out.push_back(g);
    return out;
}

std::vector<std::size_t> SpecializationPattern::free_labels(const ConfigTuple& t) const {
    auto m = mask(t);
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < m.size(); ++g)
        if (!m[g]) out.push_back(g);
    return out;
}

std::vector<std::size_t> global_labels(const ConfigTuple& t, const PairTuple& e) {
    std::vector<std::size_t> g;
    for (std::size_t i = 0; i < e.size(); ++i) {
        g.push_back(t.offset(i) + e[i][0]);
        g.push_back(t.offset(i) + e[i][1]);
    }
    return g;
}

IntMatrix cayley(const ConfigTuple& t) {
    IntMatrix c(t.k() + t.n(), t.m());
    for (std::size_t i = 0; i < t.k(); ++i)
        for (std::size_t j = 0; j < t.size(i); ++j) {
            std::size_t col = t.offset(i) + j;
            c(i, col) = 1;
            for (std::size_t r = 0; r < t.n(); ++r) c(t.k() + r, col) = t.point(i, j)[r];
        }
    return c;
}

IntMatrix homogenize(const PointConfiguration& p) {
    IntMatrix c(p.n + 1, p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        c(0, j) = 1;
        for (std::size_t r = 0; r < p.n; ++r) c(r + 1, j) = p.points[j][r];
    }
    return c;
}

std::pair<ConfigTuple, SpecializationPattern> implicitization_setup(
    const std::vector<std::vector<IntVector>>& supports) {
    if (supports.empty()) throw Error(ErrorCode::InvalidInput, "no supports given");
    std::vector<std::vector<IntVector>> pts;
    SpecializationPattern s;
    for (const auto& sup : supports) {
        if (sup.empty()) throw Error(ErrorCode::InvalidInput, "empty support");
        auto p = sup;
        p.push_back(IntVector(sup[0].size(), 0));
        std::vector<std::size_t> lab(sup.size());
        for (std::size_t j = 0; j < sup.size(); ++j) lab[j] = j;
        pts.push_back(std::move(p));
        s.sets.push_back(std::move(lab));
    }
    return {ConfigTuple::from_points(pts), s};
}

namespace {

bool in_convex_hull(const IntVector& p, const std::vector<IntVector>& others) {
    if (others.empty()) return false;
    std::vector<IntVector> gens;
    for (const auto& q : others) {
        IntVector h{1};
        h.insert(h.end(), q.begin(), q.end());
        gens.push_back(std::move(h));
    }
    IntVector hp{1};
    hp.insert(hp.end(), p.begin(), p.end());
    return Cone::from_v(hp.size(), gens, {}).contains(hp);
}

}  // namespace

std::pair<ConfigTuple, SpecializationPattern> drop_redundant_specialized(const ConfigTuple& t,
                                                                         const SpecializationPattern& s) {
    s.validate(t);
    std::vector<PointConfiguration> cs;
    SpecializationPattern out;
    for (std::size_t i = 0; i < t.k(); ++i) {
        std::vector<bool> keep(t.size(i), true), spec(t.size(i), false);
        for (auto j : s.sets[i]) spec[j] = true;
        for (std::size_t j = 0; j < t.size(i); ++j) {
            if (!spec[j]) continue;
            std::vector<IntVector> others;
            for (std::size_t q = 0; q < t.size(i); ++q)
                if (q != j && spec[q] && keep[q]) others.push_back(t.point(i, q));
            if (in_convex_hull(t.point(i, j), others)) keep[j] = false;
        }
        PointConfiguration pc{t.n(), {}};
        std::vector<std::size_t> lab;
        for (std::size_t j = 0; j < t.size(i); ++j) {
            if (!keep[j]) continue;
            if (spec[j]) lab.push_back(pc.points.size());
            pc.points.push_back(t.point(i, j));
        }
        if (pc.points.size() < 2)
            throw Error(ErrorCode::DegenerateConfig, "dropping redundant specialized points leaves fewer than two points");
        cs.push_back(std::move(pc));
        out.sets.push_back(std::move(lab));
    }
    return {ConfigTuple(t.n(), std::move(cs)), out};
}

ConfigTuple extended_tuple(const ConfigTuple& t, const SpecializationPattern& s) {
    s.validate(t);
    auto mask = s.mask(t);
    std::size_t extra = 0;
    for (bool b : mask)
        if (!b) ++extra;
    std::vector<PointConfiguration> cs;
    std::size_t next = 0;
    for (std::size_t i = 0; i < t.k(); ++i) {
        PointConfiguration pc{t.n() + extra, {}};
        for (std::size_t j = 0; j < t.size(i); ++j) {
            IntVector p = t.point(i, j);
            p.resize(t.n() + extra, 0);
            if (!mask[t.offset(i) + j]) p[t.n() + next++] = 1;
            pc.points.push_back(std::move(p));
        }
        cs.push_back(std::move(pc));
    }
    return ConfigTuple(t.n() + extra, std::move(cs));
}

}  // namespace tropres
