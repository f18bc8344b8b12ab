#pragma once

#include "tropres/exactmath.hpp"

#include <array>
#include <utility>
#include <vector>

namespace tropres {

struct PointConfiguration {
    std::size_t n = 0;
    std::vector<IntVector> points;

    std::size_t size() const { return points.size(); }
};

// Tuple of configurations in a common Z^n. Labels are 0-based; the global label
// of point j of configuration i is offset(i) + j.
class ConfigTuple {
public:
    ConfigTuple() = default;
    ConfigTuple(std::size_t n, std::vector<PointConfiguration> configs);
    static ConfigTuple from_points(const std::vector<std::vector<IntVector>>& pts);

    std::size_t n() const { return n_; }
    std::size_t k() const { return configs_.size(); }
    std::size_t m() const { return m_; }
    std::size_t size(std::size_t i) const { return configs_[i].size(); }
    std::size_t offset(std::size_t i) const { return offsets_[i]; }
    // (configuration, local label) of a global label.
    std::pair<std::size_t, std::size_t> locate(std::size_t global) const;
    const PointConfiguration& config(std::size_t i) const { return configs_[i]; }
    const std::vector<PointConfiguration>& configs() const { return configs_; }
    const IntVector& point(std::size_t i, std::size_t j) const { return configs_[i].points[j]; }

private:
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<PointConfiguration> configs_;
    std::vector<std::size_t> offsets_;
};

// Per-configuration sets of specialized local labels (sorted, 0-based).
struct SpecializationPattern {
    std::vector<std::vector<std::size_t>> sets;

    static SpecializationPattern none(const ConfigTuple& t);
    bool empty() const;
    // Global specialized flags.
    std::vector<bool> mask(const ConfigTuple& t) const;
    std::vector<std::size_t> specialized_labels(const ConfigTuple& t) const;
    std::vector<std::size_t> free_labels(const ConfigTuple& t) const;
    void validate(const ConfigTuple& t) const;
};

// E_i as a pair of distinct local labels per configuration.
using PairTuple = std::vector<std::array<std::size_t, 2>>;
std::vector<std::size_t> global_labels(const ConfigTuple& t, const PairTuple& e);

// Homogeneous (k+n) x m Cayley matrix; column (i,j) is (e_i, a_ij).
IntMatrix cayley(const ConfigTuple& t);
// Homogenized single configuration: columns (1, a_j).
IntMatrix homogenize(const PointConfiguration& p);

std::pair<ConfigTuple, SpecializationPattern> implicitization_setup(
    const std::vector<std::vector<IntVector>>& supports);
std::pair<ConfigTuple, SpecializationPattern> drop_redundant_specialized(const ConfigTuple& t,
                                                                         const SpecializationPattern& s);
ConfigTuple extended_tuple(const ConfigTuple& t, const SpecializationPattern& s);

// Calls f(E) for every pair tuple choosing two labels from each allowed list.
template <class F>
void for_each_pair_tuple(const std::vector<std::vector<std::size_t>>& allowed, F&& f) {
    const std::size_t k = allowed.size();
    for (const auto& a : allowed)
        if (a.size() < 2) return;
    PairTuple e(k);
    std::vector<std::size_t> x(k, 0), y(k, 1);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) e[i] = {allowed[i][x[i]], allowed[i][y[i]]};
        f(static_cast<const PairTuple&>(e));
        std::size_t i = k;
        while (i > 0) {
            --i;
            const std::size_t sz = allowed[i].size();
            if (y[i] + 1 < sz) {
                ++y[i];
                break;
            }
            if (x[i] + 2 < sz) {
                ++x[i];
                y[i] = x[i] + 1;
                break;
            }
            x[i] = 0;
            y[i] = 1;
            if (i == 0) return;
        }
        if (k == 0) return;
    }
}

}  // namespace tropres
