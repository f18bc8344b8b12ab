#pragma once

// Example tuples shared by the unit and acceptance tests.

#include "tropres/configurations.hpp"

#include <initializer_list>
#include <vector>

namespace examples {

using tropres::ConfigTuple;
using tropres::IntVector;
using tropres::SpecializationPattern;

inline IntVector pt(std::initializer_list<long> x) {
    IntVector v;
    for (auto a : x) v.push_back(a);
    return v;
}

inline std::vector<IntVector> pts(std::initializer_list<std::initializer_list<long>> x) {
    std::vector<IntVector> out;
    for (auto p : x) out.push_back(pt(p));
    return out;
}

// Three planar triangles.
inline ConfigTuple three_triangles() {
    return ConfigTuple::from_points({pts({{0, 0}, {0, 1}, {1, 0}}), pts({{0, 0}, {1, 0}, {2, 1}}),
                                     pts({{0, 0}, {0, 1}, {1, 2}})});
}

// Two copies of {0,1,2} on the line.
inline ConfigTuple two_segments() { return ConfigTuple::from_points({pts({{0}, {1}, {2}}), pts({{0}, {1}, {2}})}); }

// 1-based labels to a pattern.
inline SpecializationPattern pattern(std::initializer_list<std::initializer_list<std::size_t>> sets) {
    SpecializationPattern s;
    for (auto x : sets) {
        std::vector<std::size_t> v;
        for (auto j : x) v.push_back(j - 1);
        s.sets.push_back(v);
    }
    return s;
}

// Four triangles in R^3.
inline ConfigTuple four_space_triangles() {
    return ConfigTuple::from_points({pts({{0, 0, 1}, {1, 0, 1}, {3, 1, 1}}), pts({{0, 0, 3}, {0, 2, 2}, {1, 1, 0}}),
                                     pts({{0, 2, 3}, {2, 1, 1}, {2, 2, 1}}), pts({{1, 2, 1}, {2, 0, 0}, {2, 3, 2}})});
}

inline ConfigTuple specialized_squares() {
    return ConfigTuple::from_points({pts({{0, 0}, {0, 1}, {1, 0}, {1, 1}}), pts({{0, 1}, {1, 0}, {1, 1}, {2, 2}}),
                                     pts({{0, 0}, {1, 1}, {1, 2}, {2, 1}})});
}
inline SpecializationPattern specialized_squares_pattern() { return pattern({{1, 4}, {3, 4}, {1, 2}}); }

// Bicubic surface supports with the origin first.
inline ConfigTuple bicubic() {
    return ConfigTuple::from_points(
        {pts({{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {2, 0}, {3, 0}}),
         pts({{0, 0}, {0, 1}, {0, 3}, {1, 0}, {2, 0}, {3, 0}}),
         pts({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2},
              {3, 3}})});
}
inline SpecializationPattern all_but_first(const ConfigTuple& t) {
    SpecializationPattern s;
    for (std::size_t i = 0; i < t.k(); ++i) {
        std::vector<std::size_t> v;
        for (std::size_t j = 1; j < t.size(i); ++j) v.push_back(j);
        s.sets.push_back(v);
    }
    return s;
}

inline ConfigTuple badlink() {
    return ConfigTuple::from_points({pts({{0, 0}, {0, 1}, {0, 3}, {1, 0}, {3, 0}}),
                                     pts({{0, 0}, {0, 1}, {0, 3}, {1, 0}, {3, 0}}),
                                     pts({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 3}, {2, 0}, {3, 1}, {3, 3}})});
}

// Four planar triangles; the pattern specializes all but one point of each of the first three.
inline ConfigTuple four_triangles() {
    return ConfigTuple::from_points({pts({{0, 4}, {2, 1}, {4, 1}}), pts({{3, 1}, {5, 0}, {5, 4}}),
                                     pts({{3, 1}, {4, 5}, {5, 2}}), pts({{0, 4}, {1, 3}, {2, 5}})});
}
inline SpecializationPattern four_triangles_pattern() { return pattern({{1, 2}, {1, 2}, {1, 2}, {1}}); }

}  // namespace examples
