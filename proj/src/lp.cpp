#include "tropres/lp.hpp"

#include "tropres/error.hpp"

namespace tropres {

LPResult lp_maximize(const std::vector<RatVector>& a, const RatVector& b, const RatVector& c) {
    std::size_t m = a.size(), n = c.size(), w = n + m + 1;
    for (const auto& x : b)
        if (sgn(x) < 0) throw Error(ErrorCode::Internal, "lp_maximize: negative right-hand side");
    std::vector<RatVector> t(m, RatVector(w));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = 1;
        t[i][w - 1] = b[i];
        basis[i] = n + i;
    }
    // obj[j] is the reduced profit of column j; obj[w-1] is minus the current value.
    RatVector obj(w);
    for (std::size_t j = 0; j < n; ++j) obj[j] = c[j];

    LPResult res;
    while (true) {
        std::size_t enter = w;
        for (std::size_t j = 0; j + 1 < w; ++j)
            if (sgn(obj[j]) > 0) {
                enter = j;
                break;
            }
        if (enter == w) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(t[i][enter]) <= 0) continue;
            Rational ratio = t[i][w - 1] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) {
            res.unbounded = true;
            return res;
        }
        Rational inv = 1 / t[leave][enter];
        for (auto& x : t[leave])
            if (sgn(x) != 0) x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || sgn(t[i][enter]) == 0) continue;
            Rational f = t[i][enter];
            for (std::size_t j = 0; j < w; ++j)
                if (sgn(t[leave][j]) != 0) t[i][j] -= f * t[leave][j];
        }
        if (sgn(obj[enter]) != 0) {
            Rational f = obj[enter];
            for (std::size_t j = 0; j < w; ++j)
                if (sgn(t[leave][j]) != 0) obj[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    res.x.assign(n, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) res.x[basis[i]] = t[i][w - 1];
    res.value = -obj[w - 1];
    return res;
}

}  // namespace tropres
