// Flat ambient spaces with a diagonal metric. The para-Kaehler plane is the
// neutral case: coordinates (x_1..x_m, y_1..y_m), metric diag(-1 x m, +1 x m),
// product structure P swapping the two blocks, so P^2 = I and
// g0(PX, PY) = -g0(X, Y).
#pragma once

#include <stdexcept>
#include <vector>

#include "linalg.hpp"

namespace warpcheck {

struct Ambient {
    int dim = 0;
    std::vector<double> signs;  // diagonal metric entries
    bool neutral = false;       // true: para-Kaehler plane of half-dimension m
    int m = 0;

    static Ambient neutral_plane(int m) {
        Ambient a;
        a.dim = 2 * m;
        a.m = m;
        a.neutral = true;
        a.signs.assign(2 * m, 1.0);
        for (int i = 0; i < m; ++i) a.signs[i] = -1.0;
        return a;
    }

    static Ambient euclidean(int d) {
        Ambient a;
        a.dim = d;
        a.signs.assign(d, 1.0);
        return a;
    }

    // Neutral pairing computed as dot(y-block) - dot(x-block) so that
    // g0(PX, X) = 0 and g0(PX, PY) = -g0(X, Y) hold bit-exactly.
    double pairing(const Vec& u, const Vec& v) const {
        if (static_cast<int>(u.size()) != dim || static_cast<int>(v.size()) != dim)
            throw std::invalid_argument("ambient pairing dimension mismatch");
        if (neutral) {
            double xb = 0.0, yb = 0.0;
            for (int i = 0; i < m; ++i) xb += u[i] * v[i];
            for (int i = m; i < dim; ++i) yb += u[i] * v[i];
            return yb - xb;
        }
        double acc = 0.0;
        for (int i = 0; i < dim; ++i) acc += signs[i] * u[i] * v[i];
        return acc;
    }

    // The para-complex structure: (x, y) -> (y, x).
    Vec structure(const Vec& v) const {
        if (!neutral) throw std::logic_error("product structure requires the neutral plane");
        if (static_cast<int>(v.size()) != dim)
            throw std::invalid_argument("structure dimension mismatch");
        Vec r(dim);
        for (int i = 0; i < m; ++i) {
            r[i] = v[m + i];
            r[m + i] = v[i];
        }
        return r;
    }
};

}  // namespace warpcheck
