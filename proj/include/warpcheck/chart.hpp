// Warped-product chart on B x_f F: base coordinates (s_1..s_h, t_1..t_h) with
// the neutral metric -ds^2 + dt^2, fiber coordinates u_1..u_p, total metric
// g = g_B + f(s,t)^2 g_F. The warp enters only through f^2 as a jet field.
#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "fiber.hpp"
#include "jet.hpp"
#include "linalg.hpp"

namespace warpcheck {

// f^2 evaluated on seeded base-coordinate jets (s_1..s_h, t_1..t_h); the seed
// space of the inputs is arbitrary, so the same field serves chart-sized and
// base-sized differentiations.
using WarpSqField = std::function<Jet2(const std::vector<Jet2>&)>;

struct MetricJets {
    int n = 0;
    std::vector<Jet2> g;  // row-major n x n
    const Jet2& at(int i, int j) const { return g[static_cast<std::size_t>(i) * n + j]; }
    Jet2& at(int i, int j) { return g[static_cast<std::size_t>(i) * n + j]; }

    Mat values() const {
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = at(i, j).value();
        return m;
    }
};

using MetricField = std::function<MetricJets(const Vec&)>;

struct WarpedChart {
    int h = 1;
    Fiber fiber;
    WarpSqField warp_sq;
    double warp_sq_min = 1e-2;  // domain margin: f^2 >= this

    int dim() const { return 2 * h + fiber.p; }

    Vec base_point(const Vec& xi) const { return Vec(xi.begin(), xi.begin() + 2 * h); }
    Vec fiber_point(const Vec& xi) const { return Vec(xi.begin() + 2 * h, xi.end()); }

    // Base coordinates as jets in an nvars-dimensional seed space starting at
    // slot `offset` (0 for chart jets, also 0 for pure-base jets).
    std::vector<Jet2> base_jets(const Vec& st, int nvars, int offset) const {
        std::vector<Jet2> b(2 * h);
        for (int i = 0; i < 2 * h; ++i) b[i] = Jet2::seed(st[i], offset + i, nvars);
        return b;
    }

    Jet2 f_sq_jet(const Vec& xi) const { return warp_sq(base_jets(base_point(xi), dim(), 0)); }
    Jet2 f_jet(const Vec& xi) const { return sqrt(f_sq_jet(xi)); }
    Jet2 psi_jet(const Vec& xi) const { return log(f_sq_jet(xi)) * 0.5; }

    // ln f as a function of the base point only (2h seed variables).
    Jet2 psi_base_jet(const Vec& st) const { return log(warp_sq(base_jets(st, 2 * h, 0))) * 0.5; }
    Jet2 f_sq_base_jet(const Vec& st) const { return warp_sq(base_jets(st, 2 * h, 0)); }

    MetricJets metric_jets(const Vec& xi) const {
        check_point(xi);
        const int n = dim();
        MetricJets mj;
        mj.n = n;
        mj.g.assign(static_cast<std::size_t>(n) * n, Jet2::constant(0.0, n));
        for (int i = 0; i < h; ++i) mj.at(i, i) = Jet2::constant(-1.0, n);
        for (int i = h; i < 2 * h; ++i) mj.at(i, i) = Jet2::constant(1.0, n);
        const Jet2 f2 = f_sq_jet(xi);
        const std::vector<Jet2> gf = fiber.metric_diag_jets(fiber_point(xi), n, 2 * h);
        for (int a = 0; a < fiber.p; ++a) mj.at(2 * h + a, 2 * h + a) = f2 * gf[a];
        return mj;
    }

    Mat metric(const Vec& xi) const { return metric_jets(xi).values(); }

    MetricField metric_field() const {
        return [chart = *this](const Vec& xi) { return chart.metric_jets(xi); };
    }

    bool in_domain(const Vec& xi) const {
        if (static_cast<int>(xi.size()) != dim()) return false;
        if (!fiber.in_chart(fiber_point(xi))) return false;
        std::vector<Jet2> b(2 * h);
        for (int i = 0; i < 2 * h; ++i) b[i] = Jet2::constant(xi[i], 1);
        return warp_sq(b).value() >= warp_sq_min;
    }

private:
    void check_point(const Vec& xi) const {
        if (static_cast<int>(xi.size()) != dim())
            throw std::invalid_argument("chart point has wrong dimension");
    }
};

}  // namespace warpcheck
