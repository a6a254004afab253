// Fiber factors of the warped product: round sphere, hyperbolic space, or
// flat space, each in one fixed nested-trigonometric chart with a diagonal
// metric, plus the embedding of the chart into the standard model quadric.
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ambient.hpp"
#include "jet.hpp"
#include "linalg.hpp"

namespace warpcheck {

enum class FiberKind { Sphere, Hyperbolic, Flat };

struct Fiber {
    FiberKind kind = FiberKind::Flat;
    int p = 1;

    double curvature() const {
        switch (kind) {
            case FiberKind::Sphere: return 1.0;
            case FiberKind::Hyperbolic: return -1.0;
            case FiberKind::Flat: return 0.0;
        }
        return 0.0;
    }

    // Diagonal chart metric as jets. Seeds live in an nvars-dimensional space
    // with the fiber coordinates occupying slots [offset, offset + p).
    //   sphere:      g_aa = prod_{b<a} cos^2 u_b
    //   hyperbolic:  g_11 = 1, g_aa = sinh^2 u_1 * prod_{2<=b<a} cos^2 u_b
    //   flat:        g_aa = 1
    std::vector<Jet2> metric_diag_jets(const Vec& u, int nvars, int offset) const {
        check_size(u);
        std::vector<Jet2> uj(p);
        for (int a = 0; a < p; ++a) uj[a] = Jet2::seed(u[a], offset + a, nvars);
        std::vector<Jet2> g(p, Jet2::constant(1.0, nvars));
        if (kind == FiberKind::Sphere) {
            Jet2 acc = Jet2::constant(1.0, nvars);
            for (int a = 0; a < p; ++a) {
                g[a] = acc;
                const Jet2 c = cos(uj[a]);
                acc = acc * (c * c);
            }
        } else if (kind == FiberKind::Hyperbolic) {
            if (p >= 2) {
                const Jet2 sh = sinh(uj[0]);
                Jet2 acc = sh * sh;
                for (int a = 1; a < p; ++a) {
                    g[a] = acc;
                    const Jet2 c = cos(uj[a]);
                    acc = acc * (c * c);
                }
            }
        }
        return g;
    }

    std::vector<double> metric_diag(const Vec& u) const {
        std::vector<Jet2> g = metric_diag_jets(u, p, 0);
        std::vector<double> r(p);
        for (int a = 0; a < p; ++a) r[a] = g[a].value();
        return r;
    }

    // Chart point -> standard model coordinates:
    //   sphere:      w in S^p subset E^{p+1} (unit sphere)
    //   hyperbolic:  w in H^p subset E^{p+1}_1 (w0^2 - sum w_a^2 = 1, w0 >= 1)
    //   flat:        identity
    std::vector<Jet2> model_jets(const Vec& u, int nvars, int offset) const {
        check_size(u);
        std::vector<Jet2> uj(p);
        for (int a = 0; a < p; ++a) uj[a] = Jet2::seed(u[a], offset + a, nvars);
        return model_jets_from(uj);
    }

    // same map on caller-supplied coordinate jets (seeded or constant)
    std::vector<Jet2> model_jets_from(const std::vector<Jet2>& uj) const {
        if (static_cast<int>(uj.size()) != p)
            throw std::invalid_argument("fiber chart point has wrong dimension");
        const int nvars = p > 0 ? uj[0].vars() : 0;
        std::vector<Jet2> w;
        if (kind == FiberKind::Sphere) {
            // w0 = cos u_1...cos u_p, w_a = cos u_1...cos u_{a-1} sin u_a
            w.assign(p + 1, Jet2::constant(1.0, nvars));
            Jet2 acc = Jet2::constant(1.0, nvars);
            for (int a = 0; a < p; ++a) {
                w[a + 1] = acc * sin(uj[a]);
                acc = acc * cos(uj[a]);
            }
            w[0] = acc;
        } else if (kind == FiberKind::Hyperbolic) {
            // w0 = cosh u_1; w_a = sinh u_1 cos u_2...cos u_a sin u_{a+1} (a < p);
            // w_p = sinh u_1 cos u_2...cos u_p
            w.assign(p + 1, Jet2::constant(1.0, nvars));
            w[0] = cosh(uj[0]);
            Jet2 acc = sinh(uj[0]);
            for (int a = 1; a < p; ++a) {
                w[a] = acc * sin(uj[a]);
                acc = acc * cos(uj[a]);
            }
            w[p] = acc;
        } else {
            for (int a = 0; a < p; ++a) w.push_back(uj[a]);
        }
        return w;
    }

    std::vector<double> chart_to_model(const Vec& u) const {
        std::vector<Jet2> w = model_jets(u, p, 0);
        std::vector<double> r(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) r[i] = w[i].value();
        return r;
    }

    // Metric of the flat space the model quadric sits in.
    Ambient model_ambient() const {
        if (kind == FiberKind::Hyperbolic) {
            Ambient a = Ambient::euclidean(p + 1);
            a.signs[0] = -1.0;
            return a;
        }
        return Ambient::euclidean(kind == FiberKind::Sphere ? p + 1 : p);
    }

    // Sampling box per fiber coordinate; stays clear of chart degeneracies
    // (angle poles, sinh u_1 = 0) by a fixed margin.
    std::pair<Vec, Vec> sample_box() const {
        const double ang = std::numbers::pi / 2 - 0.1;
        Vec lo(p), hi(p);
        for (int a = 0; a < p; ++a) {
            switch (kind) {
                case FiberKind::Sphere: lo[a] = -ang; hi[a] = ang; break;
                case FiberKind::Hyperbolic:
                    if (a == 0) { lo[a] = 0.1; hi[a] = 2.0; }
                    else { lo[a] = -ang; hi[a] = ang; }
                    break;
                case FiberKind::Flat: lo[a] = -2.0; hi[a] = 2.0; break;
            }
        }
        return {lo, hi};
    }

    bool in_chart(const Vec& u) const {
        if (static_cast<int>(u.size()) != p) return false;
        const auto [lo, hi] = sample_box();
        for (int a = 0; a < p; ++a)
            if (u[a] < lo[a] || u[a] > hi[a]) return false;
        return true;
    }

private:
    void check_size(const Vec& u) const {
        if (static_cast<int>(u.size()) != p)
            throw std::invalid_argument("fiber chart point has wrong dimension");
    }
};

}  // namespace warpcheck
