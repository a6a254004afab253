// Immersions into a flat ambient and their second-order frame data. A framed
// point carries the exact jet-derived Jacobian/Hessian of the immersion, the
// pullback Gram matrix and its inverse; everything downstream (projectors,
// second fundamental form, shape operators) is linear algebra on top of it.
// Coordinate frames are used throughout; nothing is ever orthonormalized.
#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ambient.hpp"
#include "jet.hpp"
#include "linalg.hpp"

namespace warpcheck {

struct Immersion {
    Ambient ambient;
    int chart_dim = 0;
    // ambient.dim jets seeded in the chart_dim chart variables
    std::function<std::vector<Jet2>(const Vec&)> components;
    std::function<bool(const Vec&)> in_domain = [](const Vec&) { return true; };
};

struct FramedPoint {
    Ambient ambient;
    int n = 0;  // chart dimension
    Vec xi, phi;
    Mat jac;       // ambient.dim x n
    Vec hess;      // [comp][i][j] flattened second partials of the components
    Mat gram, gram_inv;
    double det_gram = 0.0;

    Vec tangent(int i) const { return jac.col(i); }

    Vec hess_vec(int i, int j) const {
        const int ad = ambient.dim;
        Vec v(ad);
        for (int c = 0; c < ad; ++c)
            v[c] = hess[(static_cast<std::size_t>(c) * n + i) * n + j];
        return v;
    }

    double pairing(const Vec& u, const Vec& v) const { return ambient.pairing(u, v); }

    // chart components of the tangential part: G^{-1} J^T g0 v
    Vec chart_components(const Vec& v) const {
        Vec w(n);
        for (int i = 0; i < n; ++i) w[i] = ambient.pairing(tangent(i), v);
        return gram_inv * w;
    }

    Vec push(const Vec& chart_vec) const { return jac * chart_vec; }

    Vec tangential(const Vec& v) const { return push(chart_components(v)); }

    Vec normal_part(const Vec& v) const {
        Vec t = tangential(v);
        Vec r(v.size());
        for (std::size_t c = 0; c < v.size(); ++c) r[c] = v[c] - t[c];
        return r;
    }

    Vec frame_causal_signs() const {
        Vec s(n);
        for (int i = 0; i < n; ++i) {
            const double g = gram(i, i);
            s[i] = g > 0 ? 1.0 : (g < 0 ? -1.0 : 0.0);
        }
        return s;
    }
};

enum class FrameStatus { Ok, OutOfDomain, Degenerate };

struct FrameResult {
    FrameStatus status = FrameStatus::OutOfDomain;
    double det_gram = 0.0;
    std::optional<FramedPoint> fp;
};

inline FrameResult frame(const Immersion& im, const Vec& xi) {
    if (static_cast<int>(xi.size()) != im.chart_dim)
        throw std::invalid_argument("frame: chart point has wrong dimension");
    if (im.in_domain && !im.in_domain(xi)) return {FrameStatus::OutOfDomain, 0.0, std::nullopt};

    const std::vector<Jet2> comp = im.components(xi);
    const int ad = im.ambient.dim, n = im.chart_dim;
    if (static_cast<int>(comp.size()) != ad)
        throw std::logic_error("immersion produced wrong number of components");

    FramedPoint fp;
    fp.ambient = im.ambient;
    fp.n = n;
    fp.xi = xi;
    fp.phi.resize(ad);
    fp.jac = Mat(ad, n);
    fp.hess.assign(static_cast<std::size_t>(ad) * n * n, 0.0);
    for (int c = 0; c < ad; ++c) {
        fp.phi[c] = comp[c].value();
        for (int i = 0; i < n; ++i) {
            fp.jac(c, i) = comp[c].grad(i);
            for (int j = 0; j < n; ++j)
                fp.hess[(static_cast<std::size_t>(c) * n + i) * n + j] = comp[c].hess(i, j);
        }
    }

    fp.gram = Mat(n, n);
    for (int i = 0; i < n; ++i) {
        const Vec ti = fp.tangent(i);
        for (int j = i; j < n; ++j) {
            const double g = im.ambient.pairing(ti, fp.tangent(j));
            fp.gram(i, j) = g;
            fp.gram(j, i) = g;
        }
    }

    const Lu lu(fp.gram);
    const double det = lu.singular() ? 0.0 : lu.det();
    const double scale = fp.gram.max_abs();
    double thresh = 1e-12;
    for (int i = 0; i < n; ++i) thresh *= scale;
    if (std::abs(det) <= thresh) return {FrameStatus::Degenerate, det, std::nullopt};

    fp.det_gram = det;
    fp.gram_inv = lu.inverse();
    return {FrameStatus::Ok, det, std::move(fp)};
}

// Requires an Ok frame; converts the two failure verdicts into exceptions for
// callers that treat them as errors (tests, spot evaluations).
inline FramedPoint frame_or_throw(const Immersion& im, const Vec& xi) {
    FrameResult r = frame(im, xi);
    if (r.status == FrameStatus::OutOfDomain) throw std::domain_error("point outside immersion domain");
    if (r.status == FrameStatus::Degenerate)
        throw std::runtime_error("degenerate pullback metric, det = " + std::to_string(r.det_gram));
    return *std::move(r.fp);
}

}  // namespace warpcheck
