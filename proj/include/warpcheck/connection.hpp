// Levi-Civita data from a metric given as a second-order jet field: the jets
// carry exactly the metric derivatives that Christoffels (first order) and the
// curvature tensor (second order) need, so nothing here differentiates twice.
// Closed-form connection/curvature of the warped charts live here too; their
// agreement with the numeric route is one of the engine's core checks.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "chart.hpp"
#include "jet.hpp"
#include "linalg.hpp"

namespace warpcheck {

// Degeneracy is a reportable verdict: campaigns catch this and record it.
struct DegenerateMetric : std::runtime_error {
    double det;
    explicit DegenerateMetric(double d)
        : std::runtime_error("degenerate metric, det = " + std::to_string(d)), det(d) {}
};

// |det g| <= 1e-12 * scale^n counts as degenerate, scale = max |g_ij|.
inline double check_metric_det(const Mat& g) {
    const Lu lu(g);
    const double det = lu.singular() ? 0.0 : lu.det();
    const double scale = g.max_abs();
    double thresh = 1e-12;
    for (int i = 0; i < g.rows(); ++i) thresh *= scale;
    if (std::abs(det) <= thresh) throw DegenerateMetric(det);
    return det;
}

struct Christoffels {
    int n = 0;
    std::vector<double> c;  // [k][i][j], symmetric in (i, j)
    double at(int k, int i, int j) const {
        return c[(static_cast<std::size_t>(k) * n + i) * n + j];
    }
    double& at(int k, int i, int j) { return c[(static_cast<std::size_t>(k) * n + i) * n + j]; }
    double max_abs() const {
        double m = 0.0;
        for (double v : c) m = std::max(m, std::abs(v));
        return m;
    }
};

// Gamma^k_ij = (1/2) g^{kl} (d_i g_jl + d_j g_il - d_l g_ij)
inline Christoffels christoffel_numeric(const MetricJets& mj) {
    const int n = mj.n;
    const Mat g = mj.values();
    check_metric_det(g);
    const Mat ginv = Lu(g).inverse();
    Christoffels ch;
    ch.n = n;
    ch.c.assign(static_cast<std::size_t>(n) * n * n, 0.0);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double acc = 0.0;
                for (int l = 0; l < n; ++l) {
                    const double term = mj.at(j, l).grad(i) + mj.at(i, l).grad(j) - mj.at(i, j).grad(l);
                    acc += ginv(k, l) * term;
                }
                ch.at(k, i, j) = 0.5 * acc;
                ch.at(k, j, i) = 0.5 * acc;
            }
    return ch;
}

// Curvature R(d_i, d_j) d_k = R^l_{kij} d_l with the bracket convention
// R_{XY} = [nabla_X, nabla_Y] - nabla_[X,Y]:
//   R^l_{kij} = d_i Gamma^l_jk - d_j Gamma^l_ik
//             + Gamma^m_jk Gamma^l_im - Gamma^m_ik Gamma^l_jm.
// d Gamma uses d g^{kl} = -g^{ka} (d g_ab) g^{bl} and the metric Hessian.
class RiemannTensor {
public:
    explicit RiemannTensor(const MetricJets& mj) : n_(mj.n) {
        const int n = n_;
        const Mat g = mj.values();
        check_metric_det(g);
        g_ = g;
        const Mat ginv = Lu(g).inverse();

        Christoffels ch;
        ch.n = n;
        ch.c.assign(static_cast<std::size_t>(n) * n * n, 0.0);
        // dch[m][k][i][j] = d_m Gamma^k_ij
        std::vector<double> dch(static_cast<std::size_t>(n) * n * n * n, 0.0);
        auto dch_at = [&](int m, int k, int i, int j) -> double& {
            return dch[((static_cast<std::size_t>(m) * n + k) * n + i) * n + j];
        };

        // d_m g^{kl}
        std::vector<double> dginv(static_cast<std::size_t>(n) * n * n, 0.0);
        auto dginv_at = [&](int m, int k, int l) -> double& {
            return dginv[(static_cast<std::size_t>(m) * n + k) * n + l];
        };
        for (int m = 0; m < n; ++m)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    double acc = 0.0;
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b)
                            acc -= ginv(k, a) * mj.at(a, b).grad(m) * ginv(b, l);
                    dginv_at(m, k, l) = acc;
                }

        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double acc = 0.0;
                    for (int l = 0; l < n; ++l)
                        acc += ginv(k, l) *
                               (mj.at(j, l).grad(i) + mj.at(i, l).grad(j) - mj.at(i, j).grad(l));
                    ch.at(k, i, j) = 0.5 * acc;
                    for (int m = 0; m < n; ++m) {
                        double d = 0.0;
                        for (int l = 0; l < n; ++l) {
                            d += dginv_at(m, k, l) *
                                 (mj.at(j, l).grad(i) + mj.at(i, l).grad(j) - mj.at(i, j).grad(l));
                            d += ginv(k, l) * (mj.at(j, l).hess(m, i) + mj.at(i, l).hess(m, j) -
                                               mj.at(i, j).hess(m, l));
                        }
                        dch_at(m, k, i, j) = 0.5 * d;
                    }
                }
        ch_ = ch;

        r_.assign(static_cast<std::size_t>(n) * n * n * n, 0.0);
        for (int l = 0; l < n; ++l)
            for (int k = 0; k < n; ++k)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        double acc = dch_at(i, l, j, k) - dch_at(j, l, i, k);
                        for (int m = 0; m < n; ++m)
                            acc += ch.at(m, j, k) * ch.at(l, i, m) - ch.at(m, i, k) * ch.at(l, j, m);
                        at_(l, k, i, j) = acc;
                    }
    }

    int dim() const { return n_; }
    const Christoffels& christoffels() const { return ch_; }

    // component of R(d_i, d_j) d_k along d_l
    double up(int l, int k, int i, int j) const { return r_[idx(l, k, i, j)]; }

    // g(R(d_i, d_j) d_k, d_w)
    double lowered(int w, int k, int i, int j) const {
        double acc = 0.0;
        for (int l = 0; l < n_; ++l) acc += g_(w, l) * up(l, k, i, j);
        return acc;
    }

    // max |R(X,Y)Z + R(Y,Z)X + R(Z,X)Y| over coordinate triples
    double first_bianchi_residual() const {
        double worst = 0.0;
        for (int l = 0; l < n_; ++l)
            for (int k = 0; k < n_; ++k)
                for (int i = 0; i < n_; ++i)
                    for (int j = 0; j < n_; ++j) {
                        const double s = up(l, k, i, j) + up(l, i, j, k) + up(l, j, k, i);
                        worst = std::max(worst, std::abs(s));
                    }
        return worst;
    }

private:
    std::size_t idx(int l, int k, int i, int j) const {
        return ((static_cast<std::size_t>(l) * n_ + k) * n_ + i) * n_ + j;
    }
    double& at_(int l, int k, int i, int j) { return r_[idx(l, k, i, j)]; }

    int n_;
    Mat g_;
    Christoffels ch_;
    std::vector<double> r_;
};

// Closed-form Levi-Civita connection of the warped chart. Base-base blocks
// vanish except for the warped terms; mixed blocks are d(ln f); fiber-fiber
// blocks combine the intrinsic fiber connection with -g(Z,W) grad(ln f),
// whose base components are (f f_{s_i}, -f f_{t_i}) after raising the index.
inline Christoffels connection_closed_form(const WarpedChart& chart, const Vec& xi) {
    const int h = chart.h, p = chart.fiber.p, n = chart.dim();
    Christoffels ch;
    ch.n = n;
    ch.c.assign(static_cast<std::size_t>(n) * n * n, 0.0);

    const Jet2 f2 = chart.f_sq_base_jet(chart.base_point(xi));
    const double f = std::sqrt(f2.value());
    // f f_{s_i} = (f^2)_{s_i} / 2, psi_{s_i} = (f^2)_{s_i} / (2 f^2)
    Vec ffs(2 * h), psis(2 * h);
    for (int i = 0; i < 2 * h; ++i) {
        ffs[i] = 0.5 * f2.grad(i);
        psis[i] = 0.5 * f2.grad(i) / f2.value();
    }
    (void)f;

    const Vec u = chart.fiber_point(xi);
    auto U = [&](int a) { return 2 * h + a; };  // chart index of fiber coord a (0-based)

    // mixed: Gamma^{u_a}_{(base i), u_a} = psi_i
    for (int a = 0; a < p; ++a)
        for (int i = 0; i < 2 * h; ++i) {
            ch.at(U(a), i, U(a)) = psis[i];
            ch.at(U(a), U(a), i) = psis[i];
        }

    // intrinsic fiber part plus the -g(Z,W) grad(ln f) terms on the diagonal
    auto add_base_terms = [&](int a, double gaa) {
        // gaa = fiber-metric diagonal entry; -g(d_ua, d_ua) grad(ln f) has
        // components +f f_{s_i} * gaa on s_i and -f f_{t_i} * gaa on t_i.
        for (int i = 0; i < h; ++i) ch.at(i, U(a), U(a)) = gaa * ffs[i];
        for (int i = h; i < 2 * h; ++i) ch.at(i, U(a), U(a)) = -gaa * ffs[i];
    };

    switch (chart.fiber.kind) {
        case FiberKind::Sphere: {
            // Gamma^{u_b}_{u_a u_b} = -tan u_a for a < b;
            // Gamma^{u_b}_{u_a u_a} = sin u_b cos u_b prod_{b<c<a} cos^2 u_c for b < a
            for (int a = 0; a < p; ++a)
                for (int b = a + 1; b < p; ++b) {
                    ch.at(U(b), U(a), U(b)) = -std::tan(u[a]);
                    ch.at(U(b), U(b), U(a)) = -std::tan(u[a]);
                }
            for (int a = 0; a < p; ++a) {
                double prod = 1.0;
                for (int b = 0; b < a; ++b) prod *= std::cos(u[b]) * std::cos(u[b]);
                add_base_terms(a, prod);
                for (int b = 0; b < a; ++b) {
                    double tail = 1.0;
                    for (int c = b + 1; c < a; ++c) tail *= std::cos(u[c]) * std::cos(u[c]);
                    ch.at(U(b), U(a), U(a)) = std::sin(u[b]) * std::cos(u[b]) * tail;
                }
            }
            break;
        }
        case FiberKind::Hyperbolic: {
            // Gamma^{u_b}_{u_1 u_b} = coth u_1 (b >= 2);
            // Gamma^{u_b}_{u_a u_b} = -tan u_a (2 <= a < b);
            // diagonal: Gamma^{u_1}_{u_a u_a} = -sinh u_1 cosh u_1 prod cos^2,
            // Gamma^{u_b}_{u_a u_a} = sin u_b cos u_b prod (2 <= b < a)
            for (int b = 1; b < p; ++b) {
                ch.at(U(b), U(0), U(b)) = 1.0 / std::tanh(u[0]);
                ch.at(U(b), U(b), U(0)) = 1.0 / std::tanh(u[0]);
            }
            for (int a = 1; a < p; ++a)
                for (int b = a + 1; b < p; ++b) {
                    ch.at(U(b), U(a), U(b)) = -std::tan(u[a]);
                    ch.at(U(b), U(b), U(a)) = -std::tan(u[a]);
                }
            add_base_terms(0, 1.0);
            for (int a = 1; a < p; ++a) {
                double prod = 1.0;
                for (int b = 1; b < a; ++b) prod *= std::cos(u[b]) * std::cos(u[b]);
                add_base_terms(a, std::sinh(u[0]) * std::sinh(u[0]) * prod);
                ch.at(U(0), U(a), U(a)) = -std::sinh(u[0]) * std::cosh(u[0]) * prod;
                // printed lower limit b=1 double-counts the u_1 term; the sum
                // genuinely starts at the second fiber coordinate
                for (int b = 1; b < a; ++b) {
                    double tail = 1.0;
                    for (int c = b + 1; c < a; ++c) tail *= std::cos(u[c]) * std::cos(u[c]);
                    ch.at(U(b), U(a), U(a)) = std::sin(u[b]) * std::cos(u[b]) * tail;
                }
            }
            break;
        }
        case FiberKind::Flat: {
            for (int a = 0; a < p; ++a) add_base_terms(a, 1.0);
            break;
        }
    }
    return ch;
}

// Mixed-block curvature coefficients of the warped chart: with psi = ln f,
//   R(d_{s_i}, d_{u_a}) d_{s_j} = (psi_{s_i s_j} + psi_{s_i} psi_{s_j}) d_{u_a}
//   R(d_{s_i}, d_{u_a}) d_{t_j} = (psi_{s_i t_j} + psi_{s_i} psi_{t_j}) d_{u_a}
//   R(d_{t_i}, d_{u_a}) d_{t_j} = (psi_{t_i t_j} + psi_{t_i} psi_{t_j}) d_{u_a}
struct MixedCurvature {
    Mat ss, st, tt;  // h x h coefficient arrays
};

inline MixedCurvature curvature_closed_form(const WarpedChart& chart, const Vec& st) {
    const int h = chart.h;
    const Jet2 psi = chart.psi_base_jet(st);
    MixedCurvature mc{Mat(h, h), Mat(h, h), Mat(h, h)};
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
            mc.ss(i, j) = psi.hess(i, j) + psi.grad(i) * psi.grad(j);
            mc.st(i, j) = psi.hess(i, h + j) + psi.grad(i) * psi.grad(h + j);
            mc.tt(i, j) = psi.hess(h + i, h + j) + psi.grad(h + i) * psi.grad(h + j);
        }
    return mc;
}

// g(grad phi, grad phi) = g^{ij} d_i phi d_j phi for a scalar jet phi.
inline double grad_sq_norm(const Jet2& phi, const Mat& g) {
    const int n = g.rows();
    if (phi.vars() != n) throw std::invalid_argument("grad_sq_norm dimension mismatch");
    Vec dphi(n);
    for (int i = 0; i < n; ++i) dphi[i] = phi.grad(i);
    const Lu lu(g);
    if (lu.singular()) throw DegenerateMetric(0.0);
    return dot(dphi, lu.solve(dphi));
}

}  // namespace warpcheck
