#include <doctest.h>

#include <warpcheck/ambient.hpp>
#include <warpcheck/chart.hpp>
#include <warpcheck/connection.hpp>
#include <warpcheck/fiber.hpp>

#include <cmath>
#include <numbers>

using namespace warpcheck;

namespace {

// h = 1, f^2 = s^2 - t^2 (the reference quasi-minimal-free warp)
WarpSqField hyperbolic_warp() {
    return [](const std::vector<Jet2>& b) { return b[0] * b[0] - b[1] * b[1]; };
}

// pullback of the model-space flat metric through chart_to_model; independent
// oracle for the closed-form chart metric
Mat model_pullback(const Fiber& fiber, const Vec& u) {
    const std::vector<Jet2> w = fiber.model_jets(u, fiber.p, 0);
    const Ambient amb = fiber.model_ambient();
    Mat g(fiber.p, fiber.p);
    for (int a = 0; a < fiber.p; ++a)
        for (int b = 0; b < fiber.p; ++b) {
            double acc = 0.0;
            for (std::size_t c = 0; c < w.size(); ++c)
                acc += amb.signs[c] * w[c].grad(a) * w[c].grad(b);
            g(a, b) = acc;
        }
    return g;
}

double quadric_residual(const Fiber& fiber, const Vec& u) {
    const std::vector<double> w = fiber.chart_to_model(u);
    const Ambient amb = fiber.model_ambient();
    double q = 0.0;
    for (std::size_t c = 0; c < w.size(); ++c) q += amb.signs[c] * w[c] * w[c];
    const double target = fiber.kind == FiberKind::Hyperbolic ? -1.0 : 1.0;
    return std::abs(q - target);
}

void check_chart_against_model(const Fiber& fiber, const Vec& u) {
    if (fiber.kind != FiberKind::Flat) CHECK(quadric_residual(fiber, u) < 1e-14);
    const Mat pb = model_pullback(fiber, u);
    const std::vector<double> diag = fiber.metric_diag(u);
    for (int a = 0; a < fiber.p; ++a)
        for (int b = 0; b < fiber.p; ++b) {
            const double want = a == b ? diag[a] : 0.0;
            CHECK(pb(a, b) == doctest::Approx(want).scale(1.0).epsilon(1e-13));
        }
}

MetricJets fiber_only_metric(const Fiber& fiber, const Vec& u) {
    MetricJets mj;
    mj.n = fiber.p;
    mj.g.assign(static_cast<std::size_t>(fiber.p) * fiber.p, Jet2::constant(0.0, fiber.p));
    const std::vector<Jet2> diag = fiber.metric_diag_jets(u, fiber.p, 0);
    for (int a = 0; a < fiber.p; ++a) mj.at(a, a) = diag[a];
    return mj;
}

}  // namespace

TEST_CASE("neutral pairing: skewness and anti-compatibility are exact") {
    const Ambient amb = Ambient::neutral_plane(3);
    const Vec v{0.3, -1.7, 2.9, 0.11, 5.3, -0.77};
    const Vec w{1.9, 0.23, -4.1, 3.7, 0.002, 8.5};
    CHECK(amb.pairing(amb.structure(v), v) == 0.0);
    CHECK(amb.pairing(amb.structure(v), amb.structure(w)) == -amb.pairing(v, w));
    CHECK(amb.structure(amb.structure(v)) == v);
    CHECK(amb.pairing(v, w) == doctest::Approx((0.11 * 3.7 + 5.3 * 0.002 - 0.77 * 8.5) -
                                               (0.3 * 1.9 - 1.7 * 0.23 - 2.9 * 4.1))
                                   .epsilon(1e-14));
}

TEST_CASE("chart_to_model lands on the quadric and pulls back the chart metric") {
    check_chart_against_model({FiberKind::Sphere, 1}, {0.7});
    check_chart_against_model({FiberKind::Sphere, 2}, {0.5, -0.9});
    check_chart_against_model({FiberKind::Sphere, 3}, {0.4, 0.8, -1.1});
    check_chart_against_model({FiberKind::Hyperbolic, 1}, {1.3});
    check_chart_against_model({FiberKind::Hyperbolic, 2}, {0.8, 0.6});
    check_chart_against_model({FiberKind::Hyperbolic, 3}, {1.1, -0.5, 0.9});
    check_chart_against_model({FiberKind::Flat, 2}, {1.5, -0.7});
}

TEST_CASE("sphere chart spot value") {
    const Fiber f{FiberKind::Sphere, 2};
    const std::vector<double> w = f.chart_to_model({std::numbers::pi / 6, 0.0});
    CHECK(w[0] == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));
    CHECK(w[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(w[2] == 0.0);
}

TEST_CASE("christoffel_numeric reproduces hand values on the unit 2-sphere") {
    const Fiber f{FiberKind::Sphere, 2};
    const Vec u{0.6, 1.1};
    const Christoffels ch = christoffel_numeric(fiber_only_metric(f, u));
    // metric du1^2 + cos^2 u1 du2^2: Gamma^1_22 = sin u1 cos u1, Gamma^2_12 = -tan u1
    CHECK(ch.at(0, 1, 1) == doctest::Approx(std::sin(0.6) * std::cos(0.6)).epsilon(1e-13));
    CHECK(ch.at(1, 0, 1) == doctest::Approx(-std::tan(0.6)).epsilon(1e-13));
    CHECK(ch.at(0, 0, 0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
    CHECK(ch.at(1, 1, 1) == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
}

TEST_CASE("riemann on the unit 2-sphere has sectional curvature 1") {
    const Fiber f{FiberKind::Sphere, 2};
    const Vec u{0.6, 1.1};
    const RiemannTensor rt(fiber_only_metric(f, u));
    // R(d1, d2) d2 = cos^2 u1 d1 for constant curvature +1
    const double c2 = std::cos(0.6) * std::cos(0.6);
    CHECK(rt.up(0, 1, 0, 1) == doctest::Approx(c2).epsilon(1e-12));
    // K = g(R(d1,d2)d2, d1) / (g11 g22 - g12^2)
    CHECK(rt.lowered(0, 1, 0, 1) / c2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rt.first_bianchi_residual() < 1e-12);
}

TEST_CASE("closed-form connection agrees with the numeric route on all fiber kinds") {
    const double r2 = std::sqrt(2.0);
    // case-1 style warp with h=2: S = s1 + r2 t2, T = t1 + r2 s2
    WarpSqField w2 = [r2](const std::vector<Jet2>& b) {
        const Jet2 S = b[0] + r2 * b[3];
        const Jet2 T = b[2] + r2 * b[1];
        return S * S - T * T;
    };
    struct Probe {
        WarpedChart chart;
        Vec xi;
    };
    std::vector<Probe> probes;
    probes.push_back({{2, {FiberKind::Sphere, 2}, w2}, {1.0, 0.2, 0.1, 0.3, 0.4, -0.6}});
    probes.push_back({{2, {FiberKind::Sphere, 3}, w2}, {1.2, -0.1, 0.2, 0.4, 0.3, 0.5, -0.7}});
    probes.push_back({{1, {FiberKind::Hyperbolic, 1}, hyperbolic_warp()}, {2.0, 1.0, 0.8}});
    probes.push_back({{1, {FiberKind::Hyperbolic, 2}, hyperbolic_warp()}, {2.0, 0.5, 0.9, 0.7}});
    probes.push_back({{1, {FiberKind::Hyperbolic, 3}, hyperbolic_warp()}, {1.7, -0.4, 1.2, 0.5, -0.8}});
    probes.push_back({{2, {FiberKind::Flat, 2}, w2}, {1.0, 0.2, 0.1, 0.3, 1.1, -0.9}});

    for (const auto& pr : probes) {
        const MetricJets mj = pr.chart.metric_jets(pr.xi);
        const Christoffels num = christoffel_numeric(mj);
        const Christoffels cf = connection_closed_form(pr.chart, pr.xi);
        const int n = pr.chart.dim();
        const double tol = 1e-9 * (1.0 + num.max_abs());
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    CHECK(std::abs(cf.at(k, i, j) - num.at(k, i, j)) < tol);
    }
}

TEST_CASE("warped chart spot values: mixed Christoffel and curvature coefficient") {
    WarpedChart chart{1, {FiberKind::Hyperbolic, 1}, hyperbolic_warp()};
    const Vec xi{2.0, 1.0, 0.8};
    // Gamma^u_{s u} = psi_s = 2/3 at (s,t) = (2,1)
    const Christoffels cf = connection_closed_form(chart, xi);
    CHECK(cf.at(2, 0, 2) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(cf.at(2, 1, 2) == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));

    // coefficient of d_u in R(d_s, d_u) d_s is psi_ss + psi_s^2 = -1/9
    const RiemannTensor rt(chart.metric_jets(xi));
    CHECK(rt.up(2, 0, 0, 2) == doctest::Approx(-1.0 / 9.0).epsilon(1e-12));
    const MixedCurvature mc = curvature_closed_form(chart, {2.0, 1.0});
    CHECK(mc.ss(0, 0) == doctest::Approx(-1.0 / 9.0).epsilon(1e-14));
    CHECK(mc.tt(0, 0) == doctest::Approx(-4.0 / 9.0).epsilon(1e-14));
    CHECK(mc.st(0, 0) == doctest::Approx(4.0 / 9.0 + (2.0 / 3.0) * (-1.0 / 3.0)).epsilon(1e-13));
    CHECK(rt.up(2, 1, 1, 2) == doctest::Approx(mc.tt(0, 0)).epsilon(1e-12));
    CHECK(rt.up(2, 1, 0, 2) == doctest::Approx(mc.st(0, 0)).epsilon(1e-12));
    CHECK(rt.first_bianchi_residual() < 1e-10);
}

TEST_CASE("mixed curvature coefficients match the numeric Riemann tensor, other components vanish") {
    const double r2 = std::sqrt(2.0);
    WarpSqField w2 = [r2](const std::vector<Jet2>& b) {
        const Jet2 S = b[0] + r2 * b[3];
        const Jet2 T = b[2] + r2 * b[1];
        return S * S - T * T;
    };
    WarpedChart chart{2, {FiberKind::Sphere, 2}, w2};
    const Vec xi{1.0, 0.2, 0.1, 0.3, 0.4, -0.6};
    const int h = 2;
    const RiemannTensor rt(chart.metric_jets(xi));
    const MixedCurvature mc = curvature_closed_form(chart, chart.base_point(xi));
    for (int a = 0; a < 2; ++a) {
        const int ua = 2 * h + a;
        for (int i = 0; i < h; ++i)
            for (int j = 0; j < h; ++j) {
                CHECK(rt.up(ua, j, i, ua) == doctest::Approx(mc.ss(i, j)).scale(1.0).epsilon(1e-11));
                CHECK(rt.up(ua, h + j, i, ua) ==
                      doctest::Approx(mc.st(i, j)).scale(1.0).epsilon(1e-11));
                CHECK(rt.up(ua, h + j, h + i, ua) ==
                      doctest::Approx(mc.tt(i, j)).scale(1.0).epsilon(1e-11));
                // R(d_{s_i}, d_{u_a}) d_{s_j} has no components off d_{u_a}
                for (int l = 0; l < chart.dim(); ++l)
                    if (l != ua)
                        CHECK(std::abs(rt.up(l, j, i, ua)) < 1e-11);
            }
    }
}

TEST_CASE("grad_sq_norm against hand values") {
    WarpedChart chart{1, {FiberKind::Hyperbolic, 1}, hyperbolic_warp()};
    const Vec xi{2.0, 1.0, 0.8};
    // |grad ln f|^2 = -psi_s^2 + psi_t^2 = -4/9 + 1/9 = -1/3
    CHECK(grad_sq_norm(chart.psi_jet(xi), chart.metric(xi)) ==
          doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
    // |grad f|^2 = f^2 |grad ln f|^2 = -1 (matches the causal type of the warp direction)
    CHECK(grad_sq_norm(chart.f_jet(xi), chart.metric(xi)) == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("degenerate metrics are a detected verdict carrying the determinant") {
    MetricJets mj;
    mj.n = 2;
    mj.g.assign(4, Jet2::constant(1.0, 2));  // rank-1 metric
    CHECK_THROWS_AS((void)christoffel_numeric(mj), DegenerateMetric);
    try {
        (void)christoffel_numeric(mj);
    } catch (const DegenerateMetric& e) {
        CHECK(e.det == 0.0);
    }
}

TEST_CASE("warped chart domain predicate") {
    WarpedChart chart{1, {FiberKind::Hyperbolic, 1}, hyperbolic_warp()};
    CHECK(chart.in_domain({2.0, 1.0, 0.8}));
    CHECK_FALSE(chart.in_domain({1.0, 1.0, 0.8}));   // f^2 = 0 below margin
    CHECK_FALSE(chart.in_domain({2.0, 1.0, 0.01}));  // u_1 below hyperbolic margin
    CHECK_FALSE(chart.in_domain({2.0, 1.0, 2.5}));   // u_1 above box
}
