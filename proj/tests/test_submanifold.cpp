#include <doctest.h>

#include <warpcheck/catalog.hpp>
#include <warpcheck/immersion.hpp>
#include <warpcheck/submanifold.hpp>

#include <cmath>

using namespace warpcheck;

namespace {

// positive-definite sanity fixture: the unit circle in the Euclidean plane
Immersion unit_circle() {
    Immersion im;
    im.ambient = Ambient::euclidean(2);
    im.chart_dim = 1;
    im.components = [](const Vec& xi) {
        const Jet2 th = Jet2::seed(xi[0], 0, 1);
        return std::vector<Jet2>{cos(th), sin(th)};
    };
    return im;
}

// h = 1, p = 1 hyperbolic-fiber case for hand-checked spot values
ImmersionCase small_case2() { return ImmersionCase::case2(1, 1, {1.0}, {0.0}); }

}  // namespace

TEST_CASE("unit circle: umbilical with |H| = 1, S_sigma = 1") {
    const FramedPoint fp = frame_or_throw(unit_circle(), {0.7});
    const SecondFF s = second_ff(fp);
    CHECK(fp.gram(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
    const Vec h = mean_curvature(fp, s);
    CHECK(fp.pairing(h, h) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(umbilic_residual(fp, s) < 1e-13);
    CHECK(s_sigma(fp, s) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(sigma_tangency_residual(fp, s) < 1e-14);
    CHECK(max_abs(h) > 1e-3);  // not minimal
}

TEST_CASE("linear graphs are totally geodesic") {
    Immersion im;
    im.ambient = Ambient::neutral_plane(2);
    im.chart_dim = 2;
    im.components = [](const Vec& xi) {
        std::vector<Jet2> q = seed_all(xi);
        return std::vector<Jet2>{q[0], q[1], q[0] + 2.0 * q[1], q[1] - q[0]};
    };
    const FramedPoint fp = frame_or_throw(im, {0.3, -1.2});
    const SecondFF s = second_ff(fp);
    CHECK(s.max_abs() == 0.0);
    CHECK(max_abs(mean_curvature(fp, s)) == 0.0);
}

TEST_CASE("hand-checked spot values on the small hyperbolic-fiber case at (2,1)") {
    const ImmersionCase ic = small_case2();
    const Immersion im = ic.immersion();
    const Vec xi{2.0, 1.0, 0.8};
    const FramedPoint fp = frame_or_throw(im, xi);
    const SecondFF s = second_ff(fp);
    const Split sp = Split::warped(1, 1);

    // pullback metric diag(-1, 1, f^2), f^2 = 3
    CHECK(fp.gram(0, 0) == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(fp.gram(1, 1) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(fp.gram(2, 2) == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(std::abs(fp.gram(0, 1)) + std::abs(fp.gram(0, 2)) + std::abs(fp.gram(1, 2)) < 1e-12);

    // S_sigma = 2 * 1 * |grad ln f|_2 = -2/3; off-diagonal block -1/3
    CHECK(s_sigma(fp, s) == doctest::Approx(-2.0 / 3.0).epsilon(1e-12));
    const SigmaBlocks blocks = sigma_blocks(fp, s, sp);
    CHECK(blocks.dd == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(blocks.dpdp == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(blocks.ddp == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
    CHECK(blocks.additivity_residual < 1e-13);

    // minimal: H = 0 (holds for all three S/H/E catalog families)
    CHECK(max_abs(mean_curvature(fp, s)) < 1e-13);

    // PR property and shape-operator identities
    CHECK(check_fp_zero(fp) < 1e-13);
    CHECK(structure_decomposition_residual(fp) < 1e-13);
    const Lemma33Residuals l33 = lemma33_check(fp, s, sp);
    CHECK(l33.adjoint < 1e-12);
    CHECK(l33.symmetry == 0.0);  // single fiber direction: no pairs
    CHECK(warped_characterization_check(fp, s, sp, ic.chart().psi_jet(xi)) < 1e-12);

    // sigma(ds, du) = psi_t F du with psi_t = -1/3: check one raw component set
    const Vec fdu = f_of(fp, fp.tangent(2));
    const Vec sigma_su = s.at(0, 2);
    for (int c = 0; c < 4; ++c)
        CHECK(sigma_su[c] == doctest::Approx(-fdu[c] / 3.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("equality case of the optimal inequality on catalog references") {
    for (CaseTag tag : {CaseTag::Case1, CaseTag::Case2, CaseTag::Case3, CaseTag::Case4Corrected}) {
        const ImmersionCase ic = ImmersionCase::reference(tag);
        const Immersion im = ic.immersion();
        const WarpedChart ch = ic.chart();
        const Split sp = Split::warped(ic.h, ic.p);
        const Vec xi = tag == CaseTag::Case2   ? Vec{2.0, 1.0, 0.8, 0.4}
                       : tag == CaseTag::Case3 ? Vec{1.0, 0.2, 0.1, 0.3, 0.7}
                       : tag == CaseTag::Case4Corrected
                           ? Vec{2.0, 0.5, 0.9}
                           : Vec{1.0, 0.2, 0.1, 0.3, 0.4, -0.6};
        CAPTURE(case_name(tag));
        const FramedPoint fp = frame_or_throw(im, xi);
        const SecondFF s = second_ff(fp);
        const EqualityCase eq = equality_case_check(fp, s, sp, ch.psi_jet(xi));
        CHECK(eq.gap < 1e-12);
        CHECK(eq.sigma_dd < 1e-12);
        CHECK(eq.sigma_dpdp < 1e-12);

        const InequalityResult ineq = inequality_check(fp, s, sp, ch.psi_jet(xi));
        CHECK(ineq.fiber_spacelike);
        CHECK(ineq.nu_term == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
        CHECK(std::abs(ineq.margin) < 1e-12);  // least codimension: equality holds

        const Prop34Residuals p34 = prop34_checks(fp, s, sp);
        CHECK(p34.dd_component < 1e-12);
        CHECK(p34.umbilic_form < 1e-12);
    }
}

TEST_CASE("totally geodesic re-embedding keeps the margin, nu becomes nontrivial") {
    const ImmersionCase ic = ImmersionCase::reference(CaseTag::Case1);
    const Immersion big = extend_ambient(ic.immersion(), 1);
    CHECK(big.ambient.m == ic.ambient_m() + 1);
    const Vec xi{1.0, 0.2, 0.1, 0.3, 0.4, -0.6};
    const FramedPoint fp = frame_or_throw(big, xi);
    const SecondFF s = second_ff(fp);
    const Split sp = Split::warped(ic.h, ic.p);
    // codimension now exceeds p, so nu is nontrivial but sigma has no nu part
    CHECK(big.ambient.dim - fp.n > ic.p);
    CHECK(sigma_nu_d_norm(fp, s, sp) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    const InequalityResult ineq = inequality_check(fp, s, sp, ic.chart().psi_jet(xi));
    CHECK(std::abs(ineq.margin) < 1e-12);
    CHECK(check_fp_zero(fp) < 1e-12);
}

TEST_CASE("Gauss and Codazzi residuals on catalog spot points") {
    struct Probe {
        CaseTag tag;
        Vec xi;
    };
    for (const Probe& pr : {Probe{CaseTag::Case2, {2.0, 1.0, 0.8, 0.4}},
                            Probe{CaseTag::Case1, {1.0, 0.2, 0.1, 0.3, 0.4, -0.6}},
                            Probe{CaseTag::Case3, {1.0, 0.2, 0.1, 0.3, 0.7}},
                            Probe{CaseTag::Case4Corrected, {2.0, 0.5, 0.9}}}) {
        CAPTURE(case_name(pr.tag));
        const ImmersionCase ic = ImmersionCase::reference(pr.tag);
        const GaussCodazzi gc = gauss_codazzi_residual(ic.immersion(), ic.chart(), pr.xi);
        CHECK(gc.gauss < 1e-8);
        CHECK(gc.codazzi < 1e-7);
    }
}

TEST_CASE("seeded quadratic perturbation breaks the PR property and the equality case") {
    const ImmersionCase ic = ImmersionCase::reference(CaseTag::Case1);
    const Immersion bad = perturb_quadratic(ic.immersion(), 20240817u, 0.05);
    const Vec xi{1.0, 0.2, 0.1, 0.3, 0.4, -0.6};
    const FramedPoint fp = frame_or_throw(bad, xi);
    const SecondFF s = second_ff(fp);
    CHECK(check_fp_zero(fp) > 1e-3);
    const EqualityCase eq =
        equality_case_check(fp, s, Split::warped(ic.h, ic.p), ic.chart().psi_jet(xi));
    CHECK(eq.gap > 1e-3);
}

TEST_CASE("degenerate pullback is a verdict with the determinant attached") {
    const ImmersionCase ic = ImmersionCase::reference(CaseTag::Case4Printed);
    const Immersion im = ic.immersion();
    for (const Vec& xi : {Vec{2.0, 0.5, 0.9}, Vec{1.5, -0.3, 0.2}, Vec{3.0, 1.0, -1.7}}) {
        const FrameResult fr = frame(im, xi);
        REQUIRE(fr.status == FrameStatus::Degenerate);
        CHECK(std::abs(fr.det_gram) <= 1e-12);
    }
}

TEST_CASE("frame rejects out-of-domain points before evaluating") {
    const ImmersionCase ic = small_case2();
    const FrameResult fr = frame(ic.immersion(), {1.0, 1.0, 0.8});  // f^2 = 0
    CHECK(fr.status == FrameStatus::OutOfDomain);
    CHECK_THROWS_AS((void)frame_or_throw(ic.immersion(), {1.0, 1.0, 0.8}), std::domain_error);
}
