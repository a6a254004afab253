#include <doctest.h>

#include <warpcheck/paracomplex.hpp>

#include <cmath>

using namespace warpcheck;

TEST_CASE("product rule (a+jb)(s+jt) = (as+bt) + j(at+bs)") {
    // dyadic inputs keep every operation exact
    const ParaComplex v{2.0, 3.0}, w{4.0, 5.0};
    const ParaComplex p = v * w;
    CHECK(p.re == 23.0);  // 2*4 + 3*5
    CHECK(p.jm == 22.0);  // 2*5 + 3*4
}

TEST_CASE("null cone carries zero divisors") {
    const ParaComplex v{1.0, 1.0}, w{1.0, -1.0};
    const ParaComplex p = v * w;
    CHECK(p.re == 0.0);
    CHECK(p.jm == 0.0);
    CHECK(is_null(v));
    CHECK(is_null(w));
    CHECK(modulus_sq(v) == 0.0);
}

TEST_CASE("conjugation is a ring involution") {
    const ParaComplex v{0.5, -2.25}, w{3.0, 0.125};
    CHECK(conj(conj(v)) == v);
    CHECK(conj(v + w) == conj(v) + conj(w));
    CHECK(conj(v * w) == conj(v) * conj(w));
}

TEST_CASE("squared modulus re^2 - jm^2 is multiplicative") {
    const ParaComplex v{3.0, 2.0}, w{5.0, 4.0};
    CHECK(modulus_sq(v) == 5.0);
    CHECK(modulus_sq(w) == 9.0);
    CHECK(modulus_sq(v * w) == 45.0);
}

TEST_CASE("identify maps to (x..., y...) and intertwines j with the block swap") {
    const ParaVector v{{1.0, 4.0}, {2.0, 5.0}, {3.0, 6.0}};
    const std::vector<double> flat = identify(v);
    CHECK(flat == std::vector<double>{1.0, 2.0, 3.0, 4.0, 5.0, 6.0});
    CHECK(unidentify(flat) == v);

    ParaVector jv = v;
    const ParaComplex j{0.0, 1.0};
    for (auto& c : jv) c = j * c;
    const std::vector<double> swapped = identify(jv);
    CHECK(swapped == std::vector<double>{4.0, 5.0, 6.0, 1.0, 2.0, 3.0});
}

TEST_CASE("pseudo_dot is minus-first-half, plus-second-half") {
    const double r2 = std::sqrt(2.0);
    const std::vector<double> v{1.0, 0.0, 0.0, r2};  // -1 + 2 = 1
    CHECK(pseudo_dot(v, v) == doctest::Approx(1.0).epsilon(1e-14));

    const std::vector<double> u{1.0, 2.0, 3.0, 4.0}, w{5.0, 6.0, 7.0, 8.0};
    CHECK(pseudo_dot(u, w) == (3.0 * 7.0 + 4.0 * 8.0) - (1.0 * 5.0 + 2.0 * 6.0));
    CHECK(euclid_dot(u, w) == 5.0 + 12.0 + 21.0 + 32.0);
}
