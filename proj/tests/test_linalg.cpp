#include <doctest.h>

#include <warpcheck/linalg.hpp>

using namespace warpcheck;

TEST_CASE("LU solve against hand-checked 3x3 system") {
    Mat a(3, 3);
    a(0, 0) = 2; a(0, 1) = 1; a(0, 2) = -1;
    a(1, 0) = -3; a(1, 1) = -1; a(1, 2) = 2;
    a(2, 0) = -2; a(2, 1) = 1; a(2, 2) = 2;
    const Lu lu(a);
    CHECK_FALSE(lu.singular());
    CHECK(lu.det() == doctest::Approx(-1.0).epsilon(1e-14));  // expansion by minors
    const Vec x = lu.solve(Vec{8.0, -11.0, -3.0});
    CHECK(x[0] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(x[1] == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(x[2] == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("pivoting handles zero leading diagonal") {
    Mat a(2, 2);
    a(0, 0) = 0; a(0, 1) = 1;
    a(1, 0) = 1; a(1, 1) = 0;
    const Lu lu(a);
    CHECK_FALSE(lu.singular());
    CHECK(lu.det() == doctest::Approx(-1.0));
    const Vec x = lu.solve(Vec{3.0, 7.0});
    CHECK(x[0] == 7.0);
    CHECK(x[1] == 3.0);
}

TEST_CASE("singular matrices are reported, not solved") {
    Mat a(2, 2);
    a(0, 0) = 1; a(0, 1) = 2;
    a(1, 0) = 2; a(1, 1) = 4;
    const Lu lu(a);
    CHECK(lu.singular());
    CHECK(lu.det() == 0.0);
    CHECK_THROWS_AS((void)lu.solve(Vec{1.0, 1.0}), std::runtime_error);
}

TEST_CASE("inverse reproduces the identity") {
    Mat a(4, 4);
    const double vals[4][4] = {{4, -2, 1, 3}, {0, 5, -1, 2}, {1, 0, 3, -2}, {2, 1, 0, 6}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = vals[i][j];
    const Mat inv = Lu(a).inverse();
    const Mat prod = a * inv;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(prod(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("matrix-vector and transpose plumbing") {
    Mat a(2, 3);
    a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 3;
    a(1, 0) = 4; a(1, 1) = 5; a(1, 2) = 6;
    const Vec y = a * Vec{1.0, 0.0, -1.0};
    CHECK(y == Vec{-2.0, -2.0});
    const Mat t = a.transposed();
    CHECK(t.rows() == 3);
    CHECK(t(2, 1) == 6);
    CHECK(dot(Vec{1, 2}, Vec{3, 4}) == 11.0);
}
