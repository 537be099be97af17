#include <cmath>

#include <doctest.h>

#include "ce/special_math.hpp"

using namespace ce;

TEST_CASE("unit ball volume") {
    CHECK(unit_ball_volume(1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(unit_ball_volume(2) == doctest::Approx(M_PI).epsilon(1e-14));
    // pi^4 / 24
    CHECK(unit_ball_volume(8) == doctest::Approx(4.0587121264167682).epsilon(1e-14));
    // pi^12 / 12!
    CHECK(unit_ball_volume(24) == doctest::Approx(0.0019295743094039230).epsilon(1e-13));
    CHECK_THROWS_AS(unit_ball_volume(0), InvalidInputError);
    CHECK_THROWS_AS(unit_ball_volume(-3), InvalidInputError);
}

TEST_CASE("bessel_j reference values") {
    CHECK(bessel_j(0.0, 0.0) == 1.0);
    CHECK(bessel_j(1.0, 0.0) == 0.0);
    CHECK(std::abs(bessel_j(0.5, M_PI)) < 1e-12);
    CHECK(bessel_j(0.0, 0.5) == doctest::Approx(0.93846980724081290).epsilon(1e-13));
    CHECK(bessel_j(0.0, 20.0) == doctest::Approx(0.16702466434058315).epsilon(1e-12));
    // first zero of J_1
    CHECK(std::abs(bessel_j(1.0, 3.8317059702)) < 1e-9);
    CHECK(bessel_j(1.5, 7.0) == doctest::Approx(-0.19905171329249355).epsilon(1e-12));
    // recurrence regimes: moderate and large order
    CHECK(bessel_j(3.0, 14.0) == doctest::Approx(-0.17680940686509600).epsilon(1e-11));
    CHECK(bessel_j(3.0, 40.0) == doctest::Approx(-0.12614481550582080).epsilon(1e-11));
    CHECK(bessel_j(11.0, 30.0) == doctest::Approx(0.025058805137824544).epsilon(1e-10));
    CHECK(bessel_j(16.0, 13.0) == doctest::Approx(0.032724772731448533).epsilon(1e-9));
}

TEST_CASE("bessel_j domain errors") {
    CHECK_THROWS_AS(bessel_j(0.0, -1.0), InvalidInputError);
    CHECK_THROWS_AS(bessel_j(0.3, 1.0), InvalidInputError);
    CHECK_THROWS_AS(bessel_j(-1.0, 1.0), InvalidInputError);
}

TEST_CASE("laguerre polynomials") {
    CHECK(laguerre(0, -0.5, 5.0) == 1.0);
    CHECK(laguerre(1, -0.5, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    // (alpha+1)(alpha+2)/2 at y = 0
    CHECK(laguerre(2, -0.5, 0.0) == doctest::Approx(0.375).epsilon(1e-15));
    // L_2^(a)(y) = y^2/2 - (a+2) y + (a+1)(a+2)/2
    double a = 1.5, y = 0.7;
    CHECK(laguerre(2, a, y) ==
          doctest::Approx(0.5 * y * y - (a + 2.0) * y + 0.5 * (a + 1.0) * (a + 2.0))
              .epsilon(1e-14));
    CHECK_THROWS_AS(laguerre(-1, 0.0, 0.0), InvalidInputError);
}

TEST_CASE("regularized incomplete beta") {
    CHECK(regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0);
    CHECK(regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0);
    CHECK(regularized_incomplete_beta(1.0, 1.0, 0.3) == doctest::Approx(0.3).epsilon(1e-14));
    // symmetry I_x(a,b) = 1 - I_{1-x}(b,a)
    double v1 = regularized_incomplete_beta(2.5, 1.5, 0.42);
    double v2 = 1.0 - regularized_incomplete_beta(1.5, 2.5, 0.58);
    CHECK(v1 == doctest::Approx(v2).epsilon(1e-13));
    CHECK(regularized_incomplete_beta(2.0, 2.0, 0.5) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK_THROWS_AS(regularized_incomplete_beta(0.0, 1.0, 0.5), InvalidInputError);
    CHECK_THROWS_AS(regularized_incomplete_beta(1.0, 1.0, 1.5), InvalidInputError);
}

TEST_CASE("adaptive quadrature") {
    CHECK(integrate([](double) { return 1.0; }, 0.0, 2.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(integrate([](double x) { return std::exp(-M_PI * x * x); }, -8.0, 8.0) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI) ==
          doctest::Approx(2.0).epsilon(1e-10));
    CHECK(integrate([](double) { return 1.0; }, 1.0, 1.0) == 0.0);
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 0.0), InvalidInputError);
    QuadratureConfig bad;
    bad.abs_tol = 0.0;
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, bad), InvalidInputError);
    // an impossible budget must raise with the best estimate attached
    QuadratureConfig tight;
    tight.max_subdivisions = 1;
    tight.abs_tol = 1e-15;
    tight.rel_tol = 1e-15;
    try {
        integrate([](double x) { return std::cos(40.0 * x * x); }, 0.0, 10.0, tight);
        CHECK(false);
    } catch (const ConvergenceError& e) {
        CHECK(std::isfinite(e.estimate()));
        CHECK(e.error_bound() > 0.0);
    }
}
