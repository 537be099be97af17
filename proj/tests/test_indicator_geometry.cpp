#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "ce/indicator_geometry.hpp"

using namespace ce;

TEST_CASE("ball union measure") {
    CHECK(measure(BallUnion(1, 0.5, {{0.0}})) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(measure(BallUnion(2, 1.0, {{0.0, 0.0}, {2.5, 0.0}, {5.0, 0.0}})) ==
          doctest::Approx(3.0 * M_PI).epsilon(1e-14));
    CHECK(measure(BallUnion(8, 0.9, {std::vector<double>(8, 0.0)})) ==
          doctest::Approx(4.0587121264167682 * std::pow(0.9, 8)).epsilon(1e-13));
    // overlapping balls are rejected at construction
    CHECK_THROWS_AS(BallUnion(1, 0.5, {{0.0}, {0.7}}), InvalidInputError);
}

TEST_CASE("indicator transform of an interval") {
    BallUnion s(1, 0.5, {{0.0}});
    std::vector<double> xi0{0.0};
    CHECK(indicator_ft(s, xi0).real() == doctest::Approx(measure(s)).epsilon(1e-13));
    for (double t : {0.3, 0.8, 1.7}) {
        std::vector<double> xi{t};
        CHECK(indicator_ft(s, xi).real() ==
              doctest::Approx(std::sin(M_PI * t) / (M_PI * t)).epsilon(1e-12));
        CHECK(std::abs(indicator_ft(s, xi).imag()) < 1e-12);
    }
    std::vector<double> xi1{1.0};
    CHECK(std::abs(indicator_ft(s, xi1)) < 1e-12);
}

TEST_CASE("pair intersection volume") {
    CHECK(pair_intersection_volume(3, 0.7, 0.0) ==
          doctest::Approx((4.0 / 3.0) * M_PI * std::pow(0.7, 3)).epsilon(1e-13));
    CHECK(pair_intersection_volume(1, 0.6, 0.5) == doctest::Approx(0.7).epsilon(1e-13));
    // lens volume of two unit spheres at distance 1: 5 pi / 12
    CHECK(pair_intersection_volume(3, 1.0, 1.0) ==
          doctest::Approx(1.3089969389957472).epsilon(1e-12));
    CHECK(pair_intersection_volume(2, 0.5, 1.0) == 0.0);
    CHECK(pair_intersection_volume(2, 0.5, 3.0) == 0.0);
}

TEST_CASE("autocorrelation evaluation") {
    BallUnion s(1, 0.5, {{0.0}});
    std::vector<double> x{0.25};
    CHECK(autocorr_eval(s, x) == doctest::Approx(0.75).epsilon(1e-13));
    std::vector<double> origin{0.0};
    CHECK(autocorr_eval(s, origin) == doctest::Approx(measure(s)).epsilon(1e-13));
    std::vector<double> far{5.0};
    CHECK(autocorr_eval(s, far) == 0.0);
    // evenness on a two-ball union
    BallUnion two(2, 0.4, {{0.0, 0.0}, {1.3, 0.2}});
    std::vector<double> p{0.6, -0.1}, pm{-0.6, 0.1};
    CHECK(autocorr_eval(two, p) == doctest::Approx(autocorr_eval(two, pm)).epsilon(1e-13));
    // beyond the difference-set diameter the autocorrelation vanishes
    double reach = two.center_diameter() + 2.0 * two.radius();
    std::vector<double> out{reach + 0.1, 0.0};
    CHECK(autocorr_eval(two, out) == 0.0);
}

TEST_CASE("autocorrelation transform") {
    BallUnion s(1, 0.5, {{0.0}});
    std::vector<double> xi1{1.0};
    CHECK(std::abs(autocorr_ft_eval(s, xi1)) < 1e-12);
    std::vector<double> xi0{0.0};
    CHECK(autocorr_ft_eval(s, xi0) == doctest::Approx(measure(s) * measure(s)).epsilon(1e-13));
    BallUnion two(2, 0.4, {{0.0, 0.0}, {1.3, 0.2}});
    for (double t : {0.2, 0.9, 2.3}) {
        std::vector<double> xi{t, 0.5 * t};
        CHECK(autocorr_ft_eval(two, xi) >= 0.0);
    }
}

TEST_CASE("clearance on the triangle admits no witness") {
    ExprPtr tri = Expr::autocorr(BallUnion(1, 0.5, {{0.0}}));
    BallUnion s(1, 0.5, {{0.0}});
    ClearanceReport cl = clearance(s, tri, 1.0, 0.0);
    // T = (S-S) ∩ {|x| >= 1} = {±1} and f(1) = 0: margin not negative
    CHECK(cl.margin >= -1e-12);
    CHECK(cl.samples > 0);
}

TEST_CASE("difference-set minimum flags transform zeros") {
    // transform of the triangle is sinc^2, zero at length 1 inside S - S
    ExprPtr tri = Expr::autocorr(BallUnion(1, 0.5, {{0.0}}));
    ExprPtr ft = fourier_exact(tri);
    BallUnion s(1, 0.5, {{0.0}});
    DualClearanceReport dc = difference_set_min(s, ft, 0.0);
    CHECK(dc.min_value <= 1e-10);
    // the gaussian transform is strictly positive everywhere
    DualClearanceReport pos = difference_set_min(s, Expr::eigen(1, 0), 0.0);
    CHECK(pos.min_value > 0.0);
}
