#include <cmath>

#include <doctest.h>

#include "ce/expr.hpp"

using namespace ce;

namespace {

ExprPtr triangle() { return Expr::autocorr(BallUnion(1, 0.5, {{0.0}})); }

} // namespace

TEST_CASE("triangle certificate verifies at radius 1") {
    GridSpec grid;
    grid.tol = 1e-12;
    CEReport rep = verify_ce(triangle(), grid);
    CHECK(rep.passed);
    CHECK(rep.finite_radius);
    CHECK(rep.f0 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.fhat0 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(rep.r - 1.0) < 1e-6);
    CHECK(std::abs(rep.density_bound - 1.0) < 1e-9);
    CHECK(rep.fhat_min >= -grid.tol);
}

TEST_CASE("gaussian has no finite radius") {
    CEReport rep = verify_ce(Expr::eigen(2, 0));
    CHECK_FALSE(rep.passed);
    CHECK_FALSE(rep.finite_radius);
    CHECK_FALSE(rep.failure.empty());
}

TEST_CASE("negated gaussian fails on the origin value") {
    CEReport rep = verify_ce(Expr::scaled(-1.0, Expr::eigen(1, 0)));
    CHECK_FALSE(rep.passed);
    CHECK_FALSE(rep.failure.empty());
}

TEST_CASE("dilated triangle verifies at the scaled radius") {
    CEReport rep = verify_ce(dilate(triangle(), 2.0));
    CHECK(rep.finite_radius);
    CHECK(std::abs(rep.r - 0.5) < 1e-6);
}

TEST_CASE("report is deterministic") {
    GridSpec grid;
    CEReport a = verify_ce(triangle(), grid);
    CEReport b = verify_ce(triangle(), grid);
    CHECK(a.r == b.r);
    CHECK(a.f0 == b.f0);
    CHECK(a.fhat0 == b.fhat0);
    CHECK(a.fhat_min == b.fhat_min);
    CHECK(a.density_bound == b.density_bound);
    CHECK(a.passed == b.passed);
}
