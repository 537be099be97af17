#include <cmath>
#include <vector>

#include <doctest.h>

#include "ce/improvement.hpp"
#include "ce/zero_analysis.hpp"

using namespace ce;

namespace {

ExprPtr triangle() { return Expr::autocorr(BallUnion(1, 0.5, {{0.0}})); }

// Sparse-zero candidate: strictly positive transform, single sign change of f
// near 0.94, long zero-free run behind it.
ExprPtr candidate() {
    return Expr::sum({{1.0, Expr::eigen(1, 0)}, {0.2, Expr::eigen(1, 1)}});
}

double origin(const ExprPtr& f) {
    std::vector<double> o(f->dim(), 0.0);
    return evaluate(f, o);
}

BallUnion witness_for(const ExprPtr& f, ProfileSide side) {
    ZeroReport z = extract_zeros(f, side, 3.2, 1e-8, 1e-3);
    return witness_chain(1, make_gap_oracle(z, 1e-6), 0.4, 1.1);
}

} // namespace

TEST_CASE("argument validation shared by both operators") {
    ExprPtr f = candidate();
    BallUnion thin(1, 0.45, {{0.0}}); // measure 0.9 <= 1
    CHECK_THROWS_AS(improve_spatial(f, thin, 1.0, 0.5), PreconditionError);
    CHECK_THROWS_AS(improve_fourier(f, thin, 0.5), PreconditionError);
    BallUnion ok(1, 0.6, {{0.0}});
    CHECK_THROWS_AS(improve_spatial(f, ok, 1.0, 1.5), InvalidInputError);
    CHECK_THROWS_AS(improve_spatial(f, ok, -1.0, 0.5), InvalidInputError);
    CHECK_THROWS_AS(improve_fourier(f, ok, 0.0), InvalidInputError);
    BallUnion wrong_dim(2, 0.7, {{0.0, 0.0}});
    CHECK_THROWS_AS(improve_spatial(f, wrong_dim, 1.0, 0.5), InvalidInputError);
    CHECK_THROWS_AS(improve_spatial(f, ok, 0.0, 0.5), InvalidInputError);
}

TEST_CASE("spatial improvement shrinks the radius and renormalizes") {
    ExprPtr f = candidate();
    GridSpec gs;
    gs.r_max = 3.2;
    CEReport base = verify_ce(f, gs);
    REQUIRE(base.finite_radius);
    double r = base.r;

    BallUnion s = witness_for(f, ProfileSide::Function);
    REQUIRE(measure(s) > 1.1);
    auto [g, params] = improve_spatial(f, s, r, 0.5);
    CHECK(params.alpha > 0.0);
    CHECK(params.side == ImprovementSide::Spatial);
    // normalization: F(0) = FT(F)(0) even though f itself is unnormalized
    CHECK(origin(g) == doctest::Approx(origin(fourier_exact(g))).epsilon(1e-10));
    CEReport rep = verify_ce(g, gs);
    CHECK(rep.passed);
    CHECK(rep.r <= r / params.c_scale + 1e-3);
}

TEST_CASE("fourier improvement shrinks the radius and renormalizes") {
    ExprPtr f = candidate();
    GridSpec gs;
    gs.r_max = 3.2;
    CEReport base = verify_ce(f, gs);
    REQUIRE(base.finite_radius);
    double r = base.r;

    BallUnion s = witness_for(f, ProfileSide::Transform);
    REQUIRE(measure(s) > 1.1);
    auto [g, params] = improve_fourier(f, s, 0.5);
    CHECK(params.alpha > 0.0);
    CHECK(params.side == ImprovementSide::Fourier);
    CHECK(origin(g) == doctest::Approx(origin(fourier_exact(g))).epsilon(1e-10));
    CEReport rep = verify_ce(g, gs);
    CHECK(rep.passed);
    CHECK(rep.r <= r / params.c_scale + 1e-3);
}

TEST_CASE("fourier improvement refuses when the transform vanishes on S - S") {
    // transform of e0 - 0.2 e1 is e0 + 0.2 e1, which crosses zero near 0.94,
    // inside the difference set [-1.2, 1.2]
    ExprPtr f = Expr::sum({{1.0, Expr::eigen(1, 0)}, {-0.2, Expr::eigen(1, 1)}});
    BallUnion s(1, 0.6, {{0.0}});
    CHECK_THROWS_AS(improve_fourier(f, s, 0.5), PreconditionError);
}

TEST_CASE("dual sharpening refuses optimal input") {
    CHECK_THROWS_AS(sharpen_via_dual(triangle(), 1.0, 0.5), RefusedError);
    CHECK(dual_sharpening_c(triangle(), 1.0, 0.9) == 0.0);
    CHECK_THROWS_AS(sharpen_via_dual(triangle(), 1.0, 1.5), InvalidInputError);
    CHECK_THROWS_AS(sharpen_via_dual(triangle(), 0.0, 0.5), InvalidInputError);
    CHECK_THROWS_AS(dual_sharpening_c(triangle(), 1.0, 2.0), InvalidInputError);
}

TEST_CASE("dual sharpening improves a strictly suboptimal candidate") {
    ExprPtr f = candidate();
    GridSpec gs;
    gs.r_max = 3.2;
    CEReport base = verify_ce(f, gs);
    REQUIRE(base.finite_radius);
    REQUIRE(base.fhat_min > 0.0);
    double c = dual_sharpening_c(f, base.r, 0.9, gs);
    REQUIRE(c > 0.0);
    ExprPtr g = sharpen_via_dual(f, base.r, c, gs);
    CEReport rep = verify_ce(g, gs);
    CHECK(rep.finite_radius);
    CHECK(rep.r < base.r);
}
