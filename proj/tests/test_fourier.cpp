#include <cmath>
#include <variant>

#include <doctest.h>

#include "ce/expr.hpp"

using namespace ce;

namespace {

ExprPtr triangle() { return Expr::autocorr(BallUnion(1, 0.5, {{0.0}})); }

} // namespace

TEST_CASE("eigen atoms transform with eigenvalue (-1)^k") {
    // Gaussian is self-dual
    ExprPtr g = Expr::eigen(3, 0);
    ExprPtr gh = fourier_exact(g);
    for (double s : {0.0, 0.4, 1.1})
        CHECK(evaluate_radial(gh, s) == doctest::Approx(evaluate_radial(g, s)).epsilon(1e-14));
    // odd atom flips sign
    ExprPtr e1 = Expr::eigen(1, 1);
    ExprPtr e1h = fourier_exact(e1);
    for (double s : {0.0, 0.7})
        CHECK(evaluate_radial(e1h, s) == doctest::Approx(-evaluate_radial(e1, s)).epsilon(1e-14));
}

TEST_CASE("dilation rule checked against the numeric transform") {
    ExprPtr f = Expr::dilated(2.0, Expr::eigen(1, 1));
    ExprPtr fh = fourier_exact(f);
    for (int i = 0; i < 10; ++i) {
        double t = 0.15 + 0.3 * i;
        CHECK(std::abs(evaluate_radial(fh, t) - hankel_oracle(f, t)) < 1e-8);
    }
}

TEST_CASE("transform is an involution on even functions") {
    ExprPtr f = Expr::sum({{0.7, Expr::eigen(2, 0)},
                           {-0.3, Expr::eigen(2, 3)},
                           {0.1, Expr::dilated(1.5, Expr::eigen(2, 2))}});
    ExprPtr ff = fourier_exact(fourier_exact(f));
    for (double s : {0.0, 0.5, 1.3, 2.2})
        CHECK(evaluate_radial(ff, s) == doctest::Approx(evaluate_radial(f, s)).epsilon(1e-13));
    // autocorr <-> squared indicator transform
    ExprPtr tri = triangle();
    CHECK(std::holds_alternative<Expr::FtSquared>(fourier_exact(tri)->node()));
    CHECK(std::holds_alternative<Expr::Autocorr>(fourier_exact(fourier_exact(tri))->node()));
    // a raw Fourier node unwraps
    ExprPtr wrapped = Expr::fourier_node(tri);
    CHECK(std::holds_alternative<Expr::Autocorr>(fourier_exact(wrapped)->node()));
}

TEST_CASE("hankel oracle spot values") {
    // Gaussian self-duality at t = 0.7
    CHECK(hankel_oracle(Expr::eigen(1, 0), 0.7) ==
          doctest::Approx(0.21451397306126195).epsilon(1e-9));
    // even atom is a (+1)-eigenfunction
    ExprPtr e2 = Expr::eigen(1, 2);
    for (double t : {0.3, 0.9, 1.6})
        CHECK(std::abs(hankel_oracle(e2, t) - evaluate_radial(e2, t)) < 1e-6);
    // triangle transform sinc^2 vanishes at integer lengths
    CHECK(std::abs(hankel_oracle(triangle(), 1.0)) < 1e-6);
    // value at t = 0 equals the integral of f, here mu(S) squared... the
    // transform of the triangle at 0 is its total mass, 1
    CHECK(hankel_oracle(triangle(), 0.0) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK_THROWS_AS(hankel_oracle(triangle(), -0.5), InvalidInputError);
    BallUnion two(2, 0.4, {{0.0, 0.0}, {1.0, 0.0}});
    CHECK_THROWS_AS(hankel_oracle(Expr::autocorr(two), 1.0), PreconditionError);
}
