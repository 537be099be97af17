#include <cmath>

#include <doctest.h>

#include "ce/lp_optimizer.hpp"
#include "ce/special_math.hpp"

using namespace ce;

TEST_CASE("problem construction and validation") {
    FeasibilityProblem p = build_problem(1, 12, 1.05);
    CHECK(p.dim == 1);
    CHECK(p.degree == 12);
    CHECK(p.trial_r == 1.05);
    CHECK(p.g_neg.size() >= 2);
    CHECK(p.g_pos.size() >= 2);
    // sign grid starts at the trial radius and stays inside [r, r_max]
    CHECK(p.g_neg.front() == doctest::Approx(1.05).epsilon(1e-12));
    CHECK(p.g_neg.back() <= p.r_max + 1e-12);
    CHECK(p.g_pos.front() == 0.0);

    CHECK_THROWS_AS(build_problem(0, 12, 1.0), InvalidInputError);
    CHECK_THROWS_AS(build_problem(1, 1, 1.0), InvalidInputError);
    CHECK_THROWS_AS(build_problem(1, 12, -1.0), InvalidInputError);
    LpGridSpec bad;
    bad.neg_points = 1;
    CHECK_THROWS_AS(build_problem(1, 12, 1.0, bad), InvalidInputError);
}

TEST_CASE("feasibility above and below the attainable radius") {
    LpGridSpec grid;
    grid.neg_points = 120;
    grid.pos_points = 120;
    // r = 1.02 is above the n = 1 optimum, so a certificate exists
    auto ok = solve_feasibility(build_problem(1, 12, 1.02, grid));
    REQUIRE(ok.has_value());
    CHECK(ok->size() == 13);
    // normalization rows force f(0) = 1
    double f0 = 0.0;
    for (int k = 0; k <= 12; ++k) f0 += (*ok)[k] * laguerre(k, -0.5, 0.0);
    CHECK(f0 == doctest::Approx(1.0).epsilon(1e-6));

    // r = 0.1 in dimension 8 is far below sqrt(2): infeasible
    auto bad = solve_feasibility(build_problem(8, 12, 0.1, grid));
    CHECK_FALSE(bad.has_value());
}

TEST_CASE("solver is deterministic") {
    LpGridSpec grid;
    grid.neg_points = 80;
    grid.pos_points = 80;
    FeasibilityProblem p = build_problem(2, 10, 1.2, grid);
    auto a = solve_feasibility(p);
    auto b = solve_feasibility(p);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(*a == *b);
}

TEST_CASE("default bracket straddles the known bounds") {
    for (int n = 1; n <= 8; ++n) {
        auto [lo, hi] = default_bracket(n);
        double cap = 2.0 * std::pow(unit_ball_volume(n), -1.0 / n);
        CHECK(lo > 0.0);
        CHECK(lo < cap);
        CHECK(hi > cap);
    }
}

TEST_CASE("bisection minimizes the radius in dimension 1") {
    OptimizeResult res = minimize_r(1, 8, 0.9, 1.5, 5e-3);
    CHECK(res.report.passed);
    CHECK(res.r_best >= 0.99);
    CHECK(res.r_best <= 1.10);
    CHECK(res.coefficients.size() == 9);
    CHECK_FALSE(res.bisection_trace.empty());
    // trace endpoints: feasible at the top, infeasible below the optimum
    bool any_feasible = false;
    for (const auto& [r, feas] : res.bisection_trace) any_feasible |= feas;
    CHECK(any_feasible);
    CHECK_THROWS_AS(minimize_r(1, 8, 1.5, 0.9, 5e-3), InvalidInputError);
}
