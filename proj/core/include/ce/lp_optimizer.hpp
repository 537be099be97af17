#ifndef CE_LP_OPTIMIZER_HPP
#define CE_LP_OPTIMIZER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ce/expr.hpp"

namespace ce {

struct LpGridSpec {
    int neg_points = 400;      // sign grid on [r, r_max], clustered near r
    int pos_points = 400;      // transform grid on [0, r_max], uniform
    double r_max = 0.0;        // 0: max(6, 3r)
    double delta = 1e-9;       // strict-inequality margin
    double tail_coeff_min = 1e-9; // lower bound on the leading odd coefficient
};

/// Discretized feasibility program for a fixed trial radius over eigenbasis
/// coefficients a_0..a_K, normalized to f(0) = FT(f)(0) = 1.
struct FeasibilityProblem {
    int dim = 0;
    int degree = 0;
    double trial_r = 0.0;
    std::vector<double> g_neg; // radii where f <= -delta is required
    std::vector<double> g_pos; // radii where FT(f) >= delta is required
    double delta = 0.0;
    double r_max = 0.0;
    double tail_coeff_min = 0.0;
};

FeasibilityProblem build_problem(int n, int degree, double r,
                                 const LpGridSpec& grid = {});

/// Dense exact-pivot LP feasibility (Bland's rule); returns coefficients or
/// nothing when grid-infeasible. Deterministic for identical input.
std::optional<std::vector<double>> solve_feasibility(const FeasibilityProblem& p);

struct OptimizeResult {
    double r_best = 0.0;                  // re-verified radius (authoritative)
    std::vector<double> coefficients;
    CEReport report;
    std::vector<std::pair<double, bool>> bisection_trace; // (r, feasible)
    ExprPtr function;
};

/// Bisection on the trial radius; the assembled best function is re-verified
/// with independent grids and the re-verified radius is reported.
OptimizeResult minimize_r(int n, int degree, double r_lo, double r_hi,
                          double tol, const LpGridSpec& grid = {});

/// Default bracket [0.5 V_n^(-1/n), 2 V_n^(-1/n) + 0.5], straddling the
/// known cap R(n) <= 2 V_n^(-1/n).
std::pair<double, double> default_bracket(int n);

} // namespace ce

#endif
