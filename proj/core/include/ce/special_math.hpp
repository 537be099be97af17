#ifndef CE_SPECIAL_MATH_HPP
#define CE_SPECIAL_MATH_HPP

#include <functional>

#include "ce/errors.hpp"

namespace ce {

struct QuadratureConfig {
    int max_subdivisions = 2000;
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
};

/// Volume of the unit ball in R^n, V_n = pi^(n/2) / Gamma(n/2 + 1).
double unit_ball_volume(int n);

/// Bessel function of the first kind J_nu(x) for half-integer orders
/// nu ∈ {-1/2, 0, 1/2, 1, ...} and x >= 0.
double bessel_j(double order, double x);

/// Generalized Laguerre polynomial L_k^(alpha)(y) by the three-term recurrence.
double laguerre(int k, double alpha, double y);

/// Regularized incomplete beta function I_x(a, b).
double regularized_incomplete_beta(double a, double b, double x);

/// Adaptive Gauss-Kronrod integration of fn over [lo, hi].
/// Throws ConvergenceError (carrying the best estimate) if the subdivision
/// budget is exhausted before the tolerance is met.
double integrate(const std::function<double(double)>& fn, double lo, double hi,
                 const QuadratureConfig& cfg = {});

} // namespace ce

#endif
