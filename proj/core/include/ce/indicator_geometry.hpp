#ifndef CE_INDICATOR_GEOMETRY_HPP
#define CE_INDICATOR_GEOMETRY_HPP

#include <complex>
#include <functional>
#include <optional>
#include <span>

#include "ce/ball_union.hpp"
#include "ce/expr.hpp"

namespace ce {

/// Fourier transform of the indicator of S at xi; conjugate-symmetric,
/// equals measure(S) at xi = 0.
std::complex<double> indicator_ft(const BallUnion& s, std::span<const double> xi);

/// Intersection volume of two radius-rho balls with center distance d;
/// 0 once d >= 2 rho.
double pair_intersection_volume(int n, double rho, double d);

/// h(x) = mu(S ∩ (S + x)); even, supported in S - S.
double autocorr_eval(const BallUnion& s, std::span<const double> x);

/// |FT of indicator|^2 = FT of h; real, nonnegative.
double autocorr_ft_eval(const BallUnion& s, std::span<const double> xi);

struct ClearanceReport {
    double margin = 0.0;   // sup of f over sampled T = (S-S) ∩ {|x| >= r}
    Point worst_point;
    double h_max = 0.0;    // max of h over the same samples
    double grid_density = 0.0;
    std::size_t samples = 0;
};

/// Samples T over the k^2 difference balls at the given per-axis grid density.
/// margin < 0 means f is strictly negative on every sample.
ClearanceReport clearance(const BallUnion& s, const ExprPtr& f, double r,
                          double grid_density);

/// Like clearance but reports the minimum of f over all of S - S (no radius
/// cut); used for the Fourier-side positivity hypothesis.
struct DualClearanceReport {
    double min_value = 0.0;
    Point worst_point;
    std::size_t samples = 0;
};
DualClearanceReport difference_set_min(const BallUnion& s, const ExprPtr& f,
                                       double grid_density);

/// A certified zero-free interval of lengths.
struct GapInterval {
    double lo;
    double hi;
};

/// Returns the lowest certified zero-free interval [lo, hi] with lo >= t_min
/// and hi - lo >= width, or nothing if no such interval can be certified.
using GapOracle = std::function<std::optional<GapInterval>(double t_min, double width)>;

/// Builds a union of radius-eps balls along the first coordinate axis whose
/// pairwise difference lengths all fall in oracle-certified zero-free
/// intervals and whose measure exceeds target_measure.
BallUnion witness_chain(int n, const GapOracle& oracle, double eps,
                        double target_measure);

} // namespace ce

#endif
