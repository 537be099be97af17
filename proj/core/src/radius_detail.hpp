#ifndef CE_SRC_RADIUS_DETAIL_HPP
#define CE_SRC_RADIUS_DETAIL_HPP

#include <cstdint>
#include <functional>

#include "flatten.hpp"

namespace ce::detail {

enum class TailKind {
    Nonpositive, // exactly <= 0 beyond start (compact support, negative ftsq)
    Negative,    // certified sign negative beyond start
    Positive,    // f exceeds any tolerance arbitrarily far out: no finite r
    Uncertain,
};

struct TailInfo {
    TailKind kind;
    double start = 0.0;
};

TailInfo tail_analysis(const FlatForm& ff);

// Largest s with profile(s) > tol on [0, scan_end] refined to width <= tol;
// 0 when the profile never exceeds tol. The tail info must certify the region
// beyond scan_end.
double last_above_tol(const std::function<double(double)>& profile,
                      double scan_end, double step, double tol,
                      const TailInfo& tail);

// Orientation-sampled radius of positivity for non-radial expressions.
double radius_sampled(const ExprPtr& f, double r_max, double tol,
                      int orientations, std::uint64_t seed);

// Unit directions: first axis, then seeded Gaussian samples.
std::vector<std::vector<double>> sample_directions(int dim, int count,
                                                   std::uint64_t seed);

} // namespace ce::detail

#endif
