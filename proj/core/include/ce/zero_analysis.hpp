#ifndef CE_ZERO_ANALYSIS_HPP
#define CE_ZERO_ANALYSIS_HPP

#include <map>
#include <utility>
#include <vector>

#include "ce/expr.hpp"
#include "ce/indicator_geometry.hpp"

namespace ce {

enum class ZeroKind { Crossing, Touching, IntervalStart, IntervalEnd };
enum class ProfileSide { Function, Transform };

struct ZeroRecord {
    double length;
    ZeroKind kind;
};

struct ZeroReport {
    int dim = 0;
    ProfileSide side = ProfileSide::Function;
    std::vector<ZeroRecord> roots; // lengths strictly increasing
    double r_max = 0.0;
    double tol = 0.0;
    double scan_step = 0.0;
    bool tail_zero_free = false; // no further roots beyond r_max (certified)
};

struct GapStats {
    double max_gap = 0.0;
    double max_gap_location = 0.0; // left endpoint of the widest gap
    double min_gap = 0.0;
    double window_c = 0.0;
    std::vector<std::pair<double, double>> window_profile; // (start, min gap in window)
    std::map<double, int> close_pair_counts; // threshold -> consecutive pairs closer than it
    std::map<std::pair<double, double>, int> neighborhood_counts; // (spacing, eps) -> count
};

/// Root lengths of the radial profile of f (or of its transform), with
/// crossing / touching / vanishing-interval classification.
ZeroReport extract_zeros(const ExprPtr& f, ProfileSide side, double r_max,
                         double tol, double scan_step);

/// Finite-range gap statistics over a root-length list.
GapStats gap_statistics(const ZeroReport& z, double window_c,
                        const std::vector<double>& thresholds);

/// Number of root lengths within eps of {m * spacing : m >= 0} up to r_max.
int neighborhood_count(const ZeroReport& z, double spacing, double eps);

/// Synthetic report whose only zero-free length gaps are [0, eps] and
/// [2^k - eps, 2^k + eps]; drives the expected witness-chain failure.
ZeroReport dyadic_gap_fixture(double eps, int k_max, double r_max);

/// Minimum of the transform over lengths [0, 1.05 r] and its location.
std::pair<double, double> dual_smallest_root_check(const ExprPtr& f, double r,
                                                   double tol);

/// Gap oracle backed by a zero report: certified zero-free intervals are the
/// complement of the reported roots within [0, r_max] (extended to infinity
/// when the report certifies a zero-free tail). Each interval is shrunk by
/// margin on both sides.
GapOracle make_gap_oracle(const ZeroReport& z, double margin = 0.0);

} // namespace ce

#endif
