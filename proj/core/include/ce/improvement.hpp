#ifndef CE_IMPROVEMENT_HPP
#define CE_IMPROVEMENT_HPP

#include <utility>

#include "ce/expr.hpp"
#include "ce/indicator_geometry.hpp"

namespace ce {

enum class ImprovementSide { Spatial, Fourier, Dual };

struct ImprovementParams {
    double alpha = 0.0;
    double c_scale = 1.0;
    ImprovementSide side = ImprovementSide::Spatial;
    double theta = 0.5;
};

/// F_c(x) = f(cx) + alpha h_S(cx), alpha from the clearance margin with safety
/// factor theta, c chosen so F_c(0) = FT(F_c)(0). Requires measure(S) > 1 and
/// strict negativity of f on (S-S) ∩ {|x| >= r}.
std::pair<ExprPtr, ImprovementParams> improve_spatial(const ExprPtr& f,
                                                      const BallUnion& s,
                                                      double r, double theta,
                                                      const GridSpec& grid = {});

/// F_c(x) = f(cx) - alpha |FT(1_S)(cx)|^2; requires the transform of f to be
/// strictly positive on S - S.
std::pair<ExprPtr, ImprovementParams> improve_fourier(const ExprPtr& f,
                                                      const BallUnion& s,
                                                      double theta,
                                                      const GridSpec& grid = {});

/// F = f - c FT(f), 0 < c < 1; shrinks the certified radius when the
/// transform is strictly positive on [0, r]. Refuses (dual-vanishes or
/// c-too-large) when the hypotheses fail, as they do for optimal inputs.
ExprPtr sharpen_via_dual(const ExprPtr& f, double r, double c,
                         const GridSpec& grid = {});

/// Largest admissible c for sharpen_via_dual on a grid scan, scaled by theta;
/// 0 when no positive c passes.
double dual_sharpening_c(const ExprPtr& f, double r, double theta,
                         const GridSpec& grid = {});

} // namespace ce

#endif
