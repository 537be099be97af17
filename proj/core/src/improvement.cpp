#include "ce/improvement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "radius_detail.hpp"

namespace ce {

namespace {

void check_common(const ExprPtr& f, const BallUnion& s, double theta) {
    if (f->dim() != s.dim()) throw InvalidInputError("improvement: dimension mismatch");
    if (!(theta > 0.0 && theta <= 1.0))
        throw InvalidInputError("improvement: theta must lie in (0, 1]");
    if (measure(s) <= 1.0)
        throw PreconditionError("improvement: insufficient measure (need mu(S) > 1)");
}

double origin_value(const ExprPtr& f) {
    std::vector<double> origin(f->dim(), 0.0);
    return evaluate(f, origin);
}

} // namespace

std::pair<ExprPtr, ImprovementParams> improve_spatial(const ExprPtr& f,
                                                      const BallUnion& s,
                                                      double r, double theta,
                                                      const GridSpec& grid) {
    check_common(f, s, theta);
    if (r <= 0.0) throw InvalidInputError("improve_spatial: r must be > 0");

    ClearanceReport cl = clearance(s, f, r, 0.0);
    if (!(cl.margin < 0.0))
        throw PreconditionError(
            "improve_spatial: no clearance (f not strictly negative on the "
            "difference set beyond r)");

    // Raising f by alpha h_S keeps it nonpositive beyond r as long as
    // alpha h_max stays below the negativity margin.
    double alpha = cl.h_max > 0.0 ? theta * (-cl.margin) / cl.h_max : theta * (-cl.margin);

    double mu = measure(s);
    double f0 = origin_value(f);
    double fhat0 = origin_value(fourier_exact(f));
    double den = f0 + alpha * mu;        // F(0)
    double num = fhat0 + alpha * mu * mu; // FT(F)(0)
    if (!(den > 0.0) || !(num > 0.0))
        throw RefusedError("improve_spatial: alpha too large (normalization leaves the cone)");
    double c = std::pow(num / den, 1.0 / f->dim());

    ExprPtr lifted = Expr::sum({{1.0, f}, {alpha, Expr::autocorr(s)}});
    ImprovementParams params;
    params.alpha = alpha;
    params.c_scale = c;
    params.side = ImprovementSide::Spatial;
    params.theta = theta;
    (void)grid;
    return {dilate(lifted, c), params};
}

std::pair<ExprPtr, ImprovementParams> improve_fourier(const ExprPtr& f,
                                                      const BallUnion& s,
                                                      double theta,
                                                      const GridSpec& grid) {
    check_common(f, s, theta);

    ExprPtr fhat = fourier_exact(f);
    DualClearanceReport dc = difference_set_min(s, fhat, 0.0);
    if (!(dc.min_value > 0.0))
        throw PreconditionError(
            "improve_fourier: transform of f is not strictly positive on S - S");

    double mu = measure(s);
    double alpha = theta * dc.min_value / mu;
    double f0 = origin_value(f);
    double fhat0 = origin_value(fhat);
    double den = f0 - alpha * mu * mu; // F(0)
    double num = fhat0 - alpha * mu;   // FT(F)(0)
    if (!(den > 0.0) || !(num > 0.0))
        throw RefusedError("improve_fourier: alpha too large (origin value driven nonpositive)");
    double c = std::pow(num / den, 1.0 / f->dim());

    ExprPtr lowered = Expr::sum({{1.0, f}, {-alpha, Expr::ft_squared(s)}});
    ImprovementParams params;
    params.alpha = alpha;
    params.c_scale = c;
    params.side = ImprovementSide::Fourier;
    params.theta = theta;
    (void)grid;
    return {dilate(lowered, c), params};
}

namespace {

// Largest c with c f <= fhat on the scan range, plus positivity of fhat on
// [0, r]; shared by sharpen_via_dual (validation) and dual_sharpening_c.
struct DualScan {
    double fhat_min_inner; // min of fhat over [0, r]
    double c_max;          // inf of fhat/f over points where f > tol
};

DualScan dual_scan(const ExprPtr& f, double r, const GridSpec& grid) {
    ExprPtr fhat = fourier_exact(f);
    double r_max = grid.r_max > 0.0 ? grid.r_max : std::max(6.0, 2.0 * r);
    auto dirs = detail::sample_directions(
        f->dim(), is_radial(f) && is_radial(fhat) ? 1 : std::max(1, grid.orientations),
        grid.seed);
    DualScan out{std::numeric_limits<double>::infinity(),
                 std::numeric_limits<double>::infinity()};
    long count = (long)std::ceil(r_max / grid.step);
    for (long i = 0; i <= count; ++i) {
        double s = std::min(r_max, i * grid.step);
        for (const auto& d : dirs) {
            double fv = evaluate_at_radius(f, s, d);
            double hv = evaluate_at_radius(fhat, s, d);
            if (s <= r) out.fhat_min_inner = std::min(out.fhat_min_inner, hv);
            if (fv > grid.tol) out.c_max = std::min(out.c_max, hv / fv);
        }
    }
    if (!std::isfinite(out.c_max)) out.c_max = 0.0;
    return out;
}

} // namespace

ExprPtr sharpen_via_dual(const ExprPtr& f, double r, double c, const GridSpec& grid) {
    if (r <= 0.0) throw InvalidInputError("sharpen_via_dual: r must be > 0");
    if (!(c > 0.0 && c < 1.0))
        throw InvalidInputError("sharpen_via_dual: c must lie in (0, 1)");

    DualScan scan = dual_scan(f, r, grid);
    if (scan.fhat_min_inner <= grid.tol)
        throw RefusedError("sharpen_via_dual: dual vanishes (transform has a zero at or "
                           "below r, no strict sharpening possible)");
    if (c > scan.c_max)
        throw RefusedError("sharpen_via_dual: c too large (c f exceeds the transform "
                           "somewhere, so the new transform would go negative)");

    return Expr::sum({{1.0, f}, {-c, Expr::fourier_node(f)}});
}

double dual_sharpening_c(const ExprPtr& f, double r, double theta, const GridSpec& grid) {
    if (r <= 0.0) throw InvalidInputError("dual_sharpening_c: r must be > 0");
    if (!(theta > 0.0 && theta <= 1.0))
        throw InvalidInputError("dual_sharpening_c: theta must lie in (0, 1]");
    DualScan scan = dual_scan(f, r, grid);
    if (scan.fhat_min_inner <= grid.tol) return 0.0;
    double c = theta * scan.c_max;
    if (!(c > 0.0)) return 0.0;
    return std::min(c, 1.0 - 1e-12);
}

} // namespace ce
