#include <algorithm>
#include <cmath>
#include <limits>

#include "ce/expr.hpp"
#include "radius_detail.hpp"

namespace ce {

namespace {

double auto_r_max(const detail::FlatForm& ff) {
    double m = 6.0;
    for (const auto& t : ff.terms) {
        if (t.kind == detail::FlatTerm::Kind::Autocorr)
            m = std::max(m, (t.balls->center_diameter() + 2.0 * t.balls->radius()) / t.scale + 1.0);
    }
    return m;
}

} // namespace

CEReport verify_ce(const ExprPtr& f, const GridSpec& grids) {
    CEReport rep;
    rep.grid = grids;
    int n = f->dim();
    std::vector<double> origin(n, 0.0);
    rep.f0 = evaluate(f, origin);
    ExprPtr fhat = fourier_exact(f);
    rep.fhat0 = evaluate(fhat, origin);

    detail::FlatForm ff = detail::flatten(f);
    double r_max = grids.r_max > 0.0 ? grids.r_max : auto_r_max(ff);
    double scale = std::max({1.0, std::abs(rep.f0), std::abs(rep.fhat0)});
    double tol = grids.tol * scale;

    bool radial = is_radial(f);
    try {
        if (radial) {
            rep.r = radius_of_positivity(f, r_max, tol);
        } else {
            rep.r = detail::radius_sampled(f, r_max, tol, grids.orientations, grids.seed);
        }
        rep.finite_radius = rep.r > 0.0;
        if (!rep.finite_radius) rep.failure = "profile never exceeds tol (no certified radius)";
    } catch (const NumericError& e) {
        rep.finite_radius = false;
        rep.r = std::numeric_limits<double>::infinity();
        rep.failure = e.what();
    }

    // Minimum of the transform over the verification grid.
    bool fhat_radial = is_radial(fhat);
    auto dirs = detail::sample_directions(n, fhat_radial ? 1 : std::max(1, grids.orientations),
                                          grids.seed);
    double fmin = std::numeric_limits<double>::infinity();
    long count = (long)std::ceil(r_max / grids.step);
    for (long i = 0; i <= count; ++i) {
        double s = std::min(r_max, i * grids.step);
        for (const auto& d : dirs) fmin = std::min(fmin, evaluate_at_radius(fhat, s, d));
    }
    rep.fhat_min = fmin;

    if (rep.finite_radius && std::isfinite(rep.r) && rep.r > 0.0)
        rep.density_bound = density_bound(n, rep.r);

    rep.passed = rep.finite_radius && rep.f0 > tol &&
                 std::abs(rep.f0 - rep.fhat0) <= tol && rep.fhat_min >= -tol;
    if (!rep.passed && rep.failure.empty()) {
        if (!(rep.f0 > tol)) rep.failure = "f(0) not positive";
        else if (std::abs(rep.f0 - rep.fhat0) > tol) rep.failure = "f(0) != FT(f)(0)";
        else if (rep.fhat_min < -tol) rep.failure = "transform negative on grid";
    }
    return rep;
}

} // namespace ce
