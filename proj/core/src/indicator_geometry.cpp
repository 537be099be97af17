#include "ce/indicator_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace ce {

namespace {

double norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

// Radial transform of a single ball indicator: (rho/t)^(n/2) J_{n/2}(2 pi rho t).
double single_ball_ft(int n, double rho, double t) {
    if (t < 1e-9) return unit_ball_volume(n) * std::pow(rho, n);
    return std::pow(rho / t, 0.5 * n) * bessel_j(0.5 * n, 2.0 * M_PI * rho * t);
}

} // namespace

std::complex<double> indicator_ft(const BallUnion& s, std::span<const double> xi) {
    if ((int)xi.size() != s.dim()) throw InvalidInputError("indicator_ft: dimension mismatch");
    double t = norm(xi);
    double radial = single_ball_ft(s.dim(), s.radius(), t);
    std::complex<double> phase_sum(0.0, 0.0);
    for (const auto& c : s.centers()) {
        double dot = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) dot += xi[i] * c[i];
        phase_sum += std::exp(std::complex<double>(0.0, -2.0 * M_PI * dot));
    }
    return phase_sum * radial;
}

double pair_intersection_volume(int n, double rho, double d) {
    if (rho <= 0.0) throw InvalidInputError("pair_intersection_volume: rho must be > 0");
    if (d < 0.0) throw InvalidInputError("pair_intersection_volume: negative distance");
    double vball = unit_ball_volume(n) * std::pow(rho, n);
    if (d == 0.0) return vball;
    if (d >= 2.0 * rho) return 0.0;
    double u = d / (2.0 * rho);
    double x = 1.0 - u * u;
    // Two equal hypersphere caps of height rho - d/2.
    return vball * regularized_incomplete_beta(0.5 * (n + 1.0), 0.5, x);
}

double autocorr_eval(const BallUnion& s, std::span<const double> x) {
    if ((int)x.size() != s.dim()) throw InvalidInputError("autocorr_eval: dimension mismatch");
    const auto& centers = s.centers();
    double acc = 0.0;
    std::vector<double> diff(s.dim());
    for (const auto& cj : centers) {
        for (const auto& ck : centers) {
            double d2 = 0.0;
            for (int i = 0; i < s.dim(); ++i) {
                double v = cj[i] - ck[i] - x[i];
                d2 += v * v;
            }
            acc += pair_intersection_volume(s.dim(), s.radius(), std::sqrt(d2));
        }
    }
    return acc;
}

double autocorr_ft_eval(const BallUnion& s, std::span<const double> xi) {
    return std::norm(indicator_ft(s, xi));
}

namespace {

// Visit a per-axis lattice of spacing `density` inside the radius-(2 rho) ball
// around each pairwise center difference.
template <typename Visit>
void sample_difference_set(const BallUnion& s, double density, Visit&& visit) {
    int n = s.dim();
    double rr = 2.0 * s.radius();
    const auto& centers = s.centers();
    long half = (long)std::floor(rr / density);
    std::vector<long> idx(n, -half);
    for (std::size_t j = 0; j < centers.size(); ++j) {
        for (std::size_t k = 0; k < centers.size(); ++k) {
            std::vector<double> base(n);
            for (int i = 0; i < n; ++i) base[i] = centers[j][i] - centers[k][i];
            std::fill(idx.begin(), idx.end(), -half);
            while (true) {
                std::vector<double> p(n);
                double off2 = 0.0;
                for (int i = 0; i < n; ++i) {
                    double off = idx[i] * density;
                    p[i] = base[i] + off;
                    off2 += off * off;
                }
                if (off2 <= rr * rr) visit(p);
                int axis = 0;
                while (axis < n && ++idx[axis] > half) {
                    idx[axis] = -half;
                    ++axis;
                }
                if (axis == n) break;
            }
        }
    }
}

} // namespace

ClearanceReport clearance(const BallUnion& s, const ExprPtr& f, double r,
                          double grid_density) {
    if (f->dim() != s.dim()) throw InvalidInputError("clearance: dimension mismatch");
    if (grid_density <= 0.0) grid_density = 2.0 * s.radius() / 50.0;
    ClearanceReport rep;
    rep.grid_density = grid_density;
    rep.margin = -std::numeric_limits<double>::infinity();
    sample_difference_set(s, grid_density, [&](const std::vector<double>& p) {
        double len = norm(p);
        if (len < r) return;
        double v = evaluate(f, p);
        if (v > rep.margin) {
            rep.margin = v;
            rep.worst_point = p;
        }
        rep.h_max = std::max(rep.h_max, autocorr_eval(s, p));
        ++rep.samples;
    });
    if (rep.samples == 0)
        throw PreconditionError("clearance: empty region (all difference balls inside radius r)");
    return rep;
}

DualClearanceReport difference_set_min(const BallUnion& s, const ExprPtr& f,
                                       double grid_density) {
    if (f->dim() != s.dim()) throw InvalidInputError("difference_set_min: dimension mismatch");
    if (grid_density <= 0.0) grid_density = 2.0 * s.radius() / 50.0;
    DualClearanceReport rep;
    rep.min_value = std::numeric_limits<double>::infinity();
    sample_difference_set(s, grid_density, [&](const std::vector<double>& p) {
        double v = evaluate(f, p);
        if (v < rep.min_value) {
            rep.min_value = v;
            rep.worst_point = p;
        }
        ++rep.samples;
    });
    return rep;
}

} // namespace ce
