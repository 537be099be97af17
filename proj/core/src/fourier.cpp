#include <algorithm>
#include <cmath>
#include <vector>

#include "ce/expr.hpp"
#include "flatten.hpp"

namespace ce {

ExprPtr fourier_exact(const ExprPtr& f) {
    const auto& node = f->node();
    int n = f->dim();
    if (const auto* e = std::get_if<Expr::Eigen>(&node)) {
        if (e->k % 2 == 0) return f;
        return Expr::scaled(-1.0, f);
    }
    if (const auto* s = std::get_if<Expr::Sum>(&node)) {
        std::vector<std::pair<double, ExprPtr>> terms;
        terms.reserve(s->terms.size());
        for (const auto& [c, t] : s->terms) terms.emplace_back(c, fourier_exact(t));
        return Expr::sum(std::move(terms));
    }
    if (const auto* d = std::get_if<Expr::Dilation>(&node)) {
        double cn = std::pow(d->c, n);
        return Expr::scaled(1.0 / cn, Expr::dilated(1.0 / d->c, fourier_exact(d->inner)));
    }
    if (const auto* a = std::get_if<Expr::Autocorr>(&node))
        return Expr::ft_squared(a->balls);
    if (const auto* q = std::get_if<Expr::FtSquared>(&node))
        return Expr::autocorr(q->balls);
    return std::get<Expr::Fourier>(node).inner; // involution on even functions
}

namespace {

// Radius beyond which every term of the flattened expression is negligible;
// also collects the radii where compact atoms have kinks, for panel splits.
void truncation_info(const detail::FlatForm& ff, double* s_max,
                     std::vector<double>* kinks) {
    double m = 1.0;
    for (const auto& t : ff.terms) {
        if (t.kind == detail::FlatTerm::Kind::Eigen) {
            // |L_k| e^{-pi (cs)^2} < eps once (cs)^2 is a few times k + const
            double need = std::sqrt((30.0 + 3.0 * t.k) / M_PI) / t.scale;
            m = std::max(m, need);
        } else if (t.kind == detail::FlatTerm::Kind::Autocorr) {
            double sup = (t.balls->center_diameter() + 2.0 * t.balls->radius()) / t.scale;
            m = std::max(m, sup);
            if (kinks) {
                kinks->push_back(sup);
                kinks->push_back(2.0 * t.balls->radius() / t.scale);
            }
        } else {
            // |FT(1_S)|^2 decays polynomially; integrate far enough out that
            // the envelope k^2 rho^(n-1) / (pi^2 t^(n+1)) is small.
            double rho = t.balls->radius();
            double k2 = (double)(t.balls->count() * t.balls->count());
            double env_at = std::pow(k2 * std::pow(rho, ff.dim - 1) * 1e8, 1.0 / (ff.dim + 1));
            m = std::max(m, env_at / t.scale);
        }
    }
    *s_max = m;
}

} // namespace

double hankel_oracle(const ExprPtr& f, double t, const QuadratureConfig& cfg) {
    if (t < 0.0) throw InvalidInputError("hankel_oracle: negative length");
    if (!is_radial(f)) throw PreconditionError("hankel_oracle: expression is not radial");
    int n = f->dim();

    detail::FlatForm ff = detail::flatten(f);
    double s_max = 1.0;
    std::vector<double> kinks;
    truncation_info(ff, &s_max, &kinks);

    auto profile = [&](double s) { return evaluate_radial(f, s); };

    std::function<double(double)> integrand;
    double prefactor;
    if (t < 1e-9) {
        // Surface-area form of the n-dimensional integral at the origin.
        prefactor = n * unit_ball_volume(n);
        integrand = [&, n](double s) { return profile(s) * std::pow(s, n - 1); };
    } else if (n == 1) {
        prefactor = 2.0;
        integrand = [&, t](double s) { return profile(s) * std::cos(2.0 * M_PI * s * t); };
    } else {
        double nu = 0.5 * n - 1.0;
        prefactor = 2.0 * M_PI * std::pow(t, -nu);
        integrand = [&, t, nu, n](double s) {
            return profile(s) * bessel_j(nu, 2.0 * M_PI * s * t) * std::pow(s, 0.5 * n);
        };
    }

    // Split at compact-support kinks and by oscillation wavelength.
    std::vector<double> cuts{0.0, s_max};
    for (double k : kinks)
        if (k > 0.0 && k < s_max) cuts.push_back(k);
    double panel = std::min(1.0, 0.5 / std::max(t, 0.5));
    for (double x = panel; x < s_max; x += panel) cuts.push_back(x);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    // Tolerances below ~1e-9 push the oscillatory high-dimension integrands
    // under the GK15 roundoff floor and subdivision never converges.
    QuadratureConfig panel_cfg = cfg;
    panel_cfg.abs_tol = std::max(cfg.abs_tol, 1e-9) / (double)cuts.size();
    panel_cfg.rel_tol = std::max(cfg.rel_tol, 1e-10);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += integrate(integrand, cuts[i], cuts[i + 1], panel_cfg);
    return prefactor * total;
}

} // namespace ce
