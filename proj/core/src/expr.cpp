#include "ce/expr.hpp"

#include <cmath>

#include "ce/indicator_geometry.hpp"
#include "flatten.hpp"

namespace ce {

ExprPtr Expr::eigen(int n, int k) {
    if (n < 1) throw InvalidInputError("Expr::eigen: dimension must be >= 1");
    if (k < 0) throw InvalidInputError("Expr::eigen: degree must be >= 0");
    return std::make_shared<Expr>(n, Eigen{k});
}

ExprPtr Expr::sum(std::vector<std::pair<double, ExprPtr>> terms) {
    if (terms.empty()) throw InvalidInputError("Expr::sum: empty term list");
    int n = terms.front().second->dim();
    std::vector<std::pair<double, ExprPtr>> flat;
    flat.reserve(terms.size());
    for (auto& [c, t] : terms) {
        if (t->dim() != n) throw InvalidInputError("Expr::sum: dimension mismatch");
        if (const auto* inner = std::get_if<Sum>(&t->node())) {
            for (const auto& [ci, ti] : inner->terms) flat.emplace_back(c * ci, ti);
        } else {
            flat.emplace_back(c, std::move(t));
        }
    }
    if (flat.size() == 1 && flat.front().first == 1.0) return flat.front().second;
    return std::make_shared<Expr>(n, Sum{std::move(flat)});
}

ExprPtr Expr::scaled(double coeff, ExprPtr f) {
    return sum({{coeff, std::move(f)}});
}

ExprPtr Expr::dilated(double c, ExprPtr f) {
    if (c <= 0.0) throw InvalidInputError("Expr::dilated: factor must be > 0");
    if (c == 1.0) return f;
    if (const auto* inner = std::get_if<Dilation>(&f->node()))
        return dilated(c * inner->c, inner->inner);
    int n = f->dim();
    return std::make_shared<Expr>(n, Dilation{c, std::move(f)});
}

ExprPtr Expr::autocorr(BallUnion s) {
    int n = s.dim();
    return std::make_shared<Expr>(n, Autocorr{std::move(s)});
}

ExprPtr Expr::ft_squared(BallUnion s) {
    int n = s.dim();
    return std::make_shared<Expr>(n, FtSquared{std::move(s)});
}

ExprPtr Expr::fourier_node(ExprPtr f) {
    int n = f->dim();
    return std::make_shared<Expr>(n, Fourier{std::move(f)});
}

ExprPtr dilate(const ExprPtr& f, double c) { return Expr::dilated(c, f); }

namespace {

double eigen_eval(int n, int k, double s2) {
    return laguerre(k, 0.5 * n - 1.0, 2.0 * M_PI * s2) * std::exp(-M_PI * s2);
}

double norm2(std::span<const double> p) {
    double s = 0.0;
    for (double v : p) s += v * v;
    return s;
}

} // namespace

double evaluate(const ExprPtr& f, std::span<const double> point) {
    if ((int)point.size() != f->dim())
        throw InvalidInputError("evaluate: point dimension mismatch");
    const auto& node = f->node();
    if (const auto* e = std::get_if<Expr::Eigen>(&node))
        return eigen_eval(f->dim(), e->k, norm2(point));
    if (const auto* s = std::get_if<Expr::Sum>(&node)) {
        double acc = 0.0;
        for (const auto& [c, t] : s->terms) acc += c * evaluate(t, point);
        return acc;
    }
    if (const auto* d = std::get_if<Expr::Dilation>(&node)) {
        std::vector<double> q(point.begin(), point.end());
        for (double& v : q) v *= d->c;
        return evaluate(d->inner, q);
    }
    if (const auto* a = std::get_if<Expr::Autocorr>(&node))
        return autocorr_eval(a->balls, point);
    if (const auto* q = std::get_if<Expr::FtSquared>(&node))
        return autocorr_ft_eval(q->balls, point);
    const auto& ft = std::get<Expr::Fourier>(node);
    return evaluate(fourier_exact(ft.inner), point);
}

bool is_radial(const ExprPtr& f) {
    if (f->dim() == 1) return true; // even in one variable
    const auto& node = f->node();
    if (std::holds_alternative<Expr::Eigen>(node)) return true;
    if (const auto* s = std::get_if<Expr::Sum>(&node)) {
        for (const auto& [c, t] : s->terms)
            if (!is_radial(t)) return false;
        return true;
    }
    if (const auto* d = std::get_if<Expr::Dilation>(&node)) return is_radial(d->inner);
    if (const auto* a = std::get_if<Expr::Autocorr>(&node)) return a->balls.radial();
    if (const auto* q = std::get_if<Expr::FtSquared>(&node)) return q->balls.radial();
    return is_radial(std::get<Expr::Fourier>(node).inner);
}

double evaluate_radial(const ExprPtr& f, double s) {
    if (s < 0.0) throw InvalidInputError("evaluate_radial: negative length");
    if (!is_radial(f)) throw PreconditionError("evaluate_radial: expression is not radial");
    std::vector<double> p(f->dim(), 0.0);
    p[0] = s;
    return evaluate(f, p);
}

double evaluate_at_radius(const ExprPtr& f, double s, std::span<const double> direction) {
    std::vector<double> p(direction.begin(), direction.end());
    for (double& v : p) v *= s;
    return evaluate(f, p);
}

double density_bound(int n, double r) {
    if (r <= 0.0) throw InvalidInputError("density_bound: radius must be > 0");
    return unit_ball_volume(n) * std::pow(0.5 * r, n);
}

namespace detail {

std::vector<double> laguerre_coefficients(int k, double alpha) {
    std::vector<double> c(k + 1);
    double lg_top = std::lgamma(k + alpha + 1.0);
    for (int j = 0; j <= k; ++j) {
        double mag = std::exp(lg_top - std::lgamma(j + alpha + 1.0)
                              - std::lgamma((double)(k - j) + 1.0) - std::lgamma(j + 1.0));
        c[j] = (j % 2 == 0) ? mag : -mag;
    }
    return c;
}

namespace {

void flatten_into(const ExprPtr& f, double coeff, double scale, bool fourier_side,
                  FlatForm& out) {
    const auto& node = f->node();
    if (const auto* e = std::get_if<Expr::Eigen>(&node)) {
        double sign = (fourier_side && e->k % 2 == 1) ? -1.0 : 1.0;
        out.terms.push_back({FlatTerm::Kind::Eigen, sign * coeff, scale, e->k, nullptr});
        return;
    }
    if (const auto* s = std::get_if<Expr::Sum>(&node)) {
        for (const auto& [c, t] : s->terms) flatten_into(t, coeff * c, scale, fourier_side, out);
        return;
    }
    if (const auto* d = std::get_if<Expr::Dilation>(&node)) {
        if (!fourier_side) {
            flatten_into(d->inner, coeff, scale * d->c, fourier_side, out);
        } else {
            // FT(g(c .))(x) = c^-n FT(g)(x / c)
            double cn = std::pow(d->c, out.dim);
            flatten_into(d->inner, coeff / cn, scale / d->c, fourier_side, out);
        }
        return;
    }
    if (const auto* a = std::get_if<Expr::Autocorr>(&node)) {
        out.terms.push_back({fourier_side ? FlatTerm::Kind::FtSquared : FlatTerm::Kind::Autocorr,
                             coeff, scale, 0, &a->balls});
        out.keep_alive.push_back(f);
        return;
    }
    if (const auto* q = std::get_if<Expr::FtSquared>(&node)) {
        out.terms.push_back({fourier_side ? FlatTerm::Kind::Autocorr : FlatTerm::Kind::FtSquared,
                             coeff, scale, 0, &q->balls});
        out.keep_alive.push_back(f);
        return;
    }
    const auto& ft = std::get<Expr::Fourier>(node);
    // Entering a Fourier node flips the side; an outer dilation by s becomes a
    // dilation of the transform argument, handled by the scale bookkeeping.
    flatten_into(ft.inner, coeff, scale, !fourier_side, out);
}

} // namespace

FlatForm flatten(const ExprPtr& f) {
    FlatForm out;
    out.dim = f->dim();
    flatten_into(f, 1.0, 1.0, false, out);
    return out;
}

} // namespace detail

} // namespace ce
