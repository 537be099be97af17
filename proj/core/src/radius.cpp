#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "ce/expr.hpp"
#include "radius_detail.hpp"

namespace ce {

namespace detail {

namespace {

// One Gaussian monomial A s^(2j) exp(-w s^2) of the flattened expression.
struct Monomial {
    double coeff;
    int j;
    double w;
};

struct TailParts {
    std::vector<Monomial> monomials;
    double compact_end = 0.0;    // support radius of autocorr atoms
    bool positive_ftsq = false;  // a +|FT(1_S)|^2 term: polynomial positive tail
    bool negative_ftsq = false;
};

TailParts split_tail(const FlatForm& ff) {
    TailParts parts;
    for (const auto& t : ff.terms) {
        if (t.kind == FlatTerm::Kind::Eigen) {
            double alpha = 0.5 * ff.dim - 1.0;
            double c2 = t.scale * t.scale;
            auto lc = laguerre_coefficients(t.k, alpha);
            for (int j = 0; j <= t.k; ++j) {
                double a = t.coeff * lc[j] * std::pow(2.0 * M_PI * c2, j);
                if (a == 0.0) continue;
                parts.monomials.push_back({a, j, M_PI * c2});
            }
        } else if (t.kind == FlatTerm::Kind::Autocorr) {
            double sup = (t.balls->center_diameter() + 2.0 * t.balls->radius()) / t.scale;
            parts.compact_end = std::max(parts.compact_end, sup);
        } else {
            if (t.coeff > 0.0) parts.positive_ftsq = true;
            if (t.coeff < 0.0) parts.negative_ftsq = true;
        }
    }
    // Merge like monomials.
    std::sort(parts.monomials.begin(), parts.monomials.end(), [](auto& a, auto& b) {
        if (a.w != b.w) return a.w < b.w;
        return a.j < b.j;
    });
    std::vector<Monomial> merged;
    for (const auto& m : parts.monomials) {
        if (!merged.empty() && merged.back().j == m.j &&
            std::abs(merged.back().w - m.w) < 1e-12 * m.w) {
            merged.back().coeff += m.coeff;
        } else {
            merged.push_back(m);
        }
    }
    double peak = 0.0;
    for (const auto& m : merged) peak = std::max(peak, std::abs(m.coeff));
    std::erase_if(merged, [&](const Monomial& m) {
        return std::abs(m.coeff) <= 1e-13 * peak;
    });
    parts.monomials = std::move(merged);
    return parts;
}

} // namespace

TailInfo tail_analysis(const FlatForm& ff) {
    TailParts parts = split_tail(ff);
    if (parts.positive_ftsq) return {TailKind::Positive, 0.0};
    if (parts.monomials.empty()) return {TailKind::Nonpositive, parts.compact_end};

    // Dominant monomial: slowest Gaussian decay, then highest power.
    const Monomial* dom = &parts.monomials.front();
    for (const auto& m : parts.monomials) {
        if (m.w < dom->w - 1e-12 * dom->w) dom = &m;
        else if (std::abs(m.w - dom->w) <= 1e-12 * dom->w && m.j > dom->j) dom = &m;
    }

    // Each other monomial's magnitude relative to the dominant one is
    // decreasing beyond an explicit radius; grow R until the ratios sum < 1/2.
    double r0 = std::max(1.0, parts.compact_end);
    for (const auto& m : parts.monomials) {
        if (&m == dom) continue;
        double dw = m.w - dom->w;
        if (dw > 0.0) {
            double dj = (double)(m.j - dom->j);
            if (dj > 0.0) r0 = std::max(r0, std::sqrt(dj / dw));
        }
    }
    auto ratio_sum = [&](double s) {
        double s2 = s * s, acc = 0.0;
        for (const auto& m : parts.monomials) {
            if (&m == dom) continue;
            acc += std::abs(m.coeff / dom->coeff) *
                   std::pow(s2, m.j - dom->j) * std::exp(-(m.w - dom->w) * s2);
        }
        return acc;
    };
    double r = r0;
    bool ok = false;
    for (int i = 0; i < 80; ++i) {
        if (ratio_sum(r) < 0.5) {
            ok = true;
            break;
        }
        r *= 1.5;
    }
    if (!ok) return {TailKind::Uncertain, 0.0};
    if (dom->coeff > 0.0) return {TailKind::Positive, r};
    return {TailKind::Negative, r};
}

double last_above_tol(const std::function<double(double)>& profile,
                      double scan_end, double step, double tol,
                      const TailInfo& tail) {
    long count = (long)std::ceil(scan_end / step);
    double last = -1.0, next = -1.0;
    for (long i = count; i >= 0; --i) {
        double s = std::min(scan_end, i * step);
        if (profile(s) > tol) {
            last = s;
            break;
        }
        next = s;
    }
    if (last < 0.0) return 0.0;
    if (next < 0.0) {
        // positive at the scan boundary despite a certified nonpositive tail
        throw NumericError("radius_of_positivity: profile exceeds tol at the scan "
                           "boundary; r_max too small for the certificate");
    }
    double lo = last, hi = next;
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (profile(mid) > tol) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<std::vector<double>> sample_directions(int dim, int count,
                                                  std::uint64_t seed) {
    std::vector<std::vector<double>> dirs;
    std::vector<double> axis(dim, 0.0);
    axis[0] = 1.0;
    dirs.push_back(axis);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    while ((int)dirs.size() < count) {
        std::vector<double> v(dim);
        double norm = 0.0;
        for (double& x : v) {
            x = gauss(rng);
            norm += x * x;
        }
        norm = std::sqrt(norm);
        if (norm < 1e-8) continue;
        for (double& x : v) x /= norm;
        dirs.push_back(std::move(v));
    }
    return dirs;
}

double radius_sampled(const ExprPtr& f, double r_max, double tol,
                      int orientations, std::uint64_t seed) {
    FlatForm ff = flatten(f);
    TailInfo tail = tail_analysis(ff);
    if (tail.kind == TailKind::Positive)
        throw NumericError("radius_of_positivity: certified positive tail, no finite radius");
    if (tail.kind == TailKind::Uncertain)
        throw NumericError("radius_of_positivity: uncertifiable tail");
    double scan_end = std::max(r_max, tail.start);
    auto dirs = sample_directions(f->dim(), std::max(1, orientations), seed);
    auto profile = [&](double s) {
        double m = -std::numeric_limits<double>::infinity();
        for (const auto& d : dirs) m = std::max(m, evaluate_at_radius(f, s, d));
        return m;
    };
    return last_above_tol(profile, scan_end, 1e-3, tol, tail);
}

} // namespace detail

double radius_of_positivity(const ExprPtr& f, double r_max, double tol) {
    if (tol <= 0.0) throw InvalidInputError("radius_of_positivity: tol must be > 0");
    if (!is_radial(f))
        throw PreconditionError("radius_of_positivity: expression is not radial");
    detail::FlatForm ff = detail::flatten(f);
    detail::TailInfo tail = detail::tail_analysis(ff);
    if (tail.kind == detail::TailKind::Positive)
        throw NumericError("radius_of_positivity: certified positive tail, no finite radius");
    if (tail.kind == detail::TailKind::Uncertain)
        throw NumericError("radius_of_positivity: uncertifiable tail");
    double scan_end = std::max(r_max, tail.start);
    auto profile = [&](double s) { return evaluate_radial(f, s); };
    return detail::last_above_tol(profile, scan_end, 1e-3, tol, tail);
}

} // namespace ce
