#include "ce/zero_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "radius_detail.hpp"

namespace ce {

namespace {

double bisect_crossing(const std::function<double(double)>& fn, double lo, double hi,
                       double tol) {
    double flo = fn(lo);
    for (int i = 0; i < 200 && hi - lo > tol; ++i) {
        double mid = 0.5 * (lo + hi);
        double fmid = fn(mid);
        if ((flo <= 0.0) == (fmid <= 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Golden-section minimum of |fn| on [lo, hi].
double minimize_abs(const std::function<double(double)>& fn, double lo, double hi,
                    double tol, double* min_value) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = std::abs(fn(x1)), f2 = std::abs(fn(x2));
    for (int i = 0; i < 120 && b - a > tol; ++i) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = std::abs(fn(x1));
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = std::abs(fn(x2));
        }
    }
    double x = 0.5 * (a + b);
    if (min_value) *min_value = std::abs(fn(x));
    return x;
}

} // namespace

ZeroReport extract_zeros(const ExprPtr& f, ProfileSide side, double r_max,
                         double tol, double scan_step) {
    if (r_max <= 0.0 || tol <= 0.0 || scan_step <= 0.0)
        throw InvalidInputError("extract_zeros: r_max, tol, scan_step must be > 0");
    ExprPtr g = side == ProfileSide::Transform ? fourier_exact(f) : f;
    if (!is_radial(g)) throw PreconditionError("extract_zeros: profile is not radial");

    ZeroReport rep;
    rep.dim = f->dim();
    rep.side = side;
    rep.r_max = r_max;
    rep.tol = tol;
    rep.scan_step = scan_step;

    auto profile = [&](double s) { return evaluate_radial(g, s); };

    detail::FlatForm ff = detail::flatten(g);
    detail::TailInfo tail = detail::tail_analysis(ff);
    // A strictly sign-definite Gaussian-dominated tail has no zeros at all;
    // a nonnegative squared-indicator tail (start 0) may still touch zero.
    bool strict_tail = (tail.kind == detail::TailKind::Negative ||
                        tail.kind == detail::TailKind::Positive) &&
                       tail.start > 0.0;
    rep.tail_zero_free = strict_tail && tail.start <= r_max;

    long count = (long)std::ceil(r_max / scan_step);
    std::vector<double> ss(count + 1), vv(count + 1);
    for (long i = 0; i <= count; ++i) {
        ss[i] = std::min(r_max, i * scan_step);
        vv[i] = profile(ss[i]);
    }

    long i = 0;
    while (i <= count) {
        if (std::abs(vv[i]) <= tol) {
            long j = i;
            while (j + 1 <= count && std::abs(vv[j + 1]) <= tol) ++j;
            // a run that merely sinks under tol at the end of a strictly
            // sign-definite tail is not a zero
            if (j == count && strict_tail && ss[i] >= tail.start) {
                i = j + 1;
                continue;
            }
            if (j - i >= 2) {
                // vanishing interval; refine both edges against |f| = tol
                double lo = ss[i];
                if (i > 0)
                    lo = bisect_crossing([&](double s) { return std::abs(profile(s)) - tol; },
                                         ss[i - 1], ss[i], tol);
                double hi = ss[j];
                if (j < count)
                    hi = bisect_crossing([&](double s) { return std::abs(profile(s)) - tol; },
                                         ss[j + 1], ss[j], tol);
                rep.roots.push_back({lo, ZeroKind::IntervalStart});
                rep.roots.push_back({hi, ZeroKind::IntervalEnd});
            } else {
                // short dip: treat as a touching (or grid-straddled crossing) root
                bool sign_change = i > 0 && j < count && (vv[i - 1] <= 0.0) != (vv[j + 1] <= 0.0);
                double lo = i > 0 ? ss[i - 1] : ss[i];
                double hi = j < count ? ss[j + 1] : ss[j];
                if (sign_change) {
                    rep.roots.push_back({bisect_crossing(profile, lo, hi, tol), ZeroKind::Crossing});
                } else {
                    rep.roots.push_back({minimize_abs(profile, lo, hi, tol, nullptr),
                                         ZeroKind::Touching});
                }
            }
            i = j + 1;
            continue;
        }
        if (i + 1 <= count && std::abs(vv[i + 1]) > tol && (vv[i] <= 0.0) != (vv[i + 1] <= 0.0)) {
            rep.roots.push_back({bisect_crossing(profile, ss[i], ss[i + 1], tol),
                                 ZeroKind::Crossing});
        }
        // touching root between grid points: local minimum of |f| dipping to tol
        if (i >= 1 && i + 1 <= count && std::abs(vv[i]) < std::abs(vv[i - 1]) &&
            std::abs(vv[i]) < std::abs(vv[i + 1]) && (vv[i - 1] <= 0.0) == (vv[i + 1] <= 0.0) &&
            std::abs(vv[i]) > tol) {
            double mv = 0.0;
            double loc = minimize_abs(profile, ss[i - 1], ss[i + 1], tol, &mv);
            if (mv <= tol) rep.roots.push_back({loc, ZeroKind::Touching});
        }
        ++i;
    }

    std::sort(rep.roots.begin(), rep.roots.end(),
              [](const ZeroRecord& a, const ZeroRecord& b) { return a.length < b.length; });
    // drop duplicates closer than the refinement width
    std::vector<ZeroRecord> dedup;
    for (const auto& r : rep.roots) {
        if (!dedup.empty() && r.kind == dedup.back().kind &&
            r.length - dedup.back().length < 2.0 * tol)
            continue;
        dedup.push_back(r);
    }
    rep.roots = std::move(dedup);
    return rep;
}

namespace {

// Root events as (position, is_interval) pairs for gap computation: an
// interval [a, b] covers its whole span with zeros.
struct Event {
    double lo, hi;
};

std::vector<Event> coverage(const ZeroReport& z) {
    std::vector<Event> ev;
    for (std::size_t i = 0; i < z.roots.size(); ++i) {
        const auto& r = z.roots[i];
        if (r.kind == ZeroKind::IntervalStart) {
            if (i + 1 < z.roots.size() && z.roots[i + 1].kind == ZeroKind::IntervalEnd) {
                ev.push_back({r.length, z.roots[i + 1].length});
                ++i;
            }
        } else if (r.kind != ZeroKind::IntervalEnd) {
            ev.push_back({r.length, r.length});
        }
    }
    std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) { return a.lo < b.lo; });
    return ev;
}

} // namespace

GapStats gap_statistics(const ZeroReport& z, double window_c,
                        const std::vector<double>& thresholds) {
    auto ev = coverage(z);
    std::size_t n_points = 0;
    for (const auto& e : ev) n_points += (e.lo == e.hi) ? 1 : 2;
    if (ev.size() < 2 && !(ev.size() == 1 && ev[0].hi > ev[0].lo))
        throw PreconditionError("gap_statistics: need at least two roots or one interval");

    GapStats gs;
    gs.window_c = window_c;
    gs.max_gap = 0.0;
    gs.min_gap = std::numeric_limits<double>::infinity();

    std::vector<std::pair<double, double>> gaps; // (start, length) between events
    for (std::size_t i = 0; i + 1 < ev.size(); ++i) {
        double g = ev[i + 1].lo - ev[i].hi;
        gaps.emplace_back(ev[i].hi, std::max(0.0, g));
    }
    // a vanishing interval contributes gap 0 across its own span
    for (const auto& e : ev)
        if (e.hi > e.lo) gaps.emplace_back(e.lo, 0.0);
    std::sort(gaps.begin(), gaps.end());

    for (const auto& [loc, g] : gaps) {
        if (g > gs.max_gap) {
            gs.max_gap = g;
            gs.max_gap_location = loc;
        }
        gs.min_gap = std::min(gs.min_gap, g);
    }

    if (window_c > 0.0) {
        double first = ev.front().lo, last = ev.back().hi;
        for (double t = first; t + window_c <= last + 1e-12; t += 0.5 * window_c) {
            double wmin = std::numeric_limits<double>::infinity();
            for (const auto& [loc, g] : gaps)
                if (loc >= t - 1e-12 && loc + g <= t + window_c + 1e-12)
                    wmin = std::min(wmin, g);
            gs.window_profile.emplace_back(t, wmin);
        }
    }
    for (double th : thresholds) {
        int cnt = 0;
        for (const auto& [loc, g] : gaps)
            if (g <= th) ++cnt;
        gs.close_pair_counts[th] = cnt;
    }
    return gs;
}

int neighborhood_count(const ZeroReport& z, double spacing, double eps) {
    if (spacing <= 0.0 || eps <= 0.0)
        throw InvalidInputError("neighborhood_count: spacing and eps must be > 0");
    auto ev = coverage(z);
    int count = 0;
    for (const auto& e : ev) {
        if (e.lo == e.hi) {
            double m = std::round(e.lo / spacing);
            double best = std::numeric_limits<double>::infinity();
            for (double mm : {m - 1.0, m, m + 1.0})
                if (mm >= 0.0) best = std::min(best, std::abs(e.lo - mm * spacing));
            if (best < eps) ++count;
        } else {
            // one representative root per progression point inside the widened span
            long m_lo = (long)std::ceil((e.lo - eps) / spacing);
            long m_hi = (long)std::floor((e.hi + eps) / spacing);
            if (m_lo < 0) m_lo = 0;
            if (m_hi >= m_lo) count += (int)(m_hi - m_lo + 1);
        }
    }
    return count;
}

ZeroReport dyadic_gap_fixture(double eps, int k_max, double r_max) {
    if (eps < 0.0 || eps >= 1.0)
        throw InvalidInputError("dyadic_gap_fixture: eps must lie in [0, 1) so the gaps are disjoint");
    ZeroReport rep;
    rep.dim = 1;
    rep.side = ProfileSide::Function;
    rep.r_max = r_max;
    rep.tol = 0.0;
    rep.scan_step = 0.0;
    rep.tail_zero_free = false;
    // roots cover everything except [0, eps] and [2^k - eps, 2^k + eps]
    double prev_hi = eps;
    for (int k = 1; k <= k_max; ++k) {
        double p = std::pow(2.0, k);
        if (p - eps >= r_max) break;
        double lo = prev_hi, hi = std::min(p - eps, r_max);
        if (hi > lo) {
            rep.roots.push_back({lo, ZeroKind::IntervalStart});
            rep.roots.push_back({hi, ZeroKind::IntervalEnd});
        }
        prev_hi = p + eps;
    }
    if (prev_hi < r_max) {
        rep.roots.push_back({prev_hi, ZeroKind::IntervalStart});
        rep.roots.push_back({r_max, ZeroKind::IntervalEnd});
    }
    return rep;
}

std::pair<double, double> dual_smallest_root_check(const ExprPtr& f, double r,
                                                   double tol) {
    if (r <= 0.0 || tol <= 0.0)
        throw InvalidInputError("dual_smallest_root_check: r and tol must be > 0");
    ExprPtr fhat = fourier_exact(f);
    if (!is_radial(fhat))
        throw PreconditionError("dual_smallest_root_check: transform is not radial");
    double hi = 1.05 * r;
    double best = std::numeric_limits<double>::infinity(), where = 0.0;
    long count = (long)std::ceil(hi / 1e-3);
    for (long i = 0; i <= count; ++i) {
        double s = std::min(hi, i * 1e-3);
        double v = evaluate_radial(fhat, s);
        if (v < best) {
            best = v;
            where = s;
        }
    }
    // local refinement around the grid minimum
    double lo = std::max(0.0, where - 1e-3), up = std::min(hi, where + 1e-3);
    double refined = minimize_abs([&](double s) { return evaluate_radial(fhat, s); },
                                  lo, up, tol, nullptr);
    double rv = evaluate_radial(fhat, refined);
    if (rv < best) {
        best = rv;
        where = refined;
    }
    return {best, where};
}

GapOracle make_gap_oracle(const ZeroReport& z, double margin) {
    auto ev = std::make_shared<std::vector<Event>>(coverage(z));
    double r_max = z.r_max;
    bool tail_free = z.tail_zero_free;
    return [ev, r_max, tail_free, margin](double t_min,
                                          double width) -> std::optional<GapInterval> {
        // margin pads only edges that abut a located root; the domain
        // boundaries at 0 and r_max are not roots.
        auto consider = [&](double lo, double hi, bool lo_is_root,
                            bool hi_is_root) -> std::optional<GapInterval> {
            lo = std::max(lo + (lo_is_root ? margin : 0.0), t_min);
            if (hi_is_root) hi -= margin;
            if (hi - lo >= width) return GapInterval{lo, hi};
            return std::nullopt;
        };
        double prev = 0.0;
        bool prev_root = false;
        for (const auto& e : *ev) {
            if (auto g = consider(prev, e.lo, prev_root, true)) return g;
            prev = std::max(prev, e.hi);
            prev_root = true;
        }
        if (tail_free) {
            double lo = std::max(prev + (prev_root ? margin : 0.0), t_min);
            return GapInterval{lo, std::numeric_limits<double>::infinity()};
        }
        return consider(prev, r_max, prev_root, false);
    };
}

} // namespace ce
