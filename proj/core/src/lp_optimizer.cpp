#include "ce/lp_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ce {

namespace {

double eigen_at(int n, int k, double s) {
    double s2 = s * s;
    return laguerre(k, 0.5 * n - 1.0, 2.0 * M_PI * s2) * std::exp(-M_PI * s2);
}

} // namespace

std::pair<double, double> default_bracket(int n) {
    double v = unit_ball_volume(n);
    double inv = std::pow(v, -1.0 / n);
    return {0.5 * inv, 2.0 * inv + 0.5};
}

FeasibilityProblem build_problem(int n, int degree, double r, const LpGridSpec& grid) {
    if (n < 1) throw InvalidInputError("build_problem: dimension must be >= 1");
    if (degree < 2) throw InvalidInputError("build_problem: degree must be >= 2");
    if (r <= 0.0) throw InvalidInputError("build_problem: trial radius must be > 0");
    if (grid.neg_points < 2 || grid.pos_points < 2)
        throw InvalidInputError("build_problem: degenerate grids");

    FeasibilityProblem p;
    p.dim = n;
    p.degree = degree;
    p.trial_r = r;
    p.delta = grid.delta;
    p.tail_coeff_min = grid.tail_coeff_min;
    p.r_max = grid.r_max > 0.0 ? grid.r_max : std::max(6.0, 3.0 * r);

    // Negativity grid on [r, r_max], geometrically clustered near r.
    for (int i = 0; i < grid.neg_points; ++i) {
        double u = (double)i / (grid.neg_points - 1);
        double frac = (std::pow(8.0, u) - 1.0) / 7.0;
        p.g_neg.push_back(r + (p.r_max - r) * frac);
    }
    // Transform grid uniform on [0, r_max].
    for (int i = 0; i < grid.pos_points; ++i)
        p.g_pos.push_back(p.r_max * (double)i / (grid.pos_points - 1));
    return p;
}

namespace {

// Constraint rows in the form  sum_k G[row][k] a_k >= rhs[row].
struct RowSystem {
    std::vector<std::vector<double>> g;
    std::vector<double> rhs;
    // relative: b is a margin in units of the row's own scale (needed for
    // far-tail grid rows, where the Gaussian envelope shrinks every entry).
    void add(std::vector<double> row, double b, bool relative = false) {
        double scale = 0.0;
        for (double v : row) scale = std::max(scale, std::abs(v));
        if (scale > 0.0) {
            for (double& v : row) v /= scale;
            if (!relative) b /= scale;
        }
        g.push_back(std::move(row));
        rhs.push_back(b);
    }
};

RowSystem assemble_rows(const FeasibilityProblem& p) {
    int n = p.dim, nv = p.degree + 1;
    RowSystem rows;

    auto f_row = [&](double s, double sign) {
        std::vector<double> row(nv);
        for (int k = 0; k < nv; ++k) row[k] = sign * eigen_at(n, k, s);
        return row;
    };
    auto fhat_row = [&](double s, double sign) {
        std::vector<double> row(nv);
        for (int k = 0; k < nv; ++k)
            row[k] = sign * (k % 2 == 0 ? 1.0 : -1.0) * eigen_at(n, k, s);
        return row;
    };

    for (double s : p.g_neg) rows.add(f_row(s, -1.0), p.delta, true);   // f(s) <= -delta
    for (double s : p.g_pos) rows.add(fhat_row(s, 1.0), p.delta, true); // fhat(s) >= delta
    // normalization f(0) = 1, fhat(0) = 1 as inequality pairs
    rows.add(f_row(0.0, 1.0), 1.0);
    rows.add(f_row(0.0, -1.0), -1.0);
    rows.add(fhat_row(0.0, 1.0), 1.0);
    rows.add(fhat_row(0.0, -1.0), -1.0);

    // Tail sign structure: highest odd coefficient strictly positive, anything
    // above it pinned to zero, so f is eventually negative and fhat eventually
    // positive and both tails certify.
    int k_tail = (p.degree % 2 == 1) ? p.degree : p.degree - 1;
    for (int k = k_tail + 1; k < nv; ++k) {
        std::vector<double> row(nv, 0.0);
        row[k] = 1.0;
        rows.add(row, 0.0);
        row[k] = -1.0;
        rows.add(std::vector<double>(row), 0.0);
    }
    std::vector<double> row(nv, 0.0);
    row[k_tail] = 1.0;
    rows.add(std::move(row), p.tail_coeff_min);
    return rows;
}

} // namespace

// Feasibility of {a : G a >= g} via the homogeneous dual cone program
//   max g^T y  s.t.  G^T y = 0, y >= 0,
// run with Bland's rule. The dual is bounded (value 0) exactly when the primal
// is feasible, and the optimal simplex multipliers are then a feasible a.
// Unboundedness yields a Farkas certificate of (grid-)infeasibility.
namespace {

// Dense LU with partial pivoting for the (small) basis matrix.
struct Lu {
    std::size_t n;
    std::vector<double> a; // packed LU
    std::vector<std::size_t> perm;

    bool factor(std::vector<double> mat, std::size_t dim) {
        n = dim;
        a = std::move(mat);
        perm.resize(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            for (std::size_t i = col + 1; i < n; ++i)
                if (std::abs(a[i * n + col]) > std::abs(a[piv * n + col])) piv = i;
            if (std::abs(a[piv * n + col]) < 1e-13) return false;
            if (piv != col) {
                for (std::size_t j = 0; j < n; ++j) std::swap(a[col * n + j], a[piv * n + j]);
                std::swap(perm[col], perm[piv]);
            }
            for (std::size_t i = col + 1; i < n; ++i) {
                double f = a[i * n + col] / a[col * n + col];
                a[i * n + col] = f;
                for (std::size_t j = col + 1; j < n; ++j) a[i * n + j] -= f * a[col * n + j];
            }
        }
        return true;
    }

    void solve(const double* b, double* x) const {
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = b[perm[i]];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) y[i] -= a[i * n + j] * y[j];
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t j = i + 1; j < n; ++j) y[i] -= a[i * n + j] * y[j];
            y[i] /= a[i * n + i];
        }
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i];
    }

    // solves A^T x = b
    void solve_t(const double* b, double* x) const {
        std::vector<double> y(b, b + n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < i; ++j) y[i] -= a[j * n + i] * y[j];
            y[i] /= a[i * n + i];
        }
        for (std::size_t i = n; i-- > 0;)
            for (std::size_t j = i + 1; j < n; ++j) y[i] -= a[j * n + i] * y[j];
        std::vector<double> x2(n);
        for (std::size_t i = 0; i < n; ++i) x2[perm[i]] = y[i];
        for (std::size_t i = 0; i < n; ++i) x[i] = x2[i];
    }
};

} // namespace

std::optional<std::vector<double>> solve_feasibility(const FeasibilityProblem& p) {
    RowSystem rows = assemble_rows(p);
    const std::size_t m = rows.g.size();
    const std::size_t nv = (std::size_t)p.degree + 1;
    const std::size_t total = m + nv; // real columns then artificial identity

    // Column view: real column j is constraint row j of G (cost g_j);
    // artificial column m+i is e_i (cost 0).
    auto column_entry = [&](std::size_t j, std::size_t i) {
        return j < m ? rows.g[j][i] : (j - m == i ? 1.0 : 0.0);
    };
    auto column_cost = [&](std::size_t j) { return j < m ? rows.rhs[j] : 0.0; };

    std::vector<std::size_t> basis(nv);
    for (std::size_t i = 0; i < nv; ++i) basis[i] = m + i;

    // tab = B^-1 A and reduced costs, periodically rebuilt from the original
    // data so pivot drift cannot accumulate; pi holds the simplex multipliers
    // (the primal candidate point).
    std::vector<std::vector<double>> tab(nv, std::vector<double>(total, 0.0));
    std::vector<double> red(total, 0.0);
    std::vector<double> pi(nv, 0.0);
    // Greedy re-selection when the basis degenerates: keep independent columns
    // (current basis order) and fill the remaining rank with artificials.
    auto repair_basis = [&]() {
        std::vector<std::vector<double>> ortho;
        std::vector<std::size_t> kept;
        auto try_add = [&](std::size_t j) {
            if (kept.size() == nv) return;
            std::vector<double> v(nv);
            double norm0 = 0.0;
            for (std::size_t i = 0; i < nv; ++i) {
                v[i] = column_entry(j, i);
                norm0 += v[i] * v[i];
            }
            norm0 = std::sqrt(norm0);
            if (norm0 == 0.0) return;
            for (const auto& q : ortho) {
                double dot = 0.0;
                for (std::size_t i = 0; i < nv; ++i) dot += q[i] * v[i];
                for (std::size_t i = 0; i < nv; ++i) v[i] -= dot * q[i];
            }
            double norm = 0.0;
            for (double x : v) norm += x * x;
            norm = std::sqrt(norm);
            if (norm < 1e-8 * norm0) return;
            for (double& x : v) x /= norm;
            ortho.push_back(std::move(v));
            kept.push_back(j);
        };
        for (std::size_t b = 0; b < nv; ++b) try_add(basis[b]);
        for (std::size_t i = 0; i < nv && kept.size() < nv; ++i) try_add(m + i);
        if (kept.size() != nv)
            throw NumericError("solve_feasibility: cannot repair degenerate basis");
        basis = std::move(kept);
    };

    auto refactor = [&]() {
        Lu lu;
        for (int attempt = 0;; ++attempt) {
            std::vector<double> bmat(nv * nv);
            for (std::size_t i = 0; i < nv; ++i)
                for (std::size_t b = 0; b < nv; ++b)
                    bmat[i * nv + b] = column_entry(basis[b], i);
            if (lu.factor(std::move(bmat), nv)) break;
            if (attempt > 0)
                throw NumericError("solve_feasibility: singular basis after repair");
            repair_basis();
        }
        std::vector<double> col(nv), out(nv);
        for (std::size_t j = 0; j < total; ++j) {
            for (std::size_t i = 0; i < nv; ++i) col[i] = column_entry(j, i);
            lu.solve(col.data(), out.data());
            for (std::size_t i = 0; i < nv; ++i) tab[i][j] = out[i];
        }
        std::vector<double> cb(nv);
        for (std::size_t b = 0; b < nv; ++b) cb[b] = column_cost(basis[b]);
        lu.solve_t(cb.data(), pi.data());
        for (std::size_t j = 0; j < total; ++j) {
            double z = 0.0;
            for (std::size_t i = 0; i < nv; ++i) z += pi[i] * column_entry(j, i);
            red[j] = column_cost(j) - z;
        }
    };
    refactor();

    const double tol_enter = 1e-10, tol_pivot = 1e-11;
    const long max_iter = 50'000, refactor_every = 100;
    const long bland_after = 200 * (long)total; // Dantzig first, Bland to break cycles
    int optimality_checks = 0;
    for (long iter = 0;; ++iter) {
        if (iter >= max_iter)
            throw NumericError("solve_feasibility: pivot budget exhausted (solver stall)");
        if (iter > 0 && iter % refactor_every == 0) refactor();
        std::size_t enter = total;
        if (iter < bland_after) {
            double best = tol_enter;
            for (std::size_t j = 0; j < m; ++j) {
                if (red[j] > best) {
                    best = red[j];
                    enter = j;
                }
            }
        } else {
            for (std::size_t j = 0; j < m; ++j) {
                if (red[j] > tol_enter) {
                    enter = j;
                    break;
                }
            }
        }
        if (enter == total) {
            // Re-derive from the original data before accepting optimality.
            refactor();
            bool clean = true;
            for (std::size_t j = 0; j < m; ++j)
                if (red[j] > tol_enter) clean = false;
            if (clean) break;
            if (++optimality_checks > 20)
                throw NumericError("solve_feasibility: optimality does not stabilize");
            continue;
        }
        // Leaving rule: among eligible rows take the largest pivot magnitude
        // (numerical stability; the periodic refactorization and the pivot cap
        // stand in for a strict anti-cycling rule). Artificial rows encode
        // equalities, so any nonzero pivot element makes them eligible; real
        // variables only block from below.
        std::size_t leave = nv;
        double best_piv = tol_pivot;
        for (std::size_t i = 0; i < nv; ++i) {
            bool artificial = basis[i] >= m;
            double mag = artificial ? std::abs(tab[i][enter])
                                    : (tab[i][enter] > 0.0 ? tab[i][enter] : 0.0);
            if (mag > best_piv) {
                best_piv = mag;
                leave = i;
            }
        }
        if (leave == nv) return std::nullopt; // dual unbounded: primal infeasible

        double piv = tab[leave][enter];
        for (std::size_t j = 0; j < total; ++j) tab[leave][j] /= piv;
        for (std::size_t i = 0; i < nv; ++i) {
            if (i == leave) continue;
            double factor = tab[i][enter];
            if (factor == 0.0) continue;
            for (std::size_t j = 0; j < total; ++j) tab[i][j] -= factor * tab[leave][j];
        }
        double rfac = red[enter];
        for (std::size_t j = 0; j < total; ++j) red[j] -= rfac * tab[leave][j];
        basis[leave] = enter;
    }

    // At a refactored optimum every real column satisfies pi^T G_j >= g_j - tol,
    // so the multiplier vector is the (near-)feasible primal point.
    return pi;
}

namespace {

double combo_at(int n, const std::vector<double>& a, double s, bool transform) {
    double acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        double sign = transform && k % 2 == 1 ? -1.0 : 1.0;
        acc += sign * a[k] * eigen_at(n, (int)k, s);
    }
    return acc;
}

// Local extrema of the fine-grid profile violating the target, worst first.
std::vector<double> violation_cuts(int n, const std::vector<double>& a, double lo,
                                   double hi, double step, bool transform,
                                   double target, std::size_t max_cuts) {
    std::vector<std::pair<double, double>> offenders; // (severity, s)
    double prev = 0.0, cur = 0.0;
    long count = (long)std::ceil((hi - lo) / step);
    for (long i = 0; i <= count; ++i) {
        double s = std::min(hi, lo + i * step);
        double v = combo_at(n, a, s, transform);
        double severity = transform ? -v : v; // positive = violating
        if (severity > target) {
            bool local_peak = i == 0 || severity >= prev;
            double next = i == count ? -1e300
                                     : (transform ? -combo_at(n, a, std::min(hi, lo + (i + 1) * step), true)
                                                  : combo_at(n, a, std::min(hi, lo + (i + 1) * step), false));
            if (local_peak && severity >= next) offenders.emplace_back(severity, s);
        }
        prev = severity;
        cur = severity;
        (void)cur;
    }
    std::sort(offenders.rbegin(), offenders.rend());
    if (offenders.size() > max_cuts) offenders.resize(max_cuts);
    std::vector<double> cuts;
    for (const auto& [sev, s] : offenders) cuts.push_back(s);
    return cuts;
}

} // namespace

OptimizeResult minimize_r(int n, int degree, double r_lo, double r_hi, double tol,
                          const LpGridSpec& grid) {
    if (!(r_lo < r_hi)) throw InvalidInputError("minimize_r: need r_lo < r_hi");
    if (tol <= 0.0) throw InvalidInputError("minimize_r: tol must be > 0");

    OptimizeResult out;
    // Feasibility with cutting planes: the base grids catch the bulk shape and
    // fine-grid violation extrema are fed back as new constraints until the
    // solution is certificate-grade between grid points too.
    const double fine_step = 1e-3;
    const double target = 1e-9;
    auto probe = [&](double r) -> std::optional<std::vector<double>> {
        FeasibilityProblem p = build_problem(n, degree, r, grid);
        bool ok = false;
        std::vector<double> a;
        for (int round = 0; round < 60; ++round) {
            std::optional<std::vector<double>> sol;
            try {
                sol = solve_feasibility(p);
            } catch (const NumericError&) {
                // Solver breakdown at a near-infeasible trial radius: treat as
                // infeasible; the bisection then conservatively moves up.
                break;
            }
            if (!sol) break;
            a = std::move(*sol);
            double f0 = combo_at(n, a, 0.0, false);
            if (!(f0 > 0.0)) break;
            for (double& v : a) v /= f0;
            auto f_cuts = violation_cuts(n, a, r, p.r_max, fine_step, false, target, 8);
            auto fhat_cuts = violation_cuts(n, a, 0.0, p.r_max, fine_step, true, target, 8);
            if (f_cuts.empty() && fhat_cuts.empty()) {
                ok = true;
                break;
            }
            p.g_neg.insert(p.g_neg.end(), f_cuts.begin(), f_cuts.end());
            p.g_pos.insert(p.g_pos.end(), fhat_cuts.begin(), fhat_cuts.end());
        }
        out.bisection_trace.emplace_back(r, ok);
        if (!ok) return std::nullopt;
        return a;
    };

    auto hi_sol = probe(r_hi);
    if (!hi_sol) throw PreconditionError("minimize_r: bracket invalid (infeasible at r_hi)");
    if (probe(r_lo)) throw PreconditionError("minimize_r: bracket invalid (feasible at r_lo)");

    double best_r = r_hi;
    std::vector<double> best = *hi_sol;
    while (r_hi - r_lo > tol) {
        double mid = 0.5 * (r_lo + r_hi);
        if (auto sol = probe(mid)) {
            r_hi = mid;
            best_r = mid;
            best = *sol;
        } else {
            r_lo = mid;
        }
    }

    std::vector<std::pair<double, ExprPtr>> terms;
    for (int k = 0; k <= degree; ++k)
        if (best[k] != 0.0) terms.emplace_back(best[k], Expr::eigen(n, k));
    out.function = Expr::sum(std::move(terms));
    out.coefficients = std::move(best);
    GridSpec verify_grid;
    verify_grid.r_max = std::max(6.0, 3.0 * best_r);
    verify_grid.tol = 1e-8; // slack of the LP equality rows sits just below this
    out.report = verify_ce(out.function, verify_grid);
    out.r_best = out.report.r;
    (void)best_r;
    return out;
}

} // namespace ce
