#include "ce/special_math.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace ce {

double unit_ball_volume(int n) {
    if (n < 1) throw InvalidInputError("unit_ball_volume: dimension must be >= 1");
    double half_n = 0.5 * n;
    return std::exp(half_n * std::log(M_PI) - std::lgamma(half_n + 1.0));
}

namespace {

bool is_half_integer(double nu) {
    double two_nu = 2.0 * nu;
    return std::abs(two_nu - std::round(two_nu)) < 1e-12;
}

// Power series, accumulated in long double to absorb the alternating-sum
// cancellation for x up to ~12.
double bessel_series(double nu, double x) {
    long double half_x = 0.5L * (long double)x;
    long double term = std::exp((long double)nu * std::log(half_x) - (long double)std::lgamma(nu + 1.0));
    long double sum = term;
    long double x2 = half_x * half_x;
    for (int m = 1; m < 200; ++m) {
        term *= -x2 / ((long double)m * ((long double)m + (long double)nu));
        sum += term;
        if (std::abs((double)term) < 1e-20 * (1.0 + std::abs((double)sum))) break;
    }
    return (double)sum;
}

// Hankel asymptotic expansion, adequate for x >= 12 and small orders.
double bessel_asymptotic(double nu, double x) {
    double mu = 4.0 * nu * nu;
    double p = 1.0, q = 0.0;
    double term = 1.0;
    // P: even k, Q: odd k of the common product series.
    for (int k = 1; k <= 12; ++k) {
        double f = 2.0 * k - 1.0;
        term *= (mu - f * f) / (k * 8.0 * x);
        if (k % 2 == 1) {
            q += (k % 4 == 1) ? term : -term;
        } else {
            p += (k % 4 == 2) ? -term : term;
        }
    }
    double omega = x - nu * M_PI / 2.0 - M_PI / 4.0;
    return std::sqrt(2.0 / (M_PI * x)) * (p * std::cos(omega) - q * std::sin(omega));
}

// Downward recurrence for large orders at large argument, normalized against
// an asymptotic value at a base order of the same parity class.
double bessel_downward(double nu, double x) {
    double frac = nu - std::floor(nu); // 0 or 0.5
    double base0 = frac;               // J_frac
    double base1 = frac + 1.0;
    int steps_to_base = (int)std::llround(nu - base1);

    int extra = 25 + (int)(x / 4.0);
    double hi = nu + extra;

    double jp = 0.0;       // J at order cur+1
    double jc = 1e-280;    // J at order cur (arbitrary seed)
    double at_nu = 0.0;
    double cur = hi;
    double b0 = 0.0, b1 = 0.0;
    while (cur > base0 - 0.5) {
        double jm = (2.0 * cur / x) * jc - jp;
        jp = jc;
        jc = jm;
        cur -= 1.0;
        if (std::abs(jc) > 1e280) {
            jc *= 1e-280;
            jp *= 1e-280;
            at_nu *= 1e-280;
            b1 *= 1e-280;
        }
        if (std::abs(cur - nu) < 0.25) at_nu = jc;
        if (std::abs(cur - base1) < 0.25) b1 = jc;
        if (std::abs(cur - base0) < 0.25) b0 = jc;
    }
    (void)steps_to_base;

    double ref0 = (frac == 0.0) ? bessel_asymptotic(0.0, x)
                                : std::sqrt(2.0 / (M_PI * x)) * std::sin(x);
    double ref1 = (frac == 0.0) ? bessel_asymptotic(1.0, x)
                                : bessel_asymptotic(1.5, x);
    // Normalize against whichever base value is better conditioned.
    if (std::abs(ref0) >= std::abs(ref1))
        return at_nu * (ref0 / b0);
    return at_nu * (ref1 / b1);
}

// Upward recurrence from the asymptotic base orders; stable while the order
// stays below the argument.
double bessel_upward(double nu, double x) {
    double frac = nu - std::floor(nu); // 0 or 0.5
    double j0 = (frac == 0.0) ? bessel_asymptotic(0.0, x)
                              : std::sqrt(2.0 / (M_PI * x)) * std::sin(x);
    if (nu < frac + 0.25) return j0;
    double j1 = (frac == 0.0) ? bessel_asymptotic(1.0, x) : bessel_asymptotic(1.5, x);
    double cur = frac + 1.0;
    while (cur < nu - 0.25) {
        double jn = (2.0 * cur / x) * j1 - j0;
        j0 = j1;
        j1 = jn;
        cur += 1.0;
    }
    return j1;
}

} // namespace

double bessel_j(double order, double x) {
    if (x < 0.0) throw InvalidInputError("bessel_j: negative argument");
    if (order < -0.5 || !is_half_integer(order))
        throw InvalidInputError("bessel_j: order must be a half-integer >= -1/2");
    if (x == 0.0) {
        if (order == 0.0) return 1.0;
        if (order > 0.0) return 0.0;
        return std::numeric_limits<double>::infinity();
    }
    if (x <= 12.0) return bessel_series(order, x);
    if (order <= 2.0) return bessel_asymptotic(order, x);
    if (order <= x) return bessel_upward(order, x);
    return bessel_downward(order, x);
}

double laguerre(int k, double alpha, double y) {
    if (k < 0) throw InvalidInputError("laguerre: negative degree");
    double lm = 1.0; // L_0
    if (k == 0) return lm;
    double lc = 1.0 + alpha - y; // L_1
    for (int j = 1; j < k; ++j) {
        double ln = ((2.0 * j + 1.0 + alpha - y) * lc - (j + alpha) * lm) / (j + 1.0);
        lm = lc;
        lc = ln;
    }
    return lc;
}

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_cf(double a, double b, double x) {
    const double tiny = 1e-300;
    const double eps = 1e-16;
    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 300; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) break;
    }
    return h;
}

} // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (a <= 0.0 || b <= 0.0) throw InvalidInputError("regularized_incomplete_beta: a, b must be > 0");
    if (x < 0.0 || x > 1.0) throw InvalidInputError("regularized_incomplete_beta: x outside [0, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b)
                    + a * std::log(x) + b * std::log1p(-x);
    double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

namespace {

// 15-point Gauss-Kronrod pair on [-1, 1].
const double gk_nodes[8] = {
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329,
};
const double gk_wk[8] = {
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970,
};
const double gk_wg[4] = {
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082,
};

struct GKResult {
    double value;
    double error;
};

GKResult gk15(const std::function<double(double)>& fn, double lo, double hi) {
    double c = 0.5 * (lo + hi), hw = 0.5 * (hi - lo);
    double f0 = fn(c);
    double resk = gk_wk[0] * f0;
    double resg = gk_wg[0] * f0;
    for (int i = 1; i < 8; ++i) {
        double dx = hw * gk_nodes[i];
        double fs = fn(c - dx) + fn(c + dx);
        resk += gk_wk[i] * fs;
        if (i % 2 == 0) resg += gk_wg[i / 2] * fs;
    }
    return {resk * hw, std::abs(resk - resg) * hw};
}

} // namespace

double integrate(const std::function<double(double)>& fn, double lo, double hi,
                 const QuadratureConfig& cfg) {
    if (cfg.abs_tol <= 0.0 || cfg.rel_tol <= 0.0 || cfg.max_subdivisions < 1)
        throw InvalidInputError("integrate: invalid quadrature config");
    if (lo > hi) throw InvalidInputError("integrate: lo > hi");
    if (lo == hi) return 0.0;

    struct Seg {
        double lo, hi, value, error;
    };
    GKResult whole = gk15(fn, lo, hi);
    std::vector<Seg> segs{{lo, hi, whole.value, whole.error}};
    int splits = 0;
    while (true) {
        double total = 0.0, err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].value;
            err += segs[i].error;
            if (segs[i].error > segs[worst].error) worst = i;
        }
        double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
        if (err <= tol) return total;
        if (splits >= cfg.max_subdivisions)
            throw ConvergenceError("integrate: subdivision budget exhausted", total, err);
        Seg s = segs[worst];
        double mid = 0.5 * (s.lo + s.hi);
        GKResult left = gk15(fn, s.lo, mid);
        GKResult right = gk15(fn, mid, s.hi);
        segs[worst] = {s.lo, mid, left.value, left.error};
        segs.push_back({mid, s.hi, right.value, right.error});
        ++splits;
    }
}

} // namespace ce
