#ifndef CE_EXPR_HPP
#define CE_EXPR_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "ce/ball_union.hpp"
#include "ce/special_math.hpp"

namespace ce {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable even integrable function on R^n, closed under sums, dilations,
/// Fourier transform, Laguerre-Gaussian eigenbasis atoms, and ball-union
/// autocorrelation atoms. Every node has an exact-form Fourier transform.
class Expr {
public:
    /// e_k(x) = L_k^(n/2-1)(2 pi |x|^2) exp(-pi |x|^2); Fourier eigenfunction
    /// with eigenvalue (-1)^k.
    struct Eigen {
        int k;
    };
    struct Sum {
        std::vector<std::pair<double, ExprPtr>> terms;
    };
    /// x -> inner(c x).
    struct Dilation {
        double c;
        ExprPtr inner;
    };
    /// x -> mu(S ∩ (S + x)).
    struct Autocorr {
        BallUnion balls;
    };
    /// x -> |FT of indicator of S at x|^2.
    struct FtSquared {
        BallUnion balls;
    };
    struct Fourier {
        ExprPtr inner;
    };
    using Node = std::variant<Eigen, Sum, Dilation, Autocorr, FtSquared, Fourier>;

    int dim() const { return dim_; }
    const Node& node() const { return node_; }

    static ExprPtr eigen(int n, int k);
    static ExprPtr sum(std::vector<std::pair<double, ExprPtr>> terms);
    static ExprPtr scaled(double coeff, ExprPtr f);
    static ExprPtr dilated(double c, ExprPtr f);
    static ExprPtr autocorr(BallUnion s);
    static ExprPtr ft_squared(BallUnion s);
    static ExprPtr fourier_node(ExprPtr f);

    Expr(int dim, Node node) : dim_(dim), node_(std::move(node)) {}

private:
    int dim_;
    Node node_;
};

/// Pointwise evaluation at an n-vector.
double evaluate(const ExprPtr& f, std::span<const double> point);

/// True iff the expression is structurally radial (every ball-union atom is a
/// single origin-centered ball). Any n = 1 expression is radial by evenness.
bool is_radial(const ExprPtr& f);

/// Value at any point of length s; requires is_radial(f).
double evaluate_radial(const ExprPtr& f, double s);

/// Value at radius s along a given unit direction.
double evaluate_at_radius(const ExprPtr& f, double s, std::span<const double> direction);

/// Exact Fourier transform by structural rules; the transform of the result
/// evaluates back to f (involution on even functions).
ExprPtr fourier_exact(const ExprPtr& f);

ExprPtr dilate(const ExprPtr& f, double c);

/// Independent numeric Fourier transform of a radial f at length t, via the
/// Bessel-kernel radial reduction. Test oracle for fourier_exact.
double hankel_oracle(const ExprPtr& f, double t, const QuadratureConfig& cfg = {});

/// Largest s in [0, r_max] with f(s) > tol, refined by bisection; 0 if f never
/// exceeds tol. The tail beyond the scan must be certifiable (compactly
/// supported, dominated-sign Gaussian, or below tol); otherwise throws.
double radius_of_positivity(const ExprPtr& f, double r_max, double tol);

/// Center-density bound V_n (r/2)^n implied by a certified radius r.
double density_bound(int n, double r);

struct GridSpec {
    double step = 1e-3;
    double r_max = 0.0; // 0: chosen automatically from the expression
    double tol = 1e-9;
    int orientations = 64; // radialized sampling for non-radial expressions
    std::uint64_t seed = 0;
};

struct CEReport {
    double f0 = 0.0;
    double fhat0 = 0.0;
    double r = 0.0;
    double fhat_min = 0.0;
    double density_bound = 0.0;
    bool passed = false;
    bool finite_radius = false;
    std::string failure;
    GridSpec grid;
};

/// Numerical check of the four Cohn-Elkies conditions. Failures are encoded
/// in the report, never thrown.
CEReport verify_ce(const ExprPtr& f, const GridSpec& grids = {});

} // namespace ce

#endif
