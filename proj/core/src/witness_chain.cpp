#include <cmath>
#include <vector>

#include "ce/indicator_geometry.hpp"

namespace ce {

BallUnion witness_chain(int n, const GapOracle& oracle, double eps,
                        double target_measure) {
    if (n < 1) throw InvalidInputError("witness_chain: dimension must be >= 1");
    if (eps <= 0.0) throw InvalidInputError("witness_chain: eps must be > 0");
    if (target_measure <= 1.0)
        throw InvalidInputError("witness_chain: target measure must exceed 1");

    double vn = unit_ball_volume(n);

    // If the oracle certifies an unrestricted zero-free range near the origin,
    // a single large ball suffices.
    double rho_single = std::pow(target_measure / vn, 1.0 / n) * (1.0 + 1e-9);
    if (rho_single > eps) {
        auto g = oracle(0.0, 2.0 * rho_single);
        if (g && g->lo <= 1e-12 && g->hi >= 2.0 * rho_single) {
            return BallUnion(n, rho_single, {Point(n, 0.0)});
        }
    }

    // Chain induction along the first axis: each new ball's distances to the
    // whole current chain land inside one certified gap.
    auto g0 = oracle(0.0, 2.0 * eps);
    if (!g0 || g0->lo > 1e-12 || g0->hi < 2.0 * eps)
        throw PreconditionError(
            "witness_chain: eps is not below half the first certified zero-free length");

    double ball_measure = vn * std::pow(eps, n);
    std::size_t k_needed = (std::size_t)std::floor(target_measure / ball_measure) + 1;

    std::vector<double> xs{0.0};
    while (xs.size() < k_needed) {
        double diameter = xs.back() - xs.front() + 2.0 * eps;
        double width = diameter + 2.0 * eps;
        auto g = oracle(0.0, width);
        if (!g)
            throw RefusedError("witness_chain: no certified gap of width " +
                               std::to_string(width) + " available");
        double t = g->lo;
        xs.push_back(xs.back() + t + 2.0 * eps);
    }

    std::vector<Point> centers;
    centers.reserve(xs.size());
    for (double x : xs) {
        Point p(n, 0.0);
        p[0] = x;
        centers.push_back(std::move(p));
    }
    return BallUnion(n, eps, std::move(centers));
}

} // namespace ce
