#ifndef CE_BALL_UNION_HPP
#define CE_BALL_UNION_HPP

#include <vector>

#include "ce/errors.hpp"

namespace ce {

using Point = std::vector<double>;

/// Finite union of pairwise-disjoint closed balls of equal radius.
/// Center distances >= 2*radius; equality (touching balls) is allowed.
class BallUnion {
public:
    BallUnion(int dim, double radius, std::vector<Point> centers);

    int dim() const { return dim_; }
    double radius() const { return radius_; }
    const std::vector<Point>& centers() const { return centers_; }
    std::size_t count() const { return centers_.size(); }

    /// Largest distance between two centers (0 for a single ball).
    double center_diameter() const;

    /// The union is radial iff it is a single ball centered at the origin.
    bool radial() const;

private:
    int dim_;
    double radius_;
    std::vector<Point> centers_;
};

/// Lebesgue measure k * V_n * rho^n.
double measure(const BallUnion& s);

} // namespace ce

#endif
