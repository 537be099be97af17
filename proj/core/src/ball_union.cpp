#include "ce/ball_union.hpp"

#include <cmath>

#include "ce/special_math.hpp"

namespace ce {

namespace {

double distance(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

} // namespace

BallUnion::BallUnion(int dim, double radius, std::vector<Point> centers)
    : dim_(dim), radius_(radius), centers_(std::move(centers)) {
    if (dim < 1) throw InvalidInputError("BallUnion: dimension must be >= 1");
    if (radius <= 0.0) throw InvalidInputError("BallUnion: radius must be > 0");
    if (centers_.empty()) throw InvalidInputError("BallUnion: needs at least one center");
    for (const auto& c : centers_) {
        if ((int)c.size() != dim) throw InvalidInputError("BallUnion: center dimension mismatch");
    }
    for (std::size_t i = 0; i < centers_.size(); ++i) {
        for (std::size_t j = i + 1; j < centers_.size(); ++j) {
            if (distance(centers_[i], centers_[j]) < 2.0 * radius_ - 1e-12)
                throw InvalidInputError("BallUnion: balls overlap (center distance < 2 rho)");
        }
    }
}

double BallUnion::center_diameter() const {
    double d = 0.0;
    for (std::size_t i = 0; i < centers_.size(); ++i)
        for (std::size_t j = i + 1; j < centers_.size(); ++j)
            d = std::max(d, distance(centers_[i], centers_[j]));
    return d;
}

bool BallUnion::radial() const {
    if (centers_.size() != 1) return false;
    for (double c : centers_[0])
        if (c != 0.0) return false;
    return true;
}

double measure(const BallUnion& s) {
    return (double)s.count() * unit_ball_volume(s.dim()) * std::pow(s.radius(), s.dim());
}

} // namespace ce
