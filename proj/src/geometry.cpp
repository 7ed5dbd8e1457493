#include "strongspan/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace strongspan {

Point2D::Point2D(double x, double y) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
        throw std::invalid_argument("Point2D: coordinates must be finite");
    }
}

double distance(const Point2D& p, const Point2D& q) {
    return std::hypot(q.x() - p.x(), q.y() - p.y());
}

double angle_at(const Point2D& apex, const Point2D& a, const Point2D& b) {
    const double ax = a.x() - apex.x();
    const double ay = a.y() - apex.y();
    const double bx = b.x() - apex.x();
    const double by = b.y() - apex.y();
    if ((ax == 0.0 && ay == 0.0) || (bx == 0.0 && by == 0.0)) return 0.0;
    return std::atan2(std::abs(ax * by - ay * bx), ax * bx + ay * by);
}

SpannerParams::SpannerParams(double lambda, double theta_radians)
    : lambda_(lambda), theta_(theta_radians) {
    if (!(lambda >= 0.5 && lambda <= 1.0)) {
        throw std::invalid_argument("SpannerParams: lambda must lie in [1/2, 1], got " +
                                    std::to_string(lambda));
    }
    // Degree inputs are converted in floating point, so allow a little slack
    // at pi/2 and snap to it.
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (!(theta_radians >= 0.0 && theta_radians <= half_pi + 1e-12)) {
        throw std::invalid_argument("SpannerParams: theta must lie in [0, pi/2], got " +
                                    std::to_string(theta_radians));
    }
    theta_ = std::min(theta_radians, half_pi);
}

SpannerParams SpannerParams::from_degrees(double lambda, double theta_degrees) {
    return SpannerParams(lambda, degrees_to_radians(theta_degrees));
}

bool SpannerParams::stretch_guaranteed() const {
    return lambda_ > 0.5 && lambda_ < 1.0 && theta_ < std::numbers::pi / 2.0;
}

double SpannerParams::stretch_bound() const {
    if (lambda_ >= 1.0 || theta_ >= std::numbers::pi / 2.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 1.0 / ((1.0 - lambda_) * std::cos(theta_));
}

std::size_t SpannerParams::out_degree_bound() const {
    const double min_angle = std::min(theta_, std::acos(1.0 / (2.0 * lambda_)));
    if (min_angle <= 0.0) return std::numeric_limits<std::size_t>::max();
    return static_cast<std::size_t>(std::floor(2.0 * std::numbers::pi / min_angle));
}

namespace {

void require_apex(const Point2D& p, const Point2D& r) {
    if (p == r) throw std::invalid_argument("degenerate apex: p equals r");
}

}  // namespace

bool in_theta_cone(const Point2D& p, const Point2D& r, const Point2D& q, double theta) {
    require_apex(p, r);
    return angle_at(p, q, r) <= theta;
}

bool in_lambda_halfplane(const Point2D& p, const Point2D& r, const Point2D& q, double lambda) {
    require_apex(p, r);
    const double dx = r.x() - p.x();
    const double dy = r.y() - p.y();
    const double len = std::hypot(dx, dy);
    const double projection = ((q.x() - p.x()) * dx + (q.y() - p.y()) * dy) / len;
    return projection >= len / (2.0 * lambda);
}

bool in_destruction_region(const Point2D& p, const Point2D& r, const Point2D& q,
                           const SpannerParams& params) {
    return in_theta_cone(p, r, q, params.theta()) &&
           in_lambda_halfplane(p, r, q, params.lambda());
}

bool is_destroyer_position(const Point2D& p, const Point2D& q, const Point2D& r,
                           const SpannerParams& params) {
    if (p == q) throw std::invalid_argument("degenerate pair: p equals q");
    return in_destruction_region(p, r, q, params) && distance(p, r) <= distance(p, q);
}

}  // namespace strongspan
