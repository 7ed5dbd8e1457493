#pragma once

#include <cstddef>
#include <numbers>

namespace strongspan {

/// A point in the plane. Coordinates are always finite.
class Point2D {
public:
    constexpr Point2D() = default;

    /// Throws std::invalid_argument on NaN or infinite coordinates.
    Point2D(double x, double y);

    constexpr double x() const { return x_; }
    constexpr double y() const { return y_; }

    friend constexpr bool operator==(const Point2D&, const Point2D&) = default;

private:
    double x_ = 0.0;
    double y_ = 0.0;
};

/// Lexicographic (x, then y) order.
constexpr bool lex_less(const Point2D& a, const Point2D& b) {
    if (a.x() != b.x()) return a.x() < b.x();
    return a.y() < b.y();
}

double distance(const Point2D& p, const Point2D& q);

/// Angle at apex between rays apex->a and apex->b, in [0, pi].
/// Computed as atan2(|cross|, dot); 0 if either ray is degenerate.
double angle_at(const Point2D& apex, const Point2D& a, const Point2D& b);

constexpr double degrees_to_radians(double deg) { return deg * std::numbers::pi / 180.0; }

/// The (lambda, theta) pair shaping destruction regions.
///
/// Admitted ranges are 1/2 <= lambda <= 1 and 0 <= theta <= pi/2. The
/// closed ends are needed to rebuild the full simulation grid; the stretch
/// guarantee only holds on the open range 1/2 < lambda < 1, theta < pi/2.
class SpannerParams {
public:
    /// Throws std::invalid_argument when out of range.
    SpannerParams(double lambda, double theta_radians);

    static SpannerParams from_degrees(double lambda, double theta_degrees);

    double lambda() const { return lambda_; }
    double theta() const { return theta_; }
    double theta_degrees() const { return theta_ * 180.0 / std::numbers::pi; }

    /// t = 1 / ((1 - lambda) cos theta); +inf when lambda = 1 or theta = pi/2.
    double stretch_bound() const;

    /// Whether the strong t-spanner guarantee applies (1/2 < lambda < 1, theta < pi/2).
    bool stretch_guaranteed() const;

    /// floor(2 pi / min(theta, acos(1 / (2 lambda)))); the largest size_t
    /// value when the minimum angle is zero (no bound).
    std::size_t out_degree_bound() const;

    friend bool operator==(const SpannerParams&, const SpannerParams&) = default;

private:
    double lambda_;
    double theta_;
};

// Region predicates. All regions are closed and evaluated with plain
// floating-point comparisons; inputs are assumed to be in general position.
// Every predicate throws std::invalid_argument when the apex p equals r.

/// q lies in the cone of half-angle theta at p bisected by ray p->r.
bool in_theta_cone(const Point2D& p, const Point2D& r, const Point2D& q, double theta);

/// q lies in the half-plane containing r bounded by the line perpendicular
/// to pr at distance |pr| / (2 lambda) from p.
bool in_lambda_halfplane(const Point2D& p, const Point2D& r, const Point2D& q, double lambda);

/// q lies in the destruction region K(p, r).
bool in_destruction_region(const Point2D& p, const Point2D& r, const Point2D& q,
                           const SpannerParams& params);

/// r is positioned to destroy the edge (p, q): q in K(p, r) and |pr| <= |pq|.
/// Whether (p, r) is an edge is not considered.
bool is_destroyer_position(const Point2D& p, const Point2D& q, const Point2D& r,
                           const SpannerParams& params);

}  // namespace strongspan
