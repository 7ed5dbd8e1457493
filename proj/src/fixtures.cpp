#include "strongspan/fixtures.hpp"

#include <array>
#include <cmath>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "strongspan/analysis.hpp"
#include "strongspan/builders.hpp"

namespace strongspan {

namespace {

// Intersections of circle(c1, r1) and circle(c2, r2); nullopt if disjoint.
std::optional<std::array<Point2D, 2>> circle_intersections(const Point2D& c1, double r1,
                                                           const Point2D& c2, double r2) {
    const double dx = c2.x() - c1.x();
    const double dy = c2.y() - c1.y();
    const double d = std::hypot(dx, dy);
    if (d == 0.0 || d > r1 + r2 || d < std::abs(r1 - r2)) return std::nullopt;
    const double along = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d);
    const double h2 = r1 * r1 - along * along;
    if (h2 <= 0.0) return std::nullopt;
    const double h = std::sqrt(h2);
    const double mx = c1.x() + along * dx / d;
    const double my = c1.y() + along * dy / d;
    return std::array<Point2D, 2>{Point2D(mx - h * dy / d, my + h * dx / d),
                                  Point2D(mx + h * dy / d, my - h * dx / d)};
}

Point2D mirror(const Point2D& a) { return Point2D(a.x(), -a.y()); }

double path_length(const std::vector<Point2D>& pts, std::initializer_list<VertexIndex> path) {
    double total = 0.0;
    for (auto it = path.begin(); std::next(it) != path.end(); ++it) {
        total += distance(pts[*it], pts[*std::next(it)]);
    }
    return total;
}

}  // namespace

std::optional<double> validate_hsp_lower_bound(const std::vector<Point2D>& points, double epsilon) {
    using F = HspLowerBoundFixture;
    if (points.size() != 6) return std::nullopt;
    if (points[F::p] != Point2D(0.0, 0.0) || points[F::q] != Point2D(1.0, 0.0)) return std::nullopt;
    if (points[F::c] != mirror(points[F::a]) || points[F::d] != mirror(points[F::b])) {
        return std::nullopt;
    }
    try {
        require_distinct(points);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }

    const auto hsp = build_hsp(points);
    constexpr std::array<std::pair<VertexIndex, VertexIndex>, 6> solid_edges{
        {{F::p, F::a}, {F::a, F::b}, {F::b, F::q}, {F::p, F::c}, {F::c, F::d}, {F::d, F::q}}};
    for (const auto& [u, v] : solid_edges) {
        if (!hsp.has_edge(u, v)) return std::nullopt;
    }
    const double upper = path_length(points, {F::p, F::a, F::b, F::q});
    const double lower = path_length(points, {F::p, F::c, F::d, F::q});
    if (upper != lower) return std::nullopt;

    const double shortest = shortest_path_lengths_from(hsp, F::p)[F::q];
    if (shortest != upper) return std::nullopt;
    const double stretch = shortest / distance(points[F::p], points[F::q]);
    if (!(stretch >= 3.0 - epsilon)) return std::nullopt;
    return stretch;
}

HspLowerBoundFixture hsp_lower_bound_fixture(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("hsp_lower_bound_fixture: epsilon must lie in (0, 1)");
    }
    const double delta = epsilon / 6.0;
    const double hop = 1.0 - 2.0 * delta;
    const Point2D p(0.0, 0.0);
    const Point2D q(1.0, 0.0);

    // s places |aq| = 1 - 2 delta s inside (hop, 1); w moves w delta of
    // length from the a->b hop to the b->q hop (total unchanged).
    constexpr std::array<double, 5> s_grid{0.5, 0.25, 0.75, 0.125, 0.875};
    constexpr std::array<double, 5> w_grid{0.0, 0.25, -0.25, 0.5, -0.5};
    for (const double s : s_grid) {
        const auto a_options = circle_intersections(p, hop, q, 1.0 - 2.0 * delta * s);
        if (!a_options) continue;
        const Point2D a = (*a_options)[0].y() > 0.0 ? (*a_options)[0] : (*a_options)[1];
        for (const double w : w_grid) {
            const double ab = hop - w * delta;
            const double bq = hop + w * delta;
            const auto b_options = circle_intersections(a, ab, q, bq);
            if (!b_options) continue;
            const Point2D b = distance(p, (*b_options)[0]) > distance(p, (*b_options)[1])
                                  ? (*b_options)[0]
                                  : (*b_options)[1];
            std::vector<Point2D> points{p, a, b, mirror(a), mirror(b), q};
            if (const auto stretch = validate_hsp_lower_bound(points, epsilon)) {
                HspLowerBoundFixture fixture;
                fixture.points = std::move(points);
                fixture.epsilon = epsilon;
                fixture.delta = delta;
                fixture.stretch = *stretch;
                return fixture;
            }
        }
    }
    throw FixtureSearchError("no HSP lower-bound configuration validated for epsilon " +
                             std::to_string(epsilon));
}

double theta_graph_nominal_stretch(std::size_t cone_count) {
    if (cone_count < 7) return std::numeric_limits<double>::infinity();
    return 1.0 / (1.0 - 2.0 * std::sin(std::numbers::pi / static_cast<double>(cone_count)));
}

SpannerParams theta_fixture_glt_params() { return SpannerParams::from_degrees(0.7, 30.0); }

bool validate_theta_udg_counterexample(const ThetaUdgFixture& fixture) {
    const auto& pts = fixture.points;
    if (fixture.p >= pts.size() || fixture.q >= pts.size() || fixture.p == fixture.q) return false;
    if (!(distance(pts[fixture.p], pts[fixture.q]) <= 1.0)) return false;
    try {
        require_distinct(pts);
    } catch (const std::invalid_argument&) {
        return false;
    }

    const auto udg = build_complete_truncated(pts, 1.0);
    if (!strongly_connected(udg)) return false;

    const auto theta = build_theta_graph(pts, fixture.cone_count);
    const auto theta_udg = truncate_by_length(theta, 1.0);
    if (shortest_path_lengths_from(theta_udg, fixture.p)[fixture.q] != kUnreachable) return false;
    if (shortest_path_lengths_from(theta_udg, fixture.q)[fixture.p] != kUnreachable) return false;
    if (subgraph_spanner_ratio(theta_udg, udg).all_reachable) return false;

    if (verify_strong_spanner(theta, theta_graph_nominal_stretch(fixture.cone_count)).holds) {
        return false;
    }

    const auto params = theta_fixture_glt_params();
    const auto glt_udg = truncate_by_length(build_glt(pts, params), 1.0);
    const auto report = subgraph_spanner_ratio(glt_udg, udg);
    return report.all_reachable && report.ratio <= params.stretch_bound();
}

ThetaUdgFixture theta_udg_counterexample_fixture() {
    constexpr std::size_t cones = 8;
    const double half_cone_deg = 180.0 / static_cast<double>(cones);
    constexpr std::array<double, 4> pq_grid{0.99, 0.98, 0.97, 0.95};
    for (const double pq : pq_grid) {
        // Offset directions strictly inside cone 0, widest first.
        for (double phi_deg = half_cone_deg - 2.5; phi_deg > 0.0; phi_deg -= 2.5) {
            const double phi = degrees_to_radians(phi_deg);
            // The offset point must beat q on bisector projection yet be
            // longer than 1: 1 < rho < pq / cos(phi).
            const double rho_max = pq / std::cos(phi);
            if (rho_max <= 1.0) continue;
            for (const double frac : {0.5, 0.25, 0.75}) {
                const double rho = 1.0 + frac * (rho_max - 1.0);
                const double ox = rho * std::cos(phi);
                const double oy = rho * std::sin(phi);
                ThetaUdgFixture fixture;
                fixture.cone_count = cones;
                fixture.points = {Point2D(0.0, 0.0), Point2D(pq, 0.0), Point2D(ox, oy),
                                  Point2D(pq - ox, -oy)};
                if (validate_theta_udg_counterexample(fixture)) return fixture;
            }
        }
    }
    throw FixtureSearchError("no theta-graph counterexample validated");
}

}  // namespace strongspan
