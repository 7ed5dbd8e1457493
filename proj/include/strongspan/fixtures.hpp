#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "strongspan/geometry.hpp"
#include "strongspan/graph.hpp"

namespace strongspan {

/// No candidate in a fixture search passed validation.
class FixtureSearchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Six points p, a, b, c, d, q (in that index order) with p = (0, 0),
/// q = (1, 0) and c, d the mirror images of a, b across the x-axis. The HSP
/// contains p->a->b->q and p->c->d->q, each of length 3 - 6 delta with
/// delta = epsilon / 6, and no shorter p->q path.
struct HspLowerBoundFixture {
    std::vector<Point2D> points;
    double epsilon = 0.0;
    double delta = 0.0;
    /// d_HSP(p, q) / |pq| as validated.
    double stretch = 0.0;

    static constexpr VertexIndex p = 0;
    static constexpr VertexIndex a = 1;
    static constexpr VertexIndex b = 2;
    static constexpr VertexIndex c = 3;
    static constexpr VertexIndex d = 4;
    static constexpr VertexIndex q = 5;
};

/// Searches the two free offsets of the construction (how far |aq| sits
/// inside (1 - 2 delta, 1), and how the middle hop splits between |ab| and
/// |bq|) in a fixed order and returns the first validated set.
/// Throws std::invalid_argument unless 0 < epsilon < 1, FixtureSearchError
/// if nothing validates.
HspLowerBoundFixture hsp_lower_bound_fixture(double epsilon);

/// Returns the validated p->q stretch of `points` laid out as in
/// HspLowerBoundFixture, or nullopt if the set does not have the required
/// HSP structure or the stretch is below 3 - epsilon.
std::optional<double> validate_hsp_lower_bound(const std::vector<Point2D>& points, double epsilon);

/// Four points p, q, s, s2 where p, q are at distance <= 1 but the
/// theta-graph picks edges longer than 1 from both, so that after
/// intersecting with the unit disk graph neither reaches the other.
struct ThetaUdgFixture {
    std::vector<Point2D> points;
    std::size_t cone_count = 8;
    VertexIndex p = 0;
    VertexIndex q = 1;
};

/// Stretch bound of the theta-graph with this many cones,
/// 1 / (1 - 2 sin(pi / cone_count)); +inf below 7 cones.
double theta_graph_nominal_stretch(std::size_t cone_count);

/// Route parameters used when checking G_lambda^theta on the theta fixture.
SpannerParams theta_fixture_glt_params();

/// Deterministic grid search over (|pq|, offset angle, offset length).
/// Throws FixtureSearchError if nothing validates.
ThetaUdgFixture theta_udg_counterexample_fixture();

/// Checks all fixture properties: the unit disk graph is connected, p and q
/// are mutually unreachable in theta-graph ∩ UDG, the theta-graph fails the
/// strong spanner check at its nominal stretch, and G_lambda^theta ∩ UDG is a
/// t-spanner of UDG for theta_fixture_glt_params().
bool validate_theta_udg_counterexample(const ThetaUdgFixture& fixture);

}  // namespace strongspan
