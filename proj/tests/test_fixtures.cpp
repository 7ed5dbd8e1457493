#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "strongspan/analysis.hpp"
#include "strongspan/builders.hpp"
#include "strongspan/fixtures.hpp"

using namespace strongspan;

namespace {

using F = HspLowerBoundFixture;

struct FrozenHsp {
    double epsilon;
    Point2D a;
    Point2D b;
    double stretch;
};

const FrozenHsp kFrozenHsp[] = {
    {0.5, {0.42708333333333343, 0.71557268731648316}, {1.2568334995014703, 0.79276793450433702}, 2.5},
    {0.1, {0.48375000000000001, 0.83691718941866911}, {1.4502397358235257, 0.85541137748454465},
     2.8999999999999999},
    {0.02, {0.49668333333333325, 0.86024227837278489}, {1.4900093251397861, 0.86406132443661798}, 2.98},
};

std::vector<Point2D> frozen_points(const FrozenHsp& f) {
    return {Point2D(0, 0), f.a, f.b, Point2D(f.a.x(), -f.a.y()), Point2D(f.b.x(), -f.b.y()), Point2D(1, 0)};
}

const std::vector<Point2D> kFrozenTheta{{0, 0},
                                        {0.98999999999999999, 0},
                                        {0.9648463103929541, 0.35117533762460446},
                                        {0.025153689607045893, -0.35117533762460446}};

}  // namespace

TEST(HspLowerBound, SearchReproducesFrozenCoordinates) {
    for (const auto& frozen : kFrozenHsp) {
        const auto fixture = hsp_lower_bound_fixture(frozen.epsilon);
        EXPECT_EQ(fixture.points, frozen_points(frozen)) << frozen.epsilon;
        EXPECT_EQ(fixture.stretch, frozen.stretch);
        EXPECT_EQ(fixture.delta, frozen.epsilon / 6.0);
    }
}

TEST(HspLowerBound, FrozenCoordinatesValidate) {
    for (const auto& frozen : kFrozenHsp) {
        const auto pts = frozen_points(frozen);
        const auto stretch = validate_hsp_lower_bound(pts, frozen.epsilon);
        ASSERT_TRUE(stretch.has_value());
        EXPECT_GE(*stretch, 3.0 - frozen.epsilon);

        const auto hsp = build_hsp(pts);
        const double d = shortest_path_lengths_from(hsp, F::p)[F::q];
        EXPECT_GE(d / distance(pts[F::p], pts[F::q]), 3.0 - frozen.epsilon);
        EXPECT_NEAR(d, 3.0 - 6.0 * (frozen.epsilon / 6.0), 1e-12);
        EXPECT_GE(spanning_ratio(hsp).ratio, 3.0 - frozen.epsilon);
    }
}

TEST(HspLowerBound, PathsAreMirrorImages) {
    const auto fixture = hsp_lower_bound_fixture(0.1);
    const auto& pts = fixture.points;
    EXPECT_EQ(pts[F::c], Point2D(pts[F::a].x(), -pts[F::a].y()));
    EXPECT_EQ(pts[F::d], Point2D(pts[F::b].x(), -pts[F::b].y()));
    const double upper = distance(pts[F::p], pts[F::a]) + distance(pts[F::a], pts[F::b]) +
                         distance(pts[F::b], pts[F::q]);
    const double lower = distance(pts[F::p], pts[F::c]) + distance(pts[F::c], pts[F::d]) +
                         distance(pts[F::d], pts[F::q]);
    EXPECT_EQ(upper, lower);
    const auto hsp = build_hsp(pts);
    for (const auto [u, v] : {std::pair{F::p, F::a}, {F::a, F::b}, {F::b, F::q}, {F::p, F::c}, {F::c, F::d},
                              {F::d, F::q}}) {
        EXPECT_TRUE(hsp.has_edge(u, v));
    }
    EXPECT_FALSE(hsp.has_edge(F::p, F::q));
}

TEST(HspLowerBound, ValidationRejectsBrokenSets) {
    auto pts = frozen_points(kFrozenHsp[1]);
    EXPECT_FALSE(validate_hsp_lower_bound(pts, 0.01).has_value());
    pts[F::d] = Point2D(pts[F::d].x(), pts[F::d].y() - 0.01);
    EXPECT_FALSE(validate_hsp_lower_bound(pts, 0.1).has_value());
    pts.pop_back();
    EXPECT_FALSE(validate_hsp_lower_bound(pts, 0.1).has_value());
    EXPECT_THROW(hsp_lower_bound_fixture(0.0), std::invalid_argument);
    EXPECT_THROW(hsp_lower_bound_fixture(1.0), std::invalid_argument);
}

TEST(ThetaUdgCounterexample, SearchReproducesFrozenCoordinates) {
    const auto fixture = theta_udg_counterexample_fixture();
    EXPECT_EQ(fixture.points, kFrozenTheta);
    EXPECT_EQ(fixture.cone_count, 8u);
}

TEST(ThetaUdgCounterexample, FrozenCoordinatesValidate) {
    ThetaUdgFixture fixture;
    fixture.points = kFrozenTheta;
    ASSERT_TRUE(validate_theta_udg_counterexample(fixture));

    const auto& pts = fixture.points;
    EXPECT_LE(distance(pts[fixture.p], pts[fixture.q]), 1.0);
    const auto udg = build_complete_truncated(pts, 1.0);
    EXPECT_TRUE(strongly_connected(udg));

    const auto theta = build_theta_graph(pts, fixture.cone_count);
    // The cone edge out of p skips q for a longer point.
    bool long_edge = false;
    for (const auto& e : theta.out_edges(fixture.p)) long_edge |= e.length > 1.0;
    EXPECT_TRUE(long_edge);
    EXPECT_FALSE(theta.has_edge(fixture.p, fixture.q));

    const auto report = subgraph_spanner_ratio(truncate_by_length(theta, 1.0), udg);
    EXPECT_FALSE(report.all_reachable);
    EXPECT_EQ(shortest_path_lengths_from(truncate_by_length(theta, 1.0), fixture.p)[fixture.q], kUnreachable);

    const auto params = theta_fixture_glt_params();
    const auto glt = subgraph_spanner_ratio(truncate_by_length(build_glt(pts, params), 1.0), udg);
    EXPECT_TRUE(glt.all_reachable);
    EXPECT_LE(glt.ratio, params.stretch_bound());
}

TEST(ThetaUdgCounterexample, NominalStretch) {
    EXPECT_TRUE(std::isinf(theta_graph_nominal_stretch(6)));
    EXPECT_NEAR(theta_graph_nominal_stretch(8), 1.0 / (1.0 - 2.0 * std::sin(std::numbers::pi / 8)), 1e-15);
    ThetaUdgFixture far;
    far.points = {{0, 0}, {2, 0}, {1, 1}};
    EXPECT_FALSE(validate_theta_udg_counterexample(far));
}
