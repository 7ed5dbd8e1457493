#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "strongspan/analysis.hpp"
#include "strongspan/builders.hpp"
#include "strongspan/fixtures.hpp"
#include "test_support.hpp"

using namespace strongspan;

namespace {

const std::vector<Point2D> kCollinear{{0, 0}, {1, 0}, {3, 0}};

DirectedGeometricGraph random_digraph(test::Rng& rng, std::size_t n, double density) {
    auto pts = rng.points(n);
    std::vector<std::vector<VertexIndex>> targets(n);
    for (VertexIndex u = 0; u < n; ++u) {
        for (VertexIndex v = 0; v < n; ++v) {
            if (u != v && rng.uniform(0, 1) < density) targets[u].push_back(v);
        }
    }
    return DirectedGeometricGraph(std::move(pts), std::move(targets));
}

// Whether p reaches q with length <= t |pq| using only edges <= |pq|, by
// the relaxation oracle.
bool strong_pair_oracle(const DirectedGeometricGraph& g, VertexIndex p, VertexIndex q, double t) {
    const double pq = distance(g.vertex(p), g.vertex(q));
    return test::relaxation_oracle(g, p, pq)[q] <= t * pq;
}

}  // namespace

TEST(ShortestPaths, CollinearExample) {
    const auto g = build_glt(kCollinear, SpannerParams::from_degrees(0.75, 30.0));
    const auto d = shortest_path_lengths_from(g, 0);
    EXPECT_EQ(d[0], 0.0);
    EXPECT_EQ(d[1], 1.0);
    EXPECT_EQ(d[2], 3.0);
    EXPECT_EQ(shortest_path_lengths_from(g, 2)[2], 0.0);
    EXPECT_EQ(shortest_path_lengths_from(g, 0, 1.5)[2], kUnreachable);
}

TEST(ShortestPaths, MatchesRelaxationOracle) {
    test::Rng rng(100);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = random_digraph(rng, rng.index(2, 40), rng.uniform(0.02, 0.3));
        const VertexIndex s = rng.index(0, g.vertex_count() - 1);
        const std::optional<double> cap =
            trial % 2 ? std::optional<double>(rng.uniform(0.1, 1.0)) : std::nullopt;
        const auto got = shortest_path_lengths_from(g, s, cap);
        const auto want = test::relaxation_oracle(g, s, cap.value_or(kUnreachable));
        ASSERT_EQ(got.size(), want.size());
        for (std::size_t v = 0; v < got.size(); ++v) {
            if (want[v] == kUnreachable) {
                EXPECT_EQ(got[v], kUnreachable);
            } else {
                EXPECT_NEAR(got[v], want[v], 1e-12 * (1 + want[v]));
            }
        }
    }
}

TEST(ShortestPaths, TriangleInequality) {
    test::Rng rng(101);
    const auto g = build_glt(rng.points(40), SpannerParams::from_degrees(0.8, 50.0));
    std::vector<std::vector<double>> d;
    for (VertexIndex s = 0; s < g.vertex_count(); ++s) d.push_back(shortest_path_lengths_from(g, s));
    for (VertexIndex p = 0; p < g.vertex_count(); ++p)
        for (VertexIndex r = 0; r < g.vertex_count(); ++r)
            for (VertexIndex q = 0; q < g.vertex_count(); ++q)
                EXPECT_LE(d[p][q], (d[p][r] + d[r][q]) * (1 + 1e-12));
}

TEST(SpanningRatio, CompleteGraphIsExactlyOne) {
    test::Rng rng(102);
    const auto pts = rng.points(30);
    const auto report = spanning_ratio(build_complete_truncated(pts, kUnreachable));
    EXPECT_EQ(report.ratio, 1.0);
    EXPECT_TRUE(report.all_reachable);
}

TEST(SpanningRatio, CollinearExampleIsOne) {
    const auto report = spanning_ratio(build_glt(kCollinear, SpannerParams::from_degrees(0.75, 30.0)));
    EXPECT_EQ(report.ratio, 1.0);
    EXPECT_TRUE(report.all_reachable);
}

TEST(SpanningRatio, WitnessAttainsRatioAndFlagsUnreachable) {
    test::Rng rng(103);
    const auto g = build_glt(rng.points(50), SpannerParams::from_degrees(0.9, 70.0));
    const auto report = spanning_ratio(g);
    const auto [p, q] = report.witness;
    EXPECT_EQ(shortest_path_lengths_from(g, p)[q] / distance(g.vertex(p), g.vertex(q)), report.ratio);
    EXPECT_GE(report.ratio, 1.0);

    const DirectedGeometricGraph one_way(kCollinear, {{1}, {2}, {}});
    const auto broken = spanning_ratio(one_way);
    EXPECT_FALSE(broken.all_reachable);
    EXPECT_EQ(broken.unreachable_pairs, 3u);
    EXPECT_EQ(broken.ratio, 1.0);
    EXPECT_THROW(spanning_ratio(DirectedGeometricGraph(std::vector<Point2D>{{0, 0}})), std::invalid_argument);
}

TEST(StrongSpanner, CompleteGraphHoldsAtOne) {
    test::Rng rng(104);
    const auto cert = verify_strong_spanner(build_complete_truncated(rng.points(25), kUnreachable), 1.0);
    EXPECT_TRUE(cert.holds);
    EXPECT_EQ(cert.t_used, 1.0);
    EXPECT_FALSE(cert.failing_pair.has_value());
}

TEST(StrongSpanner, GltAtGuaranteedStretch) {
    test::Rng rng(105);
    const auto params = SpannerParams::from_degrees(0.7, 30.0);
    const auto g = build_glt(rng.points(100), params);
    EXPECT_TRUE(verify_strong_spanner(g, params.stretch_bound()).holds);
}

TEST(StrongSpanner, StretchBoundPerInstance) {
    test::Rng rng(106);
    for (int trial = 0; trial < 30; ++trial) {
        const auto params = rng.params();
        const auto g = build_glt(rng.points(60), params);
        const double t = params.stretch_bound();
        const auto report = spanning_ratio(g);
        EXPECT_TRUE(report.all_reachable);
        EXPECT_TRUE(strongly_connected(g));
        EXPECT_LE(report.ratio, t);
        EXPECT_TRUE(verify_strong_spanner(g, t).holds);
    }
}

TEST(StrongSpanner, IncrementalMatchesPerPairOracle) {
    test::Rng rng(107);
    for (int trial = 0; trial < 40; ++trial) {
        const auto params = rng.params();
        const auto g = trial % 3 == 0 ? random_digraph(rng, 25, 0.2) : build_glt(rng.points(25), params);
        const double t = rng.uniform(1.0, 3.0);
        const auto fast = verify_strong_spanner(g, t);
        const auto slow = verify_strong_spanner_per_pair(g, t);
        EXPECT_EQ(fast.holds, slow.holds);
        bool all = true;
        for (VertexIndex p = 0; p < g.vertex_count(); ++p)
            for (VertexIndex q = 0; q < g.vertex_count(); ++q)
                if (p != q && !strong_pair_oracle(g, p, q, t)) all = false;
        EXPECT_EQ(fast.holds, all);
        if (!fast.holds) {
            ASSERT_TRUE(fast.failing_pair.has_value());
            EXPECT_FALSE(strong_pair_oracle(g, fast.failing_pair->first, fast.failing_pair->second, t));
        }
    }
}

TEST(StrongSpanner, ThetaFixtureFailsAtNominalStretch) {
    const auto fixture = theta_udg_counterexample_fixture();
    const auto theta = build_theta_graph(fixture.points, fixture.cone_count);
    const double t = theta_graph_nominal_stretch(fixture.cone_count);
    const auto cert = verify_strong_spanner(theta, t);
    EXPECT_FALSE(cert.holds);
    EXPECT_FALSE(verify_strong_spanner_per_pair(theta, t).holds);
    // A plain t-spanner nevertheless.
    EXPECT_LE(spanning_ratio(theta).ratio, t);
}

TEST(MaxOutDegree, Examples) {
    EXPECT_EQ(max_out_degree(build_glt(std::vector<Point2D>{{0, 0}, {1, 0}}, SpannerParams(0.7, 0.5))), 1u);
    EXPECT_EQ(max_out_degree(DirectedGeometricGraph(std::vector<Point2D>{{0, 0}})), 0u);
    test::Rng rng(108);
    EXPECT_LE(max_out_degree(build_glt(rng.points(200), SpannerParams::from_degrees(0.85, 60.0))), 6u);
}

TEST(SubgraphSpannerRatio, IdentityAndMismatch) {
    test::Rng rng(109);
    const auto g = build_glt(rng.points(30), SpannerParams::from_degrees(0.8, 40.0));
    const auto self = subgraph_spanner_ratio(g, g);
    EXPECT_EQ(self.ratio, 1.0);
    EXPECT_TRUE(self.all_reachable);
    const auto other = build_glt(rng.points(30), SpannerParams::from_degrees(0.8, 40.0));
    EXPECT_THROW(subgraph_spanner_ratio(g, other), std::invalid_argument);
}

TEST(SubgraphSpannerRatio, UsesHostDistanceAsDenominator) {
    // Host has only the collinear chain, so d_host(0, 2) = 3 = |02| and the
    // subgraph ratio of the chain itself is 1 even without direct edges.
    const DirectedGeometricGraph chain(kCollinear, {{1}, {0, 2}, {1}});
    EXPECT_EQ(subgraph_spanner_ratio(chain, chain).ratio, 1.0);
    // A detour through (1, 1) inside a host with the direct edge.
    const std::vector<Point2D> pts{{0, 0}, {2, 0}, {1, 1}};
    const DirectedGeometricGraph host(pts, {{1, 2}, {}, {1}});
    const DirectedGeometricGraph sub(pts, {{2}, {}, {1}});
    const auto report = subgraph_spanner_ratio(sub, host);
    EXPECT_NEAR(report.ratio, std::sqrt(2.0), 1e-15);
    EXPECT_TRUE(report.all_reachable);
    const DirectedGeometricGraph cut(pts, {{}, {}, {1}});
    const auto flagged = subgraph_spanner_ratio(cut, host);
    EXPECT_FALSE(flagged.all_reachable);
    EXPECT_EQ(flagged.unreachable_pairs, 2u);
}

TEST(Truncation, LadderSpannerProperty) {
    test::Rng rng(110);
    for (int trial = 0; trial < 6; ++trial) {
        const auto params = rng.params();
        const auto pts = rng.points(20);
        const auto g = build_glt(pts, params);
        const double t = params.stretch_bound();
        for (const double cap : edge_rank_index(pts).length_ladder()) {
            const auto host = build_complete_truncated(pts, cap);
            const auto report = subgraph_spanner_ratio(truncate_by_length(g, cap), host);
            EXPECT_TRUE(report.all_reachable);
            EXPECT_LE(report.ratio, t);
        }
    }
}

TEST(Truncation, EveryShortPairHasBoundedPath) {
    test::Rng rng(111);
    const auto params = SpannerParams::from_degrees(0.8, 45.0);
    const auto pts = rng.points(25);
    const auto g = build_glt(pts, params);
    const double t = params.stretch_bound();
    for (const double cap : {0.1, 0.2, 0.35, 0.5}) {
        const auto cut = truncate_by_length(g, cap);
        for (VertexIndex p = 0; p < pts.size(); ++p) {
            const auto d = test::relaxation_oracle(cut, p);
            for (VertexIndex q = 0; q < pts.size(); ++q) {
                if (q != p && distance(pts[p], pts[q]) <= cap) EXPECT_LE(d[q], t * distance(pts[p], pts[q]));
            }
        }
    }
}

TEST(Truncation, StrongFailureShowsUpAtSomeThreshold) {
    const auto fixture = theta_udg_counterexample_fixture();
    const auto theta = build_theta_graph(fixture.points, fixture.cone_count);
    const double t = theta_graph_nominal_stretch(fixture.cone_count);
    ASSERT_FALSE(verify_strong_spanner(theta, t).holds);
    bool found = false;
    for (const double cap : edge_rank_index(fixture.points).length_ladder()) {
        const auto report =
            subgraph_spanner_ratio(truncate_by_length(theta, cap), build_complete_truncated(fixture.points, cap));
        if (!report.all_reachable || report.ratio > t) found = true;
    }
    EXPECT_TRUE(found);
}

TEST(StronglyConnected, Examples) {
    EXPECT_TRUE(strongly_connected(build_complete_truncated(kCollinear, 2.0)));
    EXPECT_FALSE(strongly_connected(build_complete_truncated(kCollinear, 1.0)));
    EXPECT_FALSE(strongly_connected(DirectedGeometricGraph(kCollinear, {{1}, {2}, {}})));
    EXPECT_TRUE(strongly_connected(DirectedGeometricGraph(std::vector<Point2D>{{0, 0}})));
}
