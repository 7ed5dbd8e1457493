#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "strongspan/graph.hpp"

namespace strongspan {

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

using VertexPair = std::pair<VertexIndex, VertexIndex>;

/// Single-source shortest path lengths; kUnreachable marks vertices that
/// cannot be reached. With edge_cap set, edges longer than the cap are ignored.
std::vector<double> shortest_path_lengths_from(const DirectedGeometricGraph& graph,
                                               VertexIndex source,
                                               std::optional<double> edge_cap = std::nullopt);

/// Maximum ratio over ordered pairs. `ratio` and `witness` only cover the
/// reachable pairs; `all_reachable` is false if any pair had no path.
struct StretchReport {
    double ratio = 1.0;
    VertexPair witness{0, 0};
    bool all_reachable = true;
    std::size_t unreachable_pairs = 0;
    std::optional<VertexPair> first_unreachable;
};

/// max over p != q of d_G(p, q) / |pq|. Requires at least 2 vertices.
StretchReport spanning_ratio(const DirectedGeometricGraph& graph);

struct StrongSpannerCertificate {
    bool holds = true;
    double t_used = 1.0;
    std::optional<VertexPair> failing_pair;
};

/// Checks that every ordered pair (p, q) has a path of length <= t |pq|
/// using only edges of length <= |pq|.
StrongSpannerCertificate verify_strong_spanner(const DirectedGeometricGraph& graph, double t);

/// Same certificate computed with one independent capped search per pair.
/// Much slower; kept as the reference for verify_strong_spanner.
StrongSpannerCertificate verify_strong_spanner_per_pair(const DirectedGeometricGraph& graph,
                                                        double t);

std::size_t max_out_degree(const DirectedGeometricGraph& graph);

/// max over pairs reachable in host of d_subgraph(p, q) / d_host(p, q).
/// Pairs reachable in host but not in subgraph are reported as unreachable.
/// Throws std::invalid_argument if the vertex sets differ.
StretchReport subgraph_spanner_ratio(const DirectedGeometricGraph& subgraph,
                                     const DirectedGeometricGraph& host);

/// Whether every vertex reaches every other vertex.
bool strongly_connected(const DirectedGeometricGraph& graph);

}  // namespace strongspan
