#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "strongspan/geometry.hpp"
#include "strongspan/graph.hpp"

namespace strongspan {

// All builders reject duplicate points with std::invalid_argument and map
// an empty point list to an empty graph.

/// The G_lambda^theta graph via the closest-first sweep: from each vertex,
/// repeatedly connect to the closest surviving candidate r and discard every
/// candidate inside K(p, r). Distance ties are broken by (x, y, index).
DirectedGeometricGraph build_glt(std::span<const Point2D> points, const SpannerParams& params);

/// Reference construction of the same graph straight from the destroyer
/// characterisation: q gets an edge from p iff no earlier accepted r with
/// |pr| <= |pq| has q in K(p, r). Quadratic per vertex; used as a test oracle.
DirectedGeometricGraph build_glt_declarative(std::span<const Point2D> points,
                                             const SpannerParams& params);

/// Half-Space Proximal graph. A neighbour r of p destroys candidate q when
/// |pr| < |pq| and q is strictly closer to r than to p.
DirectedGeometricGraph build_hsp(std::span<const Point2D> points);

/// Classical theta-graph with cone_count equal cones around each vertex.
/// Cone 0 is bisected by the +x axis; a cone spans [lo, hi) in
/// counter-clockwise angle. In each non-empty cone the edge goes to the
/// point with the smallest projection onto the cone bisector.
/// Throws std::invalid_argument if cone_count < 3.
DirectedGeometricGraph build_theta_graph(std::span<const Point2D> points, std::size_t cone_count);

/// Cone index of q as seen from p (p != q) under the build_theta_graph layout.
std::size_t theta_cone_index(const Point2D& p, const Point2D& q, std::size_t cone_count);

struct RankedEdge {
    VertexIndex u;  // u < v
    VertexIndex v;
    double length;
    std::size_t rank;  // 1-based
};

/// Edges of the complete graph sorted by length, L_1 <= ... <= L_{n(n-1)/2}.
struct EdgeRankIndex {
    std::vector<RankedEdge> edges;
    /// Set when two pairs share a length; such ties are ordered by (u, v).
    bool has_length_ties = false;

    /// Distinct edge lengths in ascending order.
    std::vector<double> length_ladder() const;
};

EdgeRankIndex edge_rank_index(std::span<const Point2D> points);

/// Keeps exactly the edges with length <= max_length.
/// Throws std::invalid_argument if max_length is negative or NaN.
DirectedGeometricGraph truncate_by_length(const DirectedGeometricGraph& graph, double max_length);

/// C_i(P) as a length threshold: both directions of every pair at distance
/// <= max_length. With max_length = 1 this is the unit disk graph.
DirectedGeometricGraph build_complete_truncated(std::span<const Point2D> points, double max_length);

}  // namespace strongspan
