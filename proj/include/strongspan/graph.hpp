#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "strongspan/geometry.hpp"

namespace strongspan {

using VertexIndex = std::size_t;

struct OutEdge {
    VertexIndex target;
    double length;

    friend bool operator==(const OutEdge&, const OutEdge&) = default;
};

/// Directed geometric graph: vertices plus per-vertex out-edge lists.
///
/// Edge lengths are the Euclidean distances between endpoints. Each
/// adjacency list is sorted by ascending length, ties by target index.
/// There are no self-loops and no duplicate directed edges.
class DirectedGeometricGraph {
public:
    DirectedGeometricGraph() = default;

    /// A graph with the given vertices and no edges.
    explicit DirectedGeometricGraph(std::vector<Point2D> vertices);

    /// Builds from per-vertex target lists; lengths are computed and lists
    /// sorted. Throws std::invalid_argument on self-loops, duplicates, or
    /// out-of-range targets.
    DirectedGeometricGraph(std::vector<Point2D> vertices,
                           std::vector<std::vector<VertexIndex>> targets);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const;

    const std::vector<Point2D>& vertices() const { return vertices_; }
    const Point2D& vertex(VertexIndex v) const { return vertices_.at(v); }

    std::span<const OutEdge> out_edges(VertexIndex v) const { return out_edges_.at(v); }

    bool has_edge(VertexIndex from, VertexIndex to) const;

    /// All directed edges as (from, to) pairs, ordered by from, then by the
    /// adjacency order.
    std::vector<std::pair<VertexIndex, VertexIndex>> edge_list() const;

    /// Same edges, sorted by (from, to).
    std::vector<std::pair<VertexIndex, VertexIndex>> sorted_edge_set() const;

    /// Checks the class invariants, including that stored lengths are
    /// bit-equal to recomputed distances.
    bool invariants_hold() const;

private:
    std::vector<Point2D> vertices_;
    std::vector<std::vector<OutEdge>> out_edges_;
};

/// Throws std::invalid_argument if two points coincide.
void require_distinct(std::span<const Point2D> points);

}  // namespace strongspan
