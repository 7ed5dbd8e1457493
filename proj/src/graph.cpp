#include "strongspan/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace strongspan {

namespace {

bool adjacency_less(const OutEdge& a, const OutEdge& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.target < b.target;
}

}  // namespace

void require_distinct(std::span<const Point2D> points) {
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return lex_less(points[a], points[b]);
    });
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (points[order[k]] == points[order[k - 1]]) {
            throw std::invalid_argument("duplicate points at indices " +
                                        std::to_string(std::min(order[k], order[k - 1])) +
                                        " and " +
                                        std::to_string(std::max(order[k], order[k - 1])));
        }
    }
}

DirectedGeometricGraph::DirectedGeometricGraph(std::vector<Point2D> vertices)
    : vertices_(std::move(vertices)), out_edges_(vertices_.size()) {}

DirectedGeometricGraph::DirectedGeometricGraph(std::vector<Point2D> vertices,
                                               std::vector<std::vector<VertexIndex>> targets)
    : vertices_(std::move(vertices)) {
    if (targets.size() != vertices_.size()) {
        throw std::invalid_argument("adjacency size does not match vertex count");
    }
    out_edges_.resize(vertices_.size());
    for (VertexIndex u = 0; u < vertices_.size(); ++u) {
        auto& list = out_edges_[u];
        list.reserve(targets[u].size());
        for (VertexIndex v : targets[u]) {
            if (v >= vertices_.size()) throw std::invalid_argument("edge target out of range");
            if (v == u) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            list.push_back({v, distance(vertices_[u], vertices_[v])});
        }
        std::sort(list.begin(), list.end(), adjacency_less);
        for (std::size_t k = 1; k < list.size(); ++k) {
            if (list[k].target == list[k - 1].target) {
                throw std::invalid_argument("duplicate edge " + std::to_string(u) + "->" +
                                            std::to_string(list[k].target));
            }
        }
    }
}

std::size_t DirectedGeometricGraph::edge_count() const {
    std::size_t m = 0;
    for (const auto& list : out_edges_) m += list.size();
    return m;
}

bool DirectedGeometricGraph::has_edge(VertexIndex from, VertexIndex to) const {
    const auto& list = out_edges_.at(from);
    return std::any_of(list.begin(), list.end(), [to](const OutEdge& e) { return e.target == to; });
}

std::vector<std::pair<VertexIndex, VertexIndex>> DirectedGeometricGraph::edge_list() const {
    std::vector<std::pair<VertexIndex, VertexIndex>> edges;
    edges.reserve(edge_count());
    for (VertexIndex u = 0; u < out_edges_.size(); ++u) {
        for (const auto& e : out_edges_[u]) edges.emplace_back(u, e.target);
    }
    return edges;
}

std::vector<std::pair<VertexIndex, VertexIndex>> DirectedGeometricGraph::sorted_edge_set() const {
    auto edges = edge_list();
    std::sort(edges.begin(), edges.end());
    return edges;
}

bool DirectedGeometricGraph::invariants_hold() const {
    if (out_edges_.size() != vertices_.size()) return false;
    for (VertexIndex u = 0; u < out_edges_.size(); ++u) {
        const auto& list = out_edges_[u];
        for (std::size_t k = 0; k < list.size(); ++k) {
            const auto& e = list[k];
            if (e.target >= vertices_.size() || e.target == u) return false;
            if (e.length != distance(vertices_[u], vertices_[e.target])) return false;
            if (k > 0 && !adjacency_less(list[k - 1], e)) return false;
        }
        std::vector<VertexIndex> seen;
        for (const auto& e : list) seen.push_back(e.target);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    }
    return true;
}

}  // namespace strongspan
