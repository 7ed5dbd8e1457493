#include "strongspan/builders.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace strongspan {

namespace {

struct Candidate {
    VertexIndex index;
    double dist;
};

// Candidates other than p in ascending distance; ties by (x, y, index).
std::vector<Candidate> candidates_by_distance(std::span<const Point2D> points, VertexIndex p) {
    std::vector<Candidate> out;
    out.reserve(points.size() - 1);
    for (VertexIndex q = 0; q < points.size(); ++q) {
        if (q != p) out.push_back({q, distance(points[p], points[q])});
    }
    std::sort(out.begin(), out.end(), [&](const Candidate& a, const Candidate& b) {
        if (a.dist != b.dist) return a.dist < b.dist;
        const Point2D& pa = points[a.index];
        const Point2D& pb = points[b.index];
        if (pa.x() != pb.x()) return pa.x() < pb.x();
        if (pa.y() != pb.y()) return pa.y() < pb.y();
        return a.index < b.index;
    });
    return out;
}

// Closest-first sweep shared by G_lambda^theta and HSP. `destroys(p, r, q)`
// decides whether accepted neighbour r removes candidate q.
template <typename Destroys>
DirectedGeometricGraph sweep_build(std::span<const Point2D> points, Destroys destroys) {
    require_distinct(points);
    std::vector<std::vector<VertexIndex>> targets(points.size());
    std::vector<char> alive;
    for (VertexIndex p = 0; p < points.size(); ++p) {
        const auto order = candidates_by_distance(points, p);
        alive.assign(order.size(), 1);
        for (std::size_t k = 0; k < order.size(); ++k) {
            if (!alive[k]) continue;
            const Candidate& r = order[k];
            targets[p].push_back(r.index);
            alive[k] = 0;
            for (std::size_t j = k + 1; j < order.size(); ++j) {
                if (alive[j] && destroys(p, r, order[j])) alive[j] = 0;
            }
        }
    }
    return DirectedGeometricGraph(std::vector<Point2D>(points.begin(), points.end()),
                                  std::move(targets));
}

}  // namespace

DirectedGeometricGraph build_glt(std::span<const Point2D> points, const SpannerParams& params) {
    return sweep_build(points, [&](VertexIndex p, const Candidate& r, const Candidate& q) {
        return in_destruction_region(points[p], points[r.index], points[q.index], params);
    });
}

DirectedGeometricGraph build_glt_declarative(std::span<const Point2D> points,
                                             const SpannerParams& params) {
    require_distinct(points);
    std::vector<std::vector<VertexIndex>> targets(points.size());
    for (VertexIndex p = 0; p < points.size(); ++p) {
        for (const Candidate& q : candidates_by_distance(points, p)) {
            const bool destroyed =
                std::any_of(targets[p].begin(), targets[p].end(), [&](VertexIndex r) {
                    return is_destroyer_position(points[p], points[q.index], points[r], params);
                });
            if (!destroyed) targets[p].push_back(q.index);
        }
    }
    return DirectedGeometricGraph(std::vector<Point2D>(points.begin(), points.end()),
                                  std::move(targets));
}

DirectedGeometricGraph build_hsp(std::span<const Point2D> points) {
    return sweep_build(points, [&](VertexIndex, const Candidate& r, const Candidate& q) {
        return r.dist < q.dist && distance(points[r.index], points[q.index]) < q.dist;
    });
}

std::size_t theta_cone_index(const Point2D& p, const Point2D& q, std::size_t cone_count) {
    const double width = 2.0 * std::numbers::pi / static_cast<double>(cone_count);
    double angle = std::atan2(q.y() - p.y(), q.x() - p.x()) + width / 2.0;
    if (angle < 0.0) angle += 2.0 * std::numbers::pi;
    const auto index = static_cast<std::size_t>(std::floor(angle / width));
    return index % cone_count;
}

DirectedGeometricGraph build_theta_graph(std::span<const Point2D> points, std::size_t cone_count) {
    if (cone_count < 3) throw std::invalid_argument("theta-graph needs at least 3 cones");
    require_distinct(points);
    const double width = 2.0 * std::numbers::pi / static_cast<double>(cone_count);

    struct Best {
        VertexIndex index;
        double projection;
        double dist;
    };
    std::vector<std::vector<VertexIndex>> targets(points.size());
    std::vector<std::optional<Best>> best(cone_count);
    for (VertexIndex p = 0; p < points.size(); ++p) {
        std::fill(best.begin(), best.end(), std::nullopt);
        for (VertexIndex q = 0; q < points.size(); ++q) {
            if (q == p) continue;
            const std::size_t cone = theta_cone_index(points[p], points[q], cone_count);
            const double bisector = width * static_cast<double>(cone);
            const double dx = points[q].x() - points[p].x();
            const double dy = points[q].y() - points[p].y();
            const Best cand{q, dx * std::cos(bisector) + dy * std::sin(bisector),
                            distance(points[p], points[q])};
            auto& slot = best[cone];
            if (!slot || cand.projection < slot->projection ||
                (cand.projection == slot->projection && cand.dist < slot->dist)) {
                slot = cand;
            }
        }
        for (const auto& slot : best) {
            if (slot) targets[p].push_back(slot->index);
        }
    }
    return DirectedGeometricGraph(std::vector<Point2D>(points.begin(), points.end()),
                                  std::move(targets));
}

std::vector<double> EdgeRankIndex::length_ladder() const {
    std::vector<double> ladder;
    for (const auto& e : edges) {
        if (ladder.empty() || ladder.back() != e.length) ladder.push_back(e.length);
    }
    return ladder;
}

EdgeRankIndex edge_rank_index(std::span<const Point2D> points) {
    EdgeRankIndex index;
    for (VertexIndex u = 0; u < points.size(); ++u) {
        for (VertexIndex v = u + 1; v < points.size(); ++v) {
            index.edges.push_back({u, v, distance(points[u], points[v]), 0});
        }
    }
    std::sort(index.edges.begin(), index.edges.end(), [](const RankedEdge& a, const RankedEdge& b) {
        if (a.length != b.length) return a.length < b.length;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    for (std::size_t k = 0; k < index.edges.size(); ++k) {
        index.edges[k].rank = k + 1;
        if (k > 0 && index.edges[k].length == index.edges[k - 1].length) {
            index.has_length_ties = true;
        }
    }
    return index;
}

DirectedGeometricGraph truncate_by_length(const DirectedGeometricGraph& graph, double max_length) {
    if (!(max_length >= 0.0)) throw std::invalid_argument("max_length must be non-negative");
    std::vector<std::vector<VertexIndex>> targets(graph.vertex_count());
    for (VertexIndex u = 0; u < graph.vertex_count(); ++u) {
        for (const auto& e : graph.out_edges(u)) {
            if (e.length <= max_length) targets[u].push_back(e.target);
        }
    }
    return DirectedGeometricGraph(graph.vertices(), std::move(targets));
}

DirectedGeometricGraph build_complete_truncated(std::span<const Point2D> points, double max_length) {
    if (!(max_length >= 0.0)) throw std::invalid_argument("max_length must be non-negative");
    require_distinct(points);
    std::vector<std::vector<VertexIndex>> targets(points.size());
    for (VertexIndex u = 0; u < points.size(); ++u) {
        for (VertexIndex v = 0; v < points.size(); ++v) {
            if (u != v && distance(points[u], points[v]) <= max_length) targets[u].push_back(v);
        }
    }
    return DirectedGeometricGraph(std::vector<Point2D>(points.begin(), points.end()),
                                  std::move(targets));
}

}  // namespace strongspan
