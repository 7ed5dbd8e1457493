#include "strongspan/routing.hpp"

#include <stdexcept>
#include <string>

namespace strongspan {

std::string_view to_string(RoutingStrategy strategy) {
    switch (strategy) {
        case RoutingStrategy::DestroyerOfTarget: return "destroyer";
        case RoutingStrategy::NearestToTarget: return "nearest";
        case RoutingStrategy::OvershootingDestroyer: return "overshoot";
    }
    return "unknown";
}

RoutingStrategy parse_strategy(std::string_view name) {
    if (name == "destroyer") return RoutingStrategy::DestroyerOfTarget;
    if (name == "nearest") return RoutingStrategy::NearestToTarget;
    if (name == "overshoot") return RoutingStrategy::OvershootingDestroyer;
    throw std::invalid_argument("unknown routing strategy: " + std::string(name));
}

std::string_view to_string(RoutingOutcome outcome) {
    switch (outcome) {
        case RoutingOutcome::Delivered: return "delivered";
        case RoutingOutcome::FailedNoMove: return "failed_no_move";
        case RoutingOutcome::FailedHopLimit: return "failed_hop_limit";
    }
    return "unknown";
}

namespace {

// (key, x, y, index) lexicographic comparison.
bool better(double key, const NeighbourView& a, double best_key, const NeighbourView& b) {
    if (key != best_key) return key < best_key;
    if (a.position.x() != b.position.x()) return a.position.x() < b.position.x();
    if (a.position.y() != b.position.y()) return a.position.y() < b.position.y();
    return a.index < b.index;
}

}  // namespace

std::optional<VertexIndex> next_hop(const LocalView& view, const SpannerParams& params,
                                    RoutingStrategy strategy) {
    for (const auto& n : view.neighbours) {
        if (n.index == view.destination) return n.index;
    }
    const NeighbourView* best = nullptr;
    double best_key = 0.0;
    switch (strategy) {
        case RoutingStrategy::DestroyerOfTarget: {
            const double reach = distance(view.current, view.destination_position);
            for (const auto& n : view.neighbours) {
                const double len = distance(view.current, n.position);
                if (len > reach) continue;
                if (!in_destruction_region(view.current, n.position, view.destination_position,
                                           params)) {
                    continue;
                }
                if (!best || better(len, n, best_key, *best)) {
                    best = &n;
                    best_key = len;
                }
            }
            break;
        }
        case RoutingStrategy::OvershootingDestroyer: {
            // Farthest first: the key is the negated length.
            for (const auto& n : view.neighbours) {
                if (!in_destruction_region(view.current, n.position, view.destination_position,
                                           params)) {
                    continue;
                }
                const double key = -distance(view.current, n.position);
                if (!best || better(key, n, best_key, *best)) {
                    best = &n;
                    best_key = key;
                }
            }
            break;
        }
        case RoutingStrategy::NearestToTarget: {
            for (const auto& n : view.neighbours) {
                const double key = distance(n.position, view.destination_position);
                if (!best || better(key, n, best_key, *best)) {
                    best = &n;
                    best_key = key;
                }
            }
            break;
        }
    }
    if (!best) return std::nullopt;
    return best->index;
}

Router::Router(const DirectedGeometricGraph& graph, const SpannerParams& params)
    : graph_(&graph), params_(params), neighbours_(graph.vertex_count()) {
    for (VertexIndex u = 0; u < graph.vertex_count(); ++u) {
        for (const auto& e : graph.out_edges(u)) {
            neighbours_[u].push_back({e.target, graph.vertex(e.target)});
        }
    }
}

RoutingTrace Router::route(VertexIndex source, VertexIndex dest, RoutingStrategy strategy,
                           std::optional<std::size_t> hop_limit) const {
    const auto& graph = *graph_;
    if (source >= graph.vertex_count() || dest >= graph.vertex_count()) {
        throw std::out_of_range("route: vertex index out of range");
    }
    if (source == dest) throw std::invalid_argument("route: source equals destination");
    const std::size_t limit = hop_limit.value_or(graph.vertex_count());
    if (limit < 1) throw std::invalid_argument("route: hop_limit must be at least 1");

    RoutingTrace trace;
    trace.vertex_sequence.push_back(source);
    VertexIndex current = source;
    while (trace.hop_count < limit) {
        const LocalView view{graph.vertex(current), neighbours_[current], dest, graph.vertex(dest)};
        const auto hop = next_hop(view, params_, strategy);
        if (!hop) {
            trace.outcome = RoutingOutcome::FailedNoMove;
            return trace;
        }
        trace.total_length += distance(graph.vertex(current), graph.vertex(*hop));
        trace.vertex_sequence.push_back(*hop);
        ++trace.hop_count;
        current = *hop;
        if (current == dest) {
            trace.outcome = RoutingOutcome::Delivered;
            return trace;
        }
    }
    trace.outcome = RoutingOutcome::FailedHopLimit;
    return trace;
}

RoutingTrace route(const DirectedGeometricGraph& graph, const SpannerParams& params,
                   VertexIndex source, VertexIndex dest, RoutingStrategy strategy,
                   std::optional<std::size_t> hop_limit) {
    return Router(graph, params).route(source, dest, strategy, hop_limit);
}

StretchReport routing_ratio(const DirectedGeometricGraph& graph, const SpannerParams& params,
                            RoutingStrategy strategy) {
    const std::size_t n = graph.vertex_count();
    const Router router(graph, params);
    StretchReport report;
    if (n >= 2) report.witness = {0, 1};
    for (VertexIndex p = 0; p < n; ++p) {
        for (VertexIndex q = 0; q < n; ++q) {
            if (q == p) continue;
            const auto trace = router.route(p, q, strategy);
            if (trace.outcome != RoutingOutcome::Delivered) {
                report.all_reachable = false;
                ++report.unreachable_pairs;
                if (!report.first_unreachable) report.first_unreachable = VertexPair{p, q};
                continue;
            }
            const double ratio = trace.total_length / distance(graph.vertex(p), graph.vertex(q));
            if (ratio > report.ratio) {
                report.ratio = ratio;
                report.witness = {p, q};
            }
        }
    }
    return report;
}

}  // namespace strongspan
