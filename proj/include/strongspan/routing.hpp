#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "strongspan/analysis.hpp"
#include "strongspan/geometry.hpp"
#include "strongspan/graph.hpp"

namespace strongspan {

enum class RoutingStrategy {
    /// Forward to the closest out-neighbour that destroyed the target.
    DestroyerOfTarget,
    /// Forward to the out-neighbour closest to the target.
    NearestToTarget,
    /// Forward to the farthest out-neighbour r with the target in K(u, r),
    /// even when |ur| > |u target|. Still makes progress for lambda < 1 but
    /// hops may overshoot the target, so paths are not strong.
    OvershootingDestroyer,
};

std::string_view to_string(RoutingStrategy strategy);
/// Accepts "destroyer", "nearest" and "overshoot". Throws std::invalid_argument otherwise.
RoutingStrategy parse_strategy(std::string_view name);

enum class RoutingOutcome { Delivered, FailedNoMove, FailedHopLimit };

std::string_view to_string(RoutingOutcome outcome);

struct RoutingTrace {
    std::vector<VertexIndex> vertex_sequence;
    double total_length = 0.0;
    std::size_t hop_count = 0;
    RoutingOutcome outcome = RoutingOutcome::FailedNoMove;
};

struct NeighbourView {
    VertexIndex index;
    Point2D position;
};

/// Everything a forwarding decision may look at: the current vertex, its
/// out-neighbours, and the destination.
struct LocalView {
    Point2D current;
    std::span<const NeighbourView> neighbours;
    VertexIndex destination;
    Point2D destination_position;
};

/// One forwarding decision. Returns the chosen neighbour, or nullopt if no
/// neighbour is admissible.
std::optional<VertexIndex> next_hop(const LocalView& view, const SpannerParams& params,
                                    RoutingStrategy strategy);

/// Routes many queries over one graph. Keeps a reference to `graph`, which
/// must outlive the router.
class Router {
public:
    Router(const DirectedGeometricGraph& graph, const SpannerParams& params);

    /// Same contract as the free function route().
    RoutingTrace route(VertexIndex source, VertexIndex dest, RoutingStrategy strategy,
                       std::optional<std::size_t> hop_limit = std::nullopt) const;

private:
    const DirectedGeometricGraph* graph_;
    SpannerParams params_;
    std::vector<std::vector<NeighbourView>> neighbours_;
};

/// Routes from source to dest. hop_limit defaults to the vertex count.
/// Throws std::out_of_range on bad indices and std::invalid_argument if
/// source == dest or hop_limit < 1.
RoutingTrace route(const DirectedGeometricGraph& graph, const SpannerParams& params,
                   VertexIndex source, VertexIndex dest, RoutingStrategy strategy,
                   std::optional<std::size_t> hop_limit = std::nullopt);

/// max over ordered pairs of route length / |pq|. Pairs that are not
/// delivered are counted in `unreachable_pairs`.
StretchReport routing_ratio(const DirectedGeometricGraph& graph, const SpannerParams& params,
                            RoutingStrategy strategy);

}  // namespace strongspan
