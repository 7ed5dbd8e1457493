#include "strongspan/analysis.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace strongspan {

namespace {

using HeapEntry = std::pair<double, VertexIndex>;
using MinHeap = std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>>;

// Settles vertices from the heap, relaxing only edges of length <= cap.
// Adjacency lists are sorted by length, so each scan stops at the cap.
// Stops early once `stop_at` is settled.
void propagate(const DirectedGeometricGraph& graph, std::vector<double>& dist, MinHeap& heap,
               double cap, std::optional<VertexIndex> stop_at = std::nullopt) {
    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[u]) continue;
        if (stop_at && u == *stop_at) return;
        for (const auto& e : graph.out_edges(u)) {
            if (e.length > cap) break;
            const double nd = d + e.length;
            if (nd < dist[e.target]) {
                dist[e.target] = nd;
                heap.emplace(nd, e.target);
            }
        }
    }
}

void require_source(const DirectedGeometricGraph& graph, VertexIndex source) {
    if (source >= graph.vertex_count()) throw std::out_of_range("source vertex out of range");
}

}  // namespace

std::vector<double> shortest_path_lengths_from(const DirectedGeometricGraph& graph,
                                               VertexIndex source, std::optional<double> edge_cap) {
    require_source(graph, source);
    std::vector<double> dist(graph.vertex_count(), kUnreachable);
    dist[source] = 0.0;
    MinHeap heap;
    heap.emplace(0.0, source);
    propagate(graph, dist, heap, edge_cap.value_or(kUnreachable));
    return dist;
}

StretchReport spanning_ratio(const DirectedGeometricGraph& graph) {
    const std::size_t n = graph.vertex_count();
    if (n < 2) throw std::invalid_argument("spanning_ratio needs at least 2 vertices");
    StretchReport report;
    report.witness = {0, 1};
    for (VertexIndex p = 0; p < n; ++p) {
        const auto dist = shortest_path_lengths_from(graph, p);
        for (VertexIndex q = 0; q < n; ++q) {
            if (q == p) continue;
            if (dist[q] == kUnreachable) {
                report.all_reachable = false;
                ++report.unreachable_pairs;
                if (!report.first_unreachable) report.first_unreachable = VertexPair{p, q};
                continue;
            }
            const double ratio = dist[q] / distance(graph.vertex(p), graph.vertex(q));
            if (ratio > report.ratio) {
                report.ratio = ratio;
                report.witness = {p, q};
            }
        }
    }
    return report;
}

StrongSpannerCertificate verify_strong_spanner(const DirectedGeometricGraph& graph, double t) {
    const std::size_t n = graph.vertex_count();
    StrongSpannerCertificate cert;
    cert.t_used = t;

    struct Arc {
        VertexIndex from;
        VertexIndex to;
        double length;
    };
    std::vector<Arc> arcs;
    arcs.reserve(graph.edge_count());
    for (VertexIndex u = 0; u < n; ++u) {
        for (const auto& e : graph.out_edges(u)) arcs.push_back({u, e.target, e.length});
    }
    std::stable_sort(arcs.begin(), arcs.end(),
                     [](const Arc& a, const Arc& b) { return a.length < b.length; });

    // Per source, raise the edge cap through the targets in distance order.
    // Inserting edges only shortens paths, so distances are repaired by
    // propagating from the improved endpoints instead of restarting.
    std::vector<double> dist(n);
    std::vector<std::pair<double, VertexIndex>> targets;
    for (VertexIndex p = 0; p < n; ++p) {
        targets.clear();
        for (VertexIndex q = 0; q < n; ++q) {
            if (q != p) targets.emplace_back(distance(graph.vertex(p), graph.vertex(q)), q);
        }
        std::sort(targets.begin(), targets.end());

        std::fill(dist.begin(), dist.end(), kUnreachable);
        dist[p] = 0.0;
        std::size_t next_arc = 0;
        MinHeap heap;
        for (const auto& [cap, q] : targets) {
            for (; next_arc < arcs.size() && arcs[next_arc].length <= cap; ++next_arc) {
                const Arc& a = arcs[next_arc];
                if (dist[a.from] == kUnreachable) continue;
                const double nd = dist[a.from] + a.length;
                if (nd < dist[a.to]) {
                    dist[a.to] = nd;
                    heap.emplace(nd, a.to);
                }
            }
            propagate(graph, dist, heap, cap);
            if (!(dist[q] <= t * cap)) {
                cert.holds = false;
                cert.failing_pair = VertexPair{p, q};
                return cert;
            }
        }
    }
    return cert;
}

StrongSpannerCertificate verify_strong_spanner_per_pair(const DirectedGeometricGraph& graph,
                                                        double t) {
    const std::size_t n = graph.vertex_count();
    StrongSpannerCertificate cert;
    cert.t_used = t;
    std::vector<double> dist(n);
    for (VertexIndex p = 0; p < n; ++p) {
        for (VertexIndex q = 0; q < n; ++q) {
            if (q == p) continue;
            const double cap = distance(graph.vertex(p), graph.vertex(q));
            std::fill(dist.begin(), dist.end(), kUnreachable);
            dist[p] = 0.0;
            MinHeap heap;
            heap.emplace(0.0, p);
            propagate(graph, dist, heap, cap, q);
            if (!(dist[q] <= t * cap)) {
                cert.holds = false;
                cert.failing_pair = VertexPair{p, q};
                return cert;
            }
        }
    }
    return cert;
}

std::size_t max_out_degree(const DirectedGeometricGraph& graph) {
    std::size_t best = 0;
    for (VertexIndex u = 0; u < graph.vertex_count(); ++u) {
        best = std::max(best, graph.out_edges(u).size());
    }
    return best;
}

StretchReport subgraph_spanner_ratio(const DirectedGeometricGraph& subgraph,
                                     const DirectedGeometricGraph& host) {
    if (subgraph.vertices() != host.vertices()) {
        throw std::invalid_argument("subgraph and host have different vertex sets");
    }
    const std::size_t n = host.vertex_count();
    StretchReport report;
    if (n >= 2) report.witness = {0, 1};
    for (VertexIndex p = 0; p < n; ++p) {
        const auto host_dist = shortest_path_lengths_from(host, p);
        const auto sub_dist = shortest_path_lengths_from(subgraph, p);
        for (VertexIndex q = 0; q < n; ++q) {
            if (q == p || host_dist[q] == kUnreachable) continue;
            if (sub_dist[q] == kUnreachable) {
                report.all_reachable = false;
                ++report.unreachable_pairs;
                if (!report.first_unreachable) report.first_unreachable = VertexPair{p, q};
                continue;
            }
            const double ratio = sub_dist[q] / host_dist[q];
            if (ratio > report.ratio) {
                report.ratio = ratio;
                report.witness = {p, q};
            }
        }
    }
    return report;
}

bool strongly_connected(const DirectedGeometricGraph& graph) {
    for (VertexIndex p = 0; p < graph.vertex_count(); ++p) {
        const auto dist = shortest_path_lengths_from(graph, p);
        if (std::find(dist.begin(), dist.end(), kUnreachable) != dist.end()) return false;
    }
    return true;
}

}  // namespace strongspan
