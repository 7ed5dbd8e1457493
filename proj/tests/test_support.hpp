#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <cstdint>
#include <random>
#include <vector>

#include "strongspan/analysis.hpp"
#include "strongspan/geometry.hpp"
#include "strongspan/graph.hpp"

namespace strongspan::test {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }
    std::size_t index(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
    }
    Point2D point(double lo = 0.0, double hi = 1.0) { return Point2D(uniform(lo, hi), uniform(lo, hi)); }

    std::vector<Point2D> points(std::size_t n, double lo = 0.0, double hi = 1.0) {
        std::vector<Point2D> out;
        for (std::size_t i = 0; i < n; ++i) out.push_back(point(lo, hi));
        return out;
    }

    /// Uniformly random valid params with lambda in (1/2, 1], theta in [0, pi/2).
    SpannerParams params() {
        return SpannerParams(uniform(0.5000001, 1.0), uniform(0.0, std::numbers::pi / 2.0 - 1e-6));
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

/// Bellman-Ford style relaxation to a fixed point: the reference for
/// shortest_path_lengths_from.
inline std::vector<double> relaxation_oracle(const DirectedGeometricGraph& g, VertexIndex source,
                                             double cap = kUnreachable) {
    std::vector<double> dist(g.vertex_count(), kUnreachable);
    dist[source] = 0.0;
    for (std::size_t round = 0; round < g.vertex_count(); ++round) {
        bool changed = false;
        for (VertexIndex u = 0; u < g.vertex_count(); ++u) {
            if (dist[u] == kUnreachable) continue;
            for (const auto& e : g.out_edges(u)) {
                if (e.length > cap) continue;
                if (dist[u] + e.length < dist[e.target]) {
                    dist[e.target] = dist[u] + e.length;
                    changed = true;
                }
            }
        }
        if (!changed) break;
    }
    return dist;
}

/// Membership in R(p, q, lambda) ∩ theta-cone(p, q), with the lens given as
/// the two disks: C1 centred at p with radius |pq|, C2 centred at
/// p + lambda (q - p) with radius lambda |pq|. `slack` receives the smallest
/// distance of any condition to its boundary.
inline bool destroyer_lens_oracle(const Point2D& p, const Point2D& q, const Point2D& r,
                                  const SpannerParams& params, double* slack = nullptr) {
    const double pq = std::hypot(q.x() - p.x(), q.y() - p.y());
    const double cx = p.x() + params.lambda() * (q.x() - p.x());
    const double cy = p.y() + params.lambda() * (q.y() - p.y());
    const double in_c1 = pq - std::hypot(r.x() - p.x(), r.y() - p.y());
    const double in_c2 = params.lambda() * pq - std::hypot(r.x() - cx, r.y() - cy);
    const double ux = q.x() - p.x(), uy = q.y() - p.y();
    const double vx = r.x() - p.x(), vy = r.y() - p.y();
    const double norms = std::hypot(ux, uy) * std::hypot(vx, vy);
    const double ang = norms == 0.0 ? 0.0 : std::acos(std::clamp((ux * vx + uy * vy) / norms, -1.0, 1.0));
    const double in_cone = params.theta() - ang;
    if (slack) *slack = std::min({std::abs(in_c1), std::abs(in_c2), std::abs(in_cone)});
    return in_c1 >= 0.0 && in_c2 >= 0.0 && in_cone >= 0.0;
}

}  // namespace strongspan::test
