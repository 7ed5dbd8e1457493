#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strongspan/routing.hpp"

namespace strongspan {

/// A grid of (lambda, theta) cells evaluated on shared random instances.
struct SweepConfig {
    std::vector<double> lambda_values;
    std::vector<double> theta_values_degrees;
    std::size_t instances = 200;
    std::size_t points_per_instance = 200;
    std::uint64_t seed = 1;
    std::vector<RoutingStrategy> strategies{RoutingStrategy::DestroyerOfTarget,
                                            RoutingStrategy::NearestToTarget};

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

/// Reads "key = value" lines ('#' comments). Keys: lambda, theta_deg,
/// instances, points, seed, strategies. List values are comma-separated.
/// Throws ParseError on malformed input.
SweepConfig parse_sweep_config(std::istream& in);
SweepConfig read_sweep_config_file(const std::filesystem::path& path);

/// Per-cell aggregates over instances. Each instance contributes its
/// maximum ratio over all ordered pairs; ci95 is 1.96 s / sqrt(instances).
struct SweepResult {
    double lambda = 0.0;
    double theta_degrees = 0.0;
    double mean_spanning_ratio = 0.0;
    double ci95_spanning = 0.0;
    std::optional<double> mean_routing_destroyer;
    std::optional<double> ci95_routing_destroyer;
    std::optional<double> mean_routing_nearest;
    std::optional<double> ci95_routing_nearest;
    std::size_t max_out_degree_observed = 0;
    /// Ordered pairs not delivered, summed over strategies and instances.
    std::size_t failures = 0;
};

/// A sweep cell with a stretch guarantee produced a routing failure or a
/// ratio above the bound.
class SweepInvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Runs the sweep. Instance i uses generate_points(points, instance_seed(seed, i))
/// in every cell. Results are ordered by (theta, lambda). `on_instance`
/// receives (instances done, total) after each instance.
std::vector<SweepResult> run_sweep(
    const SweepConfig& config,
    const std::function<void(std::size_t, std::size_t)>& on_instance = {});

inline constexpr const char* kSweepCsvHeader =
    "lambda,theta_deg,mean_spanning,ci95_spanning,mean_routing_destroyer,ci95_routing_destroyer,"
    "mean_routing_nearest,ci95_routing_nearest,max_out_degree,failures";

void write_sweep_csv(std::ostream& out, const std::vector<SweepResult>& results);
std::vector<SweepResult> read_sweep_csv(std::istream& in);

/// Reference values keyed by (lambda, theta, metric). Metric names are the
/// sweep CSV column names (mean_spanning, mean_routing_destroyer, ...).
struct ReferenceEntry {
    double lambda;
    double theta_degrees;
    std::string metric;
    double value;
};

/// Loads either a sweep CSV (every mean column becomes a metric) or a wide
/// table whose header is "<metric>,<lambda_1>,...,<lambda_k>" followed by
/// rows "<theta>,<v_1>,...,<v_k>".
std::vector<ReferenceEntry> read_reference_csv(std::istream& in);
std::vector<ReferenceEntry> read_reference_file(const std::filesystem::path& path);

struct CellComparison {
    double lambda;
    double theta_degrees;
    std::string metric;
    double observed;
    double reference;
    double abs_diff;
};

struct ComparisonReport {
    bool passed = true;
    double tolerance = 0.0;
    /// Sorted by descending abs_diff.
    std::vector<CellComparison> cells;
};

/// Grid mismatch between results and reference.
class GridMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Compares every reference entry whose (lambda, theta) cell appears in the
/// results. Throws GridMismatch if a result cell has no reference entry or a
/// referenced metric was not computed.
ComparisonReport compare_to_reference(const std::vector<SweepResult>& results,
                                      const std::vector<ReferenceEntry>& reference,
                                      double tolerance);
ComparisonReport compare_to_reference(const std::vector<SweepResult>& results,
                                      const std::filesystem::path& reference, double tolerance);

}  // namespace strongspan
