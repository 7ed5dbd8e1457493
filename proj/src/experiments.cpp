#include "strongspan/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "strongspan/analysis.hpp"
#include "strongspan/builders.hpp"
#include "strongspan/io.hpp"
#include "strongspan/random.hpp"

namespace strongspan {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(s);
    while (std::getline(ss, cur, sep)) out.push_back(trim(cur));
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::vector<double> parse_double_list(const std::string& value, std::size_t line_no) {
    std::vector<double> out;
    for (const auto& tok : split(value, ',')) {
        try {
            out.push_back(parse_double(tok));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

std::uint64_t parse_unsigned(const std::string& value, std::size_t line_no) {
    std::size_t used = 0;
    std::uint64_t out = 0;
    try {
        if (value.empty() || value.front() == '-') throw std::invalid_argument("negative");
        out = std::stoull(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != value.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                         value + "'");
    }
    return out;
}

struct MeanCi {
    double mean;
    double ci95;
};

MeanCi mean_ci(const std::vector<double>& xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    const double mean = sum / static_cast<double>(xs.size());
    if (xs.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    return {mean, 1.96 * sd / std::sqrt(static_cast<double>(xs.size()))};
}

bool same_key(double a, double b) { return std::abs(a - b) <= 1e-9; }

std::string optional_field(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

std::optional<double> parse_optional(const std::string& field) {
    if (field.empty()) return std::nullopt;
    return parse_double(field);
}

std::optional<double> metric_of(const SweepResult& r, const std::string& metric) {
    if (metric == "mean_spanning") return r.mean_spanning_ratio;
    if (metric == "mean_routing_destroyer") return r.mean_routing_destroyer;
    if (metric == "mean_routing_nearest") return r.mean_routing_nearest;
    throw GridMismatch("unknown metric '" + metric + "'");
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return in;
}

}  // namespace

void SweepConfig::validate() const {
    if (lambda_values.empty() || theta_values_degrees.empty()) {
        throw std::invalid_argument("sweep config needs at least one lambda and one theta");
    }
    if (instances < 1) throw std::invalid_argument("sweep config: instances must be >= 1");
    if (points_per_instance < 2) throw std::invalid_argument("sweep config: points must be >= 2");
    for (double l : lambda_values) {
        for (double t : theta_values_degrees) SpannerParams::from_degrees(l, t);
    }
    for (auto s : strategies) {
        if (s == RoutingStrategy::OvershootingDestroyer) {
            throw std::invalid_argument("sweep strategies are limited to destroyer and nearest");
        }
    }
}

SweepConfig parse_sweep_config(std::istream& in) {
    SweepConfig config;
    config.lambda_values.clear();
    config.theta_values_degrees.clear();
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        const std::string body = trim(hash == std::string::npos ? line : line.substr(0, hash));
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ParseError("line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (key == "lambda") {
            config.lambda_values = parse_double_list(value, line_no);
        } else if (key == "theta_deg") {
            config.theta_values_degrees = parse_double_list(value, line_no);
        } else if (key == "instances") {
            config.instances = parse_unsigned(value, line_no);
        } else if (key == "points") {
            config.points_per_instance = parse_unsigned(value, line_no);
        } else if (key == "seed") {
            config.seed = parse_unsigned(value, line_no);
        } else if (key == "strategies") {
            config.strategies.clear();
            for (const auto& name : split(value, ',')) {
                try {
                    config.strategies.push_back(parse_strategy(name));
                } catch (const std::invalid_argument& e) {
                    throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
                }
            }
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    try {
        config.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return config;
}

SweepConfig read_sweep_config_file(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_sweep_config(in);
}

std::vector<SweepResult> run_sweep(const SweepConfig& config,
                                   const std::function<void(std::size_t, std::size_t)>& on_instance) {
    config.validate();

    struct Cell {
        double theta_degrees;
        SpannerParams params;
        std::vector<double> spanning;
        std::vector<double> destroyer;
        std::vector<double> nearest;
        std::size_t max_degree = 0;
        std::size_t failures = 0;
    };
    std::vector<Cell> cells;
    for (double theta : config.theta_values_degrees) {
        for (double lambda : config.lambda_values) {
            cells.push_back({theta, SpannerParams::from_degrees(lambda, theta), {}, {}, {}, 0, 0});
        }
    }

    const bool want_destroyer =
        std::count(config.strategies.begin(), config.strategies.end(),
                   RoutingStrategy::DestroyerOfTarget) > 0;
    const bool want_nearest = std::count(config.strategies.begin(), config.strategies.end(),
                                         RoutingStrategy::NearestToTarget) > 0;

    auto violation = [](const Cell& cell, std::size_t instance, const std::string& what) {
        std::ostringstream msg;
        msg << "lambda=" << cell.params.lambda() << " theta_deg=" << cell.theta_degrees
            << " instance " << instance << ": " << what;
        return SweepInvariantViolation(msg.str());
    };

    for (std::size_t i = 0; i < config.instances; ++i) {
        const auto points = generate_points(config.points_per_instance, instance_seed(config.seed, i));
        for (auto& cell : cells) {
            const bool guaranteed = cell.params.stretch_guaranteed();
            const double t = cell.params.stretch_bound();
            const auto graph = build_glt(points, cell.params);
            cell.max_degree = std::max(cell.max_degree, max_out_degree(graph));

            const auto spanning = spanning_ratio(graph);
            if (guaranteed && (!spanning.all_reachable || spanning.ratio > t)) {
                throw violation(cell, i, "spanning ratio " + format_double(spanning.ratio) +
                                             " exceeds bound " + format_double(t));
            }
            cell.failures += spanning.unreachable_pairs;
            cell.spanning.push_back(spanning.ratio);

            if (want_destroyer) {
                const auto r = routing_ratio(graph, cell.params, RoutingStrategy::DestroyerOfTarget);
                if (guaranteed && (!r.all_reachable || r.ratio > t)) {
                    throw violation(cell, i, "destroyer routing failed or exceeded the bound");
                }
                cell.failures += r.unreachable_pairs;
                cell.destroyer.push_back(r.ratio);
            }
            if (want_nearest) {
                const auto r = routing_ratio(graph, cell.params, RoutingStrategy::NearestToTarget);
                cell.failures += r.unreachable_pairs;
                cell.nearest.push_back(r.ratio);
            }
        }
        if (on_instance) on_instance(i + 1, config.instances);
    }

    std::vector<SweepResult> results;
    for (const auto& cell : cells) {
        SweepResult r;
        r.lambda = cell.params.lambda();
        r.theta_degrees = cell.theta_degrees;
        r.failures = cell.failures;
        r.max_out_degree_observed = cell.max_degree;
        const auto s = mean_ci(cell.spanning);
        r.mean_spanning_ratio = s.mean;
        r.ci95_spanning = s.ci95;
        if (want_destroyer) {
            const auto d = mean_ci(cell.destroyer);
            r.mean_routing_destroyer = d.mean;
            r.ci95_routing_destroyer = d.ci95;
        }
        if (want_nearest) {
            const auto nr = mean_ci(cell.nearest);
            r.mean_routing_nearest = nr.mean;
            r.ci95_routing_nearest = nr.ci95;
        }
        results.push_back(r);
    }
    return results;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepResult>& results) {
    out << kSweepCsvHeader << '\n';
    for (const auto& r : results) {
        out << format_double(r.lambda) << ',' << format_double(r.theta_degrees) << ','
            << format_double(r.mean_spanning_ratio) << ',' << format_double(r.ci95_spanning) << ','
            << optional_field(r.mean_routing_destroyer) << ','
            << optional_field(r.ci95_routing_destroyer) << ','
            << optional_field(r.mean_routing_nearest) << ','
            << optional_field(r.ci95_routing_nearest) << ',' << r.max_out_degree_observed << ','
            << r.failures << '\n';
    }
}

std::vector<SweepResult> read_sweep_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || trim(line) != kSweepCsvHeader) {
        throw ParseError("line 1: expected sweep CSV header");
    }
    std::vector<SweepResult> results;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto f = split(trim(line), ',');
        if (f.size() != 10) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 10 fields");
        }
        try {
            SweepResult r;
            r.lambda = parse_double(f[0]);
            r.theta_degrees = parse_double(f[1]);
            r.mean_spanning_ratio = parse_double(f[2]);
            r.ci95_spanning = parse_double(f[3]);
            r.mean_routing_destroyer = parse_optional(f[4]);
            r.ci95_routing_destroyer = parse_optional(f[5]);
            r.mean_routing_nearest = parse_optional(f[6]);
            r.ci95_routing_nearest = parse_optional(f[7]);
            r.max_out_degree_observed = parse_unsigned(f[8], line_no);
            r.failures = parse_unsigned(f[9], line_no);
            results.push_back(r);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return results;
}

std::vector<ReferenceEntry> read_reference_csv(std::istream& in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    std::istringstream lines(text);
    std::string header;
    std::size_t line_no = 0;
    while (std::getline(lines, header)) {
        ++line_no;
        if (!trim(header).empty() && trim(header).front() != '#') break;
    }
    header = trim(header);
    if (header.empty()) throw ParseError("reference CSV is empty");

    std::vector<ReferenceEntry> out;
    if (header == kSweepCsvHeader) {
        std::istringstream sweep(text.substr(text.find(kSweepCsvHeader)));
        for (const auto& r : read_sweep_csv(sweep)) {
            out.push_back({r.lambda, r.theta_degrees, "mean_spanning", r.mean_spanning_ratio});
            if (r.mean_routing_destroyer) {
                out.push_back({r.lambda, r.theta_degrees, "mean_routing_destroyer",
                               *r.mean_routing_destroyer});
            }
            if (r.mean_routing_nearest) {
                out.push_back({r.lambda, r.theta_degrees, "mean_routing_nearest",
                               *r.mean_routing_nearest});
            }
        }
        return out;
    }

    const auto columns = split(header, ',');
    if (columns.size() < 2) throw ParseError("line " + std::to_string(line_no) + ": bad header");
    const std::string metric = columns[0];
    std::vector<double> lambdas;
    try {
        for (std::size_t c = 1; c < columns.size(); ++c) lambdas.push_back(parse_double(columns[c]));
    } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    std::string line;
    while (std::getline(lines, line)) {
        ++line_no;
        const std::string body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        const auto f = split(body, ',');
        if (f.size() != columns.size()) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(columns.size()) + " fields");
        }
        try {
            const double theta = parse_double(f[0]);
            for (std::size_t c = 1; c < f.size(); ++c) {
                out.push_back({lambdas[c - 1], theta, metric, parse_double(f[c])});
            }
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

std::vector<ReferenceEntry> read_reference_file(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_reference_csv(in);
}

ComparisonReport compare_to_reference(const std::vector<SweepResult>& results,
                                      const std::vector<ReferenceEntry>& reference,
                                      double tolerance) {
    ComparisonReport report;
    report.tolerance = tolerance;
    for (const auto& r : results) {
        bool covered = false;
        for (const auto& ref : reference) {
            if (!same_key(ref.lambda, r.lambda) || !same_key(ref.theta_degrees, r.theta_degrees)) {
                continue;
            }
            covered = true;
            const auto observed = metric_of(r, ref.metric);
            if (!observed) {
                throw GridMismatch("metric " + ref.metric + " was not computed for lambda=" +
                                   format_double(r.lambda) +
                                   " theta_deg=" + format_double(r.theta_degrees));
            }
            const double diff = std::abs(*observed - ref.value);
            report.cells.push_back(
                {r.lambda, r.theta_degrees, ref.metric, *observed, ref.value, diff});
            if (!(diff <= tolerance)) report.passed = false;
        }
        if (!covered) {
            throw GridMismatch("no reference entry for lambda=" + format_double(r.lambda) +
                               " theta_deg=" + format_double(r.theta_degrees));
        }
    }
    std::stable_sort(report.cells.begin(), report.cells.end(),
                     [](const CellComparison& a, const CellComparison& b) {
                         return a.abs_diff > b.abs_diff;
                     });
    return report;
}

ComparisonReport compare_to_reference(const std::vector<SweepResult>& results,
                                      const std::filesystem::path& reference, double tolerance) {
    return compare_to_reference(results, read_reference_file(reference), tolerance);
}

}  // namespace strongspan
