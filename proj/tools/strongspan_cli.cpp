#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "strongspan/analysis.hpp"
#include "strongspan/builders.hpp"
#include "strongspan/experiments.hpp"
#include "strongspan/io.hpp"
#include "strongspan/random.hpp"
#include "strongspan/routing.hpp"

namespace ss = strongspan;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class Writer>
void write_output(const std::string& path, Writer&& writer) {
    if (path.empty() || path == "-") {
        writer(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    writer(out);
    if (!out) throw UsageError("write failed for " + path);
}

struct GenArgs {
    std::size_t n = 0;
    std::uint64_t seed = 1;
    std::string output;
};

int run_gen(const GenArgs& args) {
    const auto points = ss::generate_points(args.n, args.seed);
    write_output(args.output, [&](std::ostream& out) { ss::write_points(out, points); });
    return kOk;
}

struct BuildArgs {
    std::string graph;
    std::optional<double> lambda;
    std::optional<double> theta_deg;
    std::size_t cones = 8;
    std::string input;
    std::string output;
};

ss::SpannerParams params_of(const std::optional<double>& lambda, const std::optional<double>& theta_deg) {
    if (!lambda || !theta_deg) throw UsageError("--lambda and --theta-deg are required");
    return ss::SpannerParams::from_degrees(*lambda, *theta_deg);
}

int run_build(const BuildArgs& args) {
    const auto points = ss::read_points_file(args.input);
    ss::DirectedGeometricGraph graph;
    if (args.graph == "glt") {
        graph = ss::build_glt(points, params_of(args.lambda, args.theta_deg));
    } else if (args.graph == "hsp") {
        graph = ss::build_hsp(points);
    } else {
        graph = ss::build_theta_graph(points, args.cones);
    }
    write_output(args.output, [&](std::ostream& out) { ss::write_graph(out, graph); });
    return kOk;
}

struct AnalyzeArgs {
    bool spanning = false;
    bool strong = false;
    bool out_degree = false;
    std::optional<double> t;
    std::string input;
};

int run_analyze(AnalyzeArgs args) {
    const auto graph = ss::read_graph_file(args.input);
    if (!args.spanning && !args.strong && !args.out_degree) args.spanning = args.out_degree = true;
    if (args.strong && !args.t) throw UsageError("--strong needs --t");
    if (args.t && !(*args.t >= 1.0)) throw UsageError("--t must be at least 1");
    int status = kOk;

    if (args.out_degree) std::cout << "max_out_degree " << ss::max_out_degree(graph) << '\n';
    if (args.spanning) {
        if (graph.vertex_count() < 2) throw UsageError("spanning ratio needs at least 2 vertices");
        const auto report = ss::spanning_ratio(graph);
        std::cout << "spanning_ratio " << ss::format_double(report.ratio) << " witness "
                  << report.witness.first << ' ' << report.witness.second << '\n';
        if (!report.all_reachable) {
            std::cout << "unreachable_pairs " << report.unreachable_pairs << " first "
                      << report.first_unreachable->first << ' ' << report.first_unreachable->second << '\n';
            status = kCheckFailed;
        }
        if (args.t && report.ratio > *args.t) status = kCheckFailed;
    }
    if (args.strong) {
        const auto cert = ss::verify_strong_spanner(graph, *args.t);
        std::cout << "strong_spanner " << (cert.holds ? "holds" : "fails") << " t "
                  << ss::format_double(cert.t_used);
        if (cert.failing_pair) std::cout << " pair " << cert.failing_pair->first << ' ' << cert.failing_pair->second;
        std::cout << '\n';
        if (!cert.holds) status = kCheckFailed;
    }
    return status;
}

struct RouteArgs {
    std::size_t from = 0;
    std::size_t to = 0;
    std::string strategy;
    std::optional<double> lambda;
    std::optional<double> theta_deg;
    std::string input;
};

int run_route(const RouteArgs& args) {
    const auto graph = ss::read_graph_file(args.input);
    const auto params = params_of(args.lambda, args.theta_deg);
    if (args.from >= graph.vertex_count() || args.to >= graph.vertex_count()) {
        throw UsageError("vertex index out of range");
    }
    if (args.from == args.to) throw UsageError("--from and --to must differ");
    const auto trace = ss::route(graph, params, args.from, args.to, ss::parse_strategy(args.strategy));
    for (std::size_t i = 0; i < trace.vertex_sequence.size(); ++i) {
        std::cout << (i ? " " : "") << trace.vertex_sequence[i];
    }
    std::cout << " : " << ss::format_double(trace.total_length) << '\n';
    if (trace.outcome != ss::RoutingOutcome::Delivered) {
        std::cerr << "routing " << ss::to_string(trace.outcome) << '\n';
        return kCheckFailed;
    }
    return kOk;
}

struct SweepArgs {
    std::string config;
    std::string output;
    bool progress = false;
};

int run_sweep_command(const SweepArgs& args) {
    const auto config = ss::read_sweep_config_file(args.config);
    std::function<void(std::size_t, std::size_t)> progress;
    if (args.progress) {
        progress = [](std::size_t done, std::size_t total) {
            std::cerr << "\rinstance " << done << '/' << total << std::flush;
            if (done == total) std::cerr << '\n';
        };
    }
    try {
        const auto results = ss::run_sweep(config, progress);
        write_output(args.output, [&](std::ostream& out) { ss::write_sweep_csv(out, results); });
    } catch (const ss::SweepInvariantViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kOk;
}

struct VerifyArgs {
    std::string reference;
    double tolerance = 0.0;
    std::string input;
    std::size_t show = 5;
};

int run_verify(const VerifyArgs& args) {
    if (!(args.tolerance >= 0.0)) throw UsageError("--tolerance must be non-negative");
    std::ifstream in(args.input);
    if (!in) throw ss::ParseError("cannot open " + args.input);
    const auto results = ss::read_sweep_csv(in);
    const auto report = ss::compare_to_reference(results, args.reference, args.tolerance);
    std::cout << (report.passed ? "PASS" : "FAIL") << " cells " << report.cells.size() << " tolerance "
              << ss::format_double(report.tolerance) << '\n';
    for (std::size_t i = 0; i < report.cells.size() && i < args.show; ++i) {
        const auto& c = report.cells[i];
        std::printf("  %-24s lambda %-5g theta %-3g observed %.4f reference %.4f diff %.4f\n", c.metric.c_str(),
                    c.lambda, c.theta_degrees, c.observed, c.reference, c.abs_diff);
    }
    std::fflush(stdout);
    return report.passed ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Directed geometric spanners: construction, analysis, routing and sweeps"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate uniform random points in the unit square");
    gen_cmd->add_option("-n", gen.n, "Number of points")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", gen.seed, "PRNG seed");
    gen_cmd->add_option("-o,--output", gen.output, "Output point file (default stdout)");

    BuildArgs build;
    auto* build_cmd = app.add_subcommand("build", "Build a graph over a point file");
    build_cmd->add_option("--graph", build.graph, "Graph family")
        ->required()
        ->check(CLI::IsMember({"glt", "hsp", "theta"}));
    build_cmd->add_option("--lambda", build.lambda, "Half-plane parameter in [0.5, 1]");
    build_cmd->add_option("--theta-deg", build.theta_deg, "Cone half-angle in degrees, [0, 90]");
    build_cmd->add_option("--cones", build.cones, "Cone count for the theta-graph")->check(CLI::Range(3, 1 << 20));
    build_cmd->add_option("-i,--input", build.input, "Input point file")->required();
    build_cmd->add_option("-o,--output", build.output, "Output graph file (default stdout)");

    AnalyzeArgs analyze;
    auto* analyze_cmd = app.add_subcommand("analyze", "Report stretch, strong-spanner and degree checks");
    analyze_cmd->add_flag("--spanning", analyze.spanning, "Spanning ratio over all ordered pairs");
    analyze_cmd->add_flag("--strong", analyze.strong, "Check the strong t-spanner property (needs --t)");
    analyze_cmd->add_option("--t", analyze.t, "Stretch to check against");
    analyze_cmd->add_flag("--out-degree", analyze.out_degree, "Maximum out-degree");
    analyze_cmd->add_option("-i,--input", analyze.input, "Input graph file")->required();

    RouteArgs route;
    auto* route_cmd = app.add_subcommand("route", "Route one message with a local strategy");
    route_cmd->add_option("--from", route.from, "Source vertex")->required();
    route_cmd->add_option("--to", route.to, "Destination vertex")->required();
    route_cmd->add_option("--strategy", route.strategy, "Forwarding rule")
        ->required()
        ->check(CLI::IsMember({"destroyer", "nearest", "overshoot"}));
    route_cmd->add_option("--lambda", route.lambda, "Half-plane parameter")->required();
    route_cmd->add_option("--theta-deg", route.theta_deg, "Cone half-angle in degrees")->required();
    route_cmd->add_option("-i,--input", route.input, "Input graph file")->required();

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a (lambda, theta) experiment grid");
    sweep_cmd->add_option("--config", sweep.config, "Sweep config file")->required();
    sweep_cmd->add_option("-o,--output", sweep.output, "Output CSV (default stdout)");
    sweep_cmd->add_flag("--progress", sweep.progress, "Report progress on stderr");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Compare a sweep CSV with a reference table");
    verify_cmd->add_option("--reference", verify.reference, "Reference CSV")->required();
    verify_cmd->add_option("--tolerance", verify.tolerance, "Allowed absolute difference")->required();
    verify_cmd->add_option("-i,--input", verify.input, "Sweep CSV to check")->required();
    verify_cmd->add_option("--show", verify.show, "Number of worst cells to list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*build_cmd) return run_build(build);
        if (*analyze_cmd) return run_analyze(analyze);
        if (*route_cmd) return run_route(route);
        if (*sweep_cmd) return run_sweep_command(sweep);
        if (*verify_cmd) return run_verify(verify);
    } catch (const ss::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const ss::GridMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return kUsage;
}
