#include "strongspan/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace strongspan {

namespace {

std::string strip_comment(const std::string& line) {
    const auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

std::size_t parse_index(const std::string& token, std::size_t line_no) {
    std::size_t value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end) fail(line_no, "expected an index, got '" + token + "'");
    return value;
}

Point2D parse_point(const std::vector<std::string>& toks, std::size_t line_no) {
    if (toks.size() != 2) fail(line_no, "expected \"x y\"");
    try {
        return Point2D(parse_double(toks[0]), parse_double(toks[1]));
    } catch (const ParseError& e) {
        fail(line_no, e.what());
    } catch (const std::invalid_argument& e) {
        fail(line_no, e.what());
    }
}

std::string g17(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return in;
}

}  // namespace

double parse_double(const std::string& token) {
    double value = 0.0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError("expected a number, got '" + token + "'");
    }
    return value;
}

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::vector<Point2D> read_points(std::istream& in) {
    std::vector<Point2D> points;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = strip_comment(line);
        if (blank(body)) continue;
        points.push_back(parse_point(tokens_of(body), line_no));
    }
    return points;
}

std::vector<Point2D> read_points_file(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_points(in);
}

void write_points(std::ostream& out, const std::vector<Point2D>& points) {
    for (const auto& p : points) out << g17(p.x()) << ' ' << g17(p.y()) << '\n';
}

DirectedGeometricGraph read_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> std::vector<std::string> {
        while (std::getline(in, line)) {
            ++line_no;
            const std::string body = strip_comment(line);
            if (!blank(body)) return tokens_of(body);
        }
        fail(line_no, "unexpected end of file");
    };

    const auto header = next_line();
    if (header.size() != 2) fail(line_no, "expected header \"n m\"");
    const std::size_t n = parse_index(header[0], line_no);
    const std::size_t m = parse_index(header[1], line_no);

    std::vector<Point2D> vertices;
    vertices.reserve(n);
    for (std::size_t i = 0; i < n; ++i) vertices.push_back(parse_point(next_line(), line_no));

    std::vector<std::vector<VertexIndex>> targets(n);
    for (std::size_t k = 0; k < m; ++k) {
        const auto toks = next_line();
        if (toks.size() != 3) fail(line_no, "expected \"i j length\"");
        const std::size_t i = parse_index(toks[0], line_no);
        const std::size_t j = parse_index(toks[1], line_no);
        double length = 0.0;
        try {
            length = parse_double(toks[2]);
        } catch (const ParseError& e) {
            fail(line_no, e.what());
        }
        if (i >= n || j >= n) fail(line_no, "edge endpoint out of range");
        const double expected = distance(vertices[i], vertices[j]);
        if (!(std::abs(length - expected) <= 1e-12 * std::max(1.0, expected))) {
            fail(line_no, "edge length does not match vertex coordinates");
        }
        targets[i].push_back(j);
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (!blank(strip_comment(line))) fail(line_no, "trailing content after edge list");
    }
    try {
        return DirectedGeometricGraph(std::move(vertices), std::move(targets));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

DirectedGeometricGraph read_graph_file(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const DirectedGeometricGraph& graph) {
    out << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
    for (const auto& p : graph.vertices()) out << g17(p.x()) << ' ' << g17(p.y()) << '\n';
    for (VertexIndex u = 0; u < graph.vertex_count(); ++u) {
        for (const auto& e : graph.out_edges(u)) {
            out << u << ' ' << e.target << ' ' << g17(e.length) << '\n';
        }
    }
}

}  // namespace strongspan
