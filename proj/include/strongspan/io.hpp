#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "strongspan/geometry.hpp"
#include "strongspan/graph.hpp"

namespace strongspan {

/// Malformed input file. The message carries the line number.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Point files: one "x y" pair per line; '#' starts a comment; blank lines
// are skipped.
std::vector<Point2D> read_points(std::istream& in);
std::vector<Point2D> read_points_file(const std::filesystem::path& path);
void write_points(std::ostream& out, const std::vector<Point2D>& points);

// Graph files: "n m", then n lines "x y", then m lines "i j length" with
// 0-based indices. Numbers are written with 17 significant digits. On read,
// each stored length must match the recomputed distance.
DirectedGeometricGraph read_graph(std::istream& in);
DirectedGeometricGraph read_graph_file(const std::filesystem::path& path);
void write_graph(std::ostream& out, const DirectedGeometricGraph& graph);

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

/// Parses a whole token as a double. Throws ParseError on trailing junk.
double parse_double(const std::string& token);

}  // namespace strongspan
