#include "strongspan/random.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace strongspan {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t instance_seed(std::uint64_t base_seed, std::uint64_t index) {
    return mix64(mix64(base_seed) ^ (index * 0xd1b54a32d192ed03ULL + 1));
}

double unit_uniform(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

std::vector<Point2D> generate_points(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("generate_points: n must be at least 1");
    std::mt19937_64 engine(mix64(seed));
    std::vector<Point2D> points;
    points.reserve(n);
    std::set<std::pair<double, double>> seen;
    while (points.size() < n) {
        const double x = unit_uniform(engine);
        const double y = unit_uniform(engine);
        if (seen.emplace(x, y).second) points.emplace_back(x, y);
    }
    return points;
}

}  // namespace strongspan
