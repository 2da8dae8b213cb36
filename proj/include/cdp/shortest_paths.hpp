#ifndef CDP_SHORTEST_PATHS_HPP
#define CDP_SHORTEST_PATHS_HPP

#include <limits>
#include <vector>

#include "cdp/graph.hpp"

namespace cdp {

inline constexpr double kInfDist = std::numeric_limits<double>::infinity();

struct SsspResult {
    int source = 0;
    std::vector<double> dist;   // infinity for unreachable vertices
    std::vector<int> parent;    // -1 = none
};

// Dense all-pairs table with per-source parent pointers kept for path
// recovery. Row-major n*n storage.
struct DistanceMatrix {
    int n = 0;
    std::vector<double> dist;
    std::vector<int> parent;

    double operator()(int i, int j) const { return dist[static_cast<std::size_t>(i) * n + j]; }
    int parent_of(int source, int v) const { return parent[static_cast<std::size_t>(source) * n + v]; }
};

// Exact Dijkstra (binary heap, lazy deletion). When two relaxations yield
// equal distance the parent with the smaller vertex id is kept, so dist and
// parent arrays are deterministic.
SsspResult sssp(const WeightedGraph& g, int source);

// One Dijkstra sweep per source, parallelized across sources. Requires a
// connected graph; errors otherwise (reduce to the giant component first).
DistanceMatrix apsp(const WeightedGraph& g);

// Walks parent pointers from target back to the source.
std::vector<int> recover_path(const SsspResult& res, int target);
std::vector<int> recover_path(const DistanceMatrix& dm, int source, int target);

} // namespace cdp

#endif
