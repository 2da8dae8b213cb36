#ifndef CDP_GRAPH_HPP
#define CDP_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "cdp/datasets.hpp"

namespace cdp {

struct Edge {
    int u;
    int v;
    double w;
};

// Undirected sparse graph. Each unordered edge is stored once with u < v;
// weights are strictly positive and finite.
struct WeightedGraph {
    int n_vertices = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<std::pair<int, double>>> adjacency;

    // Validates the edge list (u < v, no self-loops or duplicates, positive
    // finite weights) and builds the adjacency lists.
    static WeightedGraph from_edges(int n_vertices, std::vector<Edge> edges);
};

// Result of a giant-component reduction: kept lists the retained original
// vertex ids (sorted), old_to_new maps them onto 0..|kept|-1 (-1 = dropped).
struct ComponentMap {
    std::vector<int> kept;
    std::vector<int> old_to_new;

    bool is_identity() const;
    std::vector<int> dropped() const;
};

// Mutual k-NN graph: edge (i,j) present iff each point is among the other's
// k_nn nearest neighbors (Euclidean); ties at rank k_nn break by smaller
// point index. Duplicate points are an error.
WeightedGraph mutual_knn(const PointCloud& cloud, int k_nn);

// Largest connected component, ties broken by smallest contained original
// vertex id; vertices renumbered, weights unchanged.
std::pair<WeightedGraph, ComponentMap> giant_component(const WeightedGraph& g);

// Edge-list export (CSV: u,v,w). When a ComponentMap is given, vertex ids
// are mapped back to the original numbering.
void save_edges_csv(const WeightedGraph& g, const std::string& path,
                    const ComponentMap* remap = nullptr);

} // namespace cdp

#endif
