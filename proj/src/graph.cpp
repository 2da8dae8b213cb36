#include "cdp/graph.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>

#include "cdp/common.hpp"

namespace cdp {

WeightedGraph WeightedGraph::from_edges(int n_vertices, std::vector<Edge> edges) {
    WeightedGraph g;
    g.n_vertices = n_vertices;
    for (auto& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_vertices) throw std::invalid_argument("edge endpoint out of range");
        if (!(e.w > 0.0) || !std::isfinite(e.w)) {
            throw std::invalid_argument("edge weight must be positive and finite");
        }
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(edges[i].u) + "," +
                                        std::to_string(edges[i].v) + ")");
        }
    }
    g.edges = std::move(edges);
    g.adjacency.assign(n_vertices, {});
    for (const auto& e : g.edges) {
        g.adjacency[e.u].emplace_back(e.v, e.w);
        g.adjacency[e.v].emplace_back(e.u, e.w);
    }
    return g;
}

bool ComponentMap::is_identity() const {
    for (std::size_t i = 0; i < old_to_new.size(); ++i) {
        if (old_to_new[i] != static_cast<int>(i)) return false;
    }
    return true;
}

std::vector<int> ComponentMap::dropped() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < old_to_new.size(); ++i) {
        if (old_to_new[i] < 0) out.push_back(static_cast<int>(i));
    }
    return out;
}

WeightedGraph mutual_knn(const PointCloud& cloud, int k_nn) {
    const int n = static_cast<int>(cloud.size());
    if (k_nn < 1 || k_nn >= n) {
        throw std::invalid_argument("k_nn must satisfy 1 <= k_nn < N, got k_nn=" +
                                    std::to_string(k_nn) + " with N=" + std::to_string(n));
    }

    // Exact brute-force neighbor search; ties at rank k_nn break by smaller
    // point index via the (distance, index) ordering.
    std::vector<std::vector<int>> nbrs(n);
    std::vector<std::pair<double, int>> cand;
    cand.reserve(n - 1);
    for (int i = 0; i < n; ++i) {
        cand.clear();
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const double d = (cloud.points.row(j) - cloud.points.row(i)).norm();
            if (d == 0.0) {
                throw DegenerateInputError("duplicate points " + std::to_string(std::min(i, j)) +
                                           " and " + std::to_string(std::max(i, j)) +
                                           " (zero Euclidean distance)");
            }
            cand.emplace_back(d, j);
        }
        std::partial_sort(cand.begin(), cand.begin() + k_nn, cand.end());
        auto& lst = nbrs[i];
        lst.reserve(k_nn);
        for (int t = 0; t < k_nn; ++t) lst.push_back(cand[t].second);
        std::sort(lst.begin(), lst.end());
    }

    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j : nbrs[i]) {
            if (j <= i) continue;
            if (std::binary_search(nbrs[j].begin(), nbrs[j].end(), i)) {
                edges.push_back({i, j, (cloud.points.row(j) - cloud.points.row(i)).norm()});
            }
        }
    }
    return WeightedGraph::from_edges(n, std::move(edges));
}

std::pair<WeightedGraph, ComponentMap> giant_component(const WeightedGraph& g) {
    const int n = g.n_vertices;
    std::vector<int> label(n, -1);
    int n_components = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (label[s] >= 0) continue;
        label[s] = n_components;
        stack.push_back(s);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (const auto& [v, w] : g.adjacency[u]) {
                (void)w;
                if (label[v] < 0) {
                    label[v] = n_components;
                    stack.push_back(v);
                }
            }
        }
        ++n_components;
    }

    std::vector<int> sizes(n_components, 0);
    for (int v = 0; v < n; ++v) ++sizes[label[v]];
    // Largest component; ties resolve to the one discovered first, which is
    // the one containing the smallest original vertex id.
    int best = 0;
    for (int c = 1; c < n_components; ++c) {
        if (sizes[c] > sizes[best]) best = c;
    }

    ComponentMap map;
    map.old_to_new.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (label[v] == best) {
            map.old_to_new[v] = static_cast<int>(map.kept.size());
            map.kept.push_back(v);
        }
    }
    if (static_cast<int>(map.kept.size()) == n) return {g, map};

    std::vector<Edge> edges;
    for (const auto& e : g.edges) {
        if (map.old_to_new[e.u] >= 0 && map.old_to_new[e.v] >= 0) {
            edges.push_back({map.old_to_new[e.u], map.old_to_new[e.v], e.w});
        }
    }
    return {WeightedGraph::from_edges(static_cast<int>(map.kept.size()), std::move(edges)), map};
}

void save_edges_csv(const WeightedGraph& g, const std::string& path, const ComponentMap* remap) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    std::string buf = "u,v,w\n";
    std::array<char, 64> num;
    for (const auto& e : g.edges) {
        const int u = remap ? remap->kept[e.u] : e.u;
        const int v = remap ? remap->kept[e.v] : e.v;
        buf += std::to_string(u);
        buf += ',';
        buf += std::to_string(v);
        buf += ',';
        auto [ptr, ec] = std::to_chars(num.data(), num.data() + num.size(), e.w);
        (void)ec;
        buf.append(num.data(), ptr);
        buf += '\n';
    }
    out << buf;
    if (!out) throw std::runtime_error("write failed for " + path);
}

} // namespace cdp
