#include "cdp/shortest_paths.hpp"

#include <algorithm>
#include <atomic>
#include <queue>
#include <stdexcept>
#include <thread>

namespace cdp {

SsspResult sssp(const WeightedGraph& g, int source) {
    const int n = g.n_vertices;
    if (source < 0 || source >= n) {
        throw std::invalid_argument("source " + std::to_string(source) + " out of range");
    }
    SsspResult res;
    res.source = source;
    res.dist.assign(n, kInfDist);
    res.parent.assign(n, -1);
    res.dist[source] = 0.0;

    // Binary heap with lazy deletion, ordered by (distance, vertex id) so
    // pop order is deterministic. Equal-distance relaxations keep the
    // smaller parent id, making recovered paths deterministic under ties.
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    heap.emplace(0.0, source);
    std::vector<char> settled(n, 0);
    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (settled[u]) continue;
        settled[u] = 1;
        for (const auto& [v, w] : g.adjacency[u]) {
            const double nd = d + w;
            if (nd < res.dist[v]) {
                res.dist[v] = nd;
                res.parent[v] = u;
                heap.emplace(nd, v);
            } else if (nd == res.dist[v] && u < res.parent[v]) {
                res.parent[v] = u;
            }
        }
    }
    return res;
}

DistanceMatrix apsp(const WeightedGraph& g) {
    const int n = g.n_vertices;
    DistanceMatrix dm;
    dm.n = n;
    dm.dist.resize(static_cast<std::size_t>(n) * n);
    dm.parent.resize(static_cast<std::size_t>(n) * n);

    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int s = next.fetch_add(1);
            if (s >= n) return;
            const SsspResult row = sssp(g, s);
            std::copy(row.dist.begin(), row.dist.end(),
                      dm.dist.begin() + static_cast<std::size_t>(s) * n);
            std::copy(row.parent.begin(), row.parent.end(),
                      dm.parent.begin() + static_cast<std::size_t>(s) * n);
        }
    };
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned n_threads = std::min<unsigned>(hw, static_cast<unsigned>(n));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (const double d : dm.dist) {
        if (d == kInfDist) {
            throw std::runtime_error(
                "apsp requires a connected graph; reduce to the giant component first");
        }
    }
    return dm;
}

namespace {

std::vector<int> walk_parents(int source, int target, const int* parent) {
    std::vector<int> path{target};
    while (path.back() != source) {
        const int p = parent[path.back()];
        if (p < 0) throw std::runtime_error("target " + std::to_string(target) + " unreachable");
        path.push_back(p);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

std::vector<int> recover_path(const SsspResult& res, int target) {
    if (target < 0 || target >= static_cast<int>(res.dist.size())) {
        throw std::invalid_argument("target out of range");
    }
    if (res.dist[target] == kInfDist) {
        throw std::runtime_error("target " + std::to_string(target) + " unreachable");
    }
    return walk_parents(res.source, target, res.parent.data());
}

std::vector<int> recover_path(const DistanceMatrix& dm, int source, int target) {
    if (source < 0 || source >= dm.n || target < 0 || target >= dm.n) {
        throw std::invalid_argument("vertex out of range");
    }
    return walk_parents(source, target, dm.parent.data() + static_cast<std::size_t>(source) * dm.n);
}

} // namespace cdp
