#include <doctest.h>

#include <numeric>
#include <random>

#include "cdp/common.hpp"
#include "cdp/graph.hpp"
#include "oracles.hpp"
#include "toy_golden.hpp"

using namespace cdp;

TEST_CASE("toy mutual 2-NN graph has exactly the four chain edges") {
    const WeightedGraph g = mutual_knn(toy::cloud(), 2);
    REQUIRE(g.edges.size() == 4);
    std::set<std::pair<int, int>> got;
    for (const auto& e : g.edges) got.emplace(e.u, e.v);
    CHECK(got == std::set<std::pair<int, int>>{{0, 1}, {0, 4}, {1, 2}, {2, 3}});
}

TEST_CASE("two points with k_nn=1 are mutually nearest") {
    PointCloud cloud;
    cloud.points.resize(2, 2);
    cloud.points << 0, 0, 3, 4;
    const WeightedGraph g = mutual_knn(cloud, 1);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].u == 0);
    CHECK(g.edges[0].v == 1);
    CHECK(g.edges[0].w == doctest::Approx(5.0));
}

TEST_CASE("mutual_knn agrees with the brute-force oracle") {
    const PointCloud cloud = oracles::random_cloud(50, 3, 123);
    const WeightedGraph g = mutual_knn(cloud, 4);
    std::set<std::pair<int, int>> got;
    for (const auto& e : g.edges) got.emplace(e.u, e.v);
    CHECK(got == oracles::brute_force_mutual_knn(cloud.points, 4));
}

TEST_CASE("edge weights equal endpoint distances and degrees stay bounded") {
    const PointCloud cloud = oracles::random_cloud(80, 4, 5);
    const int k_nn = 6;
    const WeightedGraph g = mutual_knn(cloud, k_nn);
    for (const auto& e : g.edges) {
        CHECK(e.w == doctest::Approx((cloud.points.row(e.v) - cloud.points.row(e.u)).norm())
                         .epsilon(1e-12));
    }
    for (const auto& adj : g.adjacency) CHECK(adj.size() <= static_cast<std::size_t>(k_nn));
}

TEST_CASE("mutual_knn is invariant under point permutation") {
    const PointCloud cloud = oracles::random_cloud(40, 3, 99);
    const int n = 40;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), std::mt19937(17));

    PointCloud shuffled;
    shuffled.points.resize(n, 3);
    for (int i = 0; i < n; ++i) shuffled.points.row(perm[i]) = cloud.points.row(i);

    auto geometric = [&](const WeightedGraph& g, const std::vector<int>* map) {
        std::set<std::pair<int, int>> out;
        for (const auto& e : g.edges) {
            int u = map ? (*map)[e.u] : e.u;
            int v = map ? (*map)[e.v] : e.v;
            if (u > v) std::swap(u, v);
            out.emplace(u, v);
        }
        return out;
    };
    // relabel the shuffled edge set back into original ids
    std::vector<int> inverse(n);
    for (int i = 0; i < n; ++i) inverse[perm[i]] = i;
    CHECK(geometric(mutual_knn(cloud, 5), nullptr) ==
          geometric(mutual_knn(shuffled, 5), &inverse));
}

TEST_CASE("mutual_knn rejects degenerate input") {
    PointCloud cloud;
    cloud.points.resize(3, 2);
    cloud.points << 1, 1, 0, 0, 1, 1;
    CHECK_THROWS_WITH_AS(mutual_knn(cloud, 1), doctest::Contains("0 and 2"),
                         DegenerateInputError);

    const PointCloud ok = oracles::random_cloud(5, 2, 2);
    CHECK_THROWS_AS(mutual_knn(ok, 0), std::invalid_argument);
    CHECK_THROWS_AS(mutual_knn(ok, 5), std::invalid_argument);
}

TEST_CASE("giant_component keeps a connected graph unchanged") {
    const WeightedGraph g = mutual_knn(toy::cloud(), 2);
    const auto [reduced, map] = giant_component(g);
    CHECK(map.is_identity());
    CHECK(reduced.edges.size() == 4);
    CHECK(map.dropped().empty());
}

TEST_CASE("giant_component keeps the larger of two components") {
    // components {0,1,2} and {3,4}
    const WeightedGraph g = WeightedGraph::from_edges(
        5, {{0, 1, 1.0}, {1, 2, 1.0}, {3, 4, 1.0}});
    const auto [reduced, map] = giant_component(g);
    CHECK(reduced.n_vertices == 3);
    CHECK(map.kept == std::vector<int>{0, 1, 2});
    CHECK(map.dropped() == std::vector<int>{3, 4});
    CHECK(reduced.edges.size() == 2);
}

TEST_CASE("giant_component agrees with BFS labeling on a sparse cloud graph") {
    const PointCloud cloud = oracles::random_cloud(100, 3, 31);
    const WeightedGraph g = mutual_knn(cloud, 2);
    const auto [reduced, map] = giant_component(g);

    const std::vector<int> label = oracles::bfs_components(g);
    const int n_components = *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<int>> members(n_components);
    for (int v = 0; v < 100; ++v) members[label[v]].push_back(v);
    const auto largest = std::max_element(
        members.begin(), members.end(),
        [](const auto& a, const auto& b) { return a.size() < b.size(); });
    CHECK(map.kept == *largest);
    CHECK(reduced.n_vertices == static_cast<int>(largest->size()));
}
