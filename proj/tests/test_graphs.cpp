#include <algorithm>
#include <cstdint>

#include "doctest.h"
#include "evasion/graphs.hpp"

using namespace evasion;

namespace {

std::uint64_t rng_state = 0x9e3779b9;
std::uint64_t rnd() {
    rng_state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = rng_state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// brute force: largest subset of pairwise disjoint edges
int brute_matching(const std::vector<Edge>& edges) {
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
        std::vector<Vertex> used;
        bool ok = true;
        int cnt = 0;
        for (std::size_t i = 0; i < edges.size() && ok; ++i) {
            if (!(mask & (1u << i))) continue;
            for (Vertex v : {edges[i].u, edges[i].v}) {
                if (std::count(used.begin(), used.end(), v)) ok = false;
                used.push_back(v);
            }
            ++cnt;
        }
        if (ok) best = std::max(best, cnt);
    }
    return best;
}

bool two_colorable(const std::vector<Edge>& edges, int n) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (const auto& e : edges)
            if (((mask >> e.u) & 1) == ((mask >> e.v) & 1)) ok = false;
        if (ok) return true;
    }
    return edges.empty();
}

}  // namespace

TEST_CASE("components") {
    std::vector<Edge> one{{0, 1}};
    std::vector<Vertex> sup{0, 1, 2};
    auto c = components(one, sup);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == std::vector<Vertex>{0, 1});
    CHECK(c[1] == std::vector<Vertex>{2});

    std::vector<Vertex> solo{0};
    CHECK(components({}, solo).size() == 1);

    std::vector<Edge> two{{0, 1}, {1, 2}, {3, 4}};
    std::vector<Vertex> sup5{0, 1, 2, 3, 4};
    auto c2 = components(two, sup5);
    REQUIRE(c2.size() == 2);
    CHECK(c2[0].size() == 3);
    CHECK(c2[1].size() == 2);
}

TEST_CASE("odd cycle witness") {
    std::vector<Edge> tri{{0, 1}, {1, 2}, {0, 2}};
    auto w = odd_cycle(tri);
    REQUIRE(w.has_value());
    CHECK(w->size() == 3);

    std::vector<Edge> c4{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    CHECK(!odd_cycle(c4).has_value());

    // C5 plus a disjoint C4: witness must be the 5-cycle
    std::vector<Edge> mix{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                          {5, 6}, {6, 7}, {7, 8}, {5, 8}};
    auto w2 = odd_cycle(mix);
    REQUIRE(w2.has_value());
    CHECK(w2->size() == 5);
}

TEST_CASE("odd cycle agrees with exhaustive 2-coloring") {
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + static_cast<int>(rnd() % 10);  // up to 12 vertices
        std::vector<Edge> edges;
        for (Vertex v = 1; v < n; ++v)
            for (Vertex u = 0; u < v; ++u)
                if (rnd() % 100 < 25) edges.push_back({u, v});
        CHECK(odd_cycle(edges).has_value() == !two_colorable(edges, n));
    }
}

TEST_CASE("max matching on small fixtures") {
    std::vector<Edge> tri{{0, 1}, {1, 2}, {0, 2}};
    CHECK(max_matching_size(tri) == 1);
    std::vector<Edge> path{{0, 1}, {1, 2}, {2, 3}};
    CHECK(max_matching_size(path) == 2);
    CHECK(max_matching_size({}) == 0);
}

TEST_CASE("max matching agrees with subset brute force") {
    // every subset of K5's edges with at most 8 edges
    std::vector<Edge> k5;
    for (Vertex v = 1; v < 5; ++v)
        for (Vertex u = 0; u < v; ++u) k5.push_back({u, v});
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
        if (__builtin_popcount(mask) > 8) continue;
        std::vector<Edge> edges;
        for (int i = 0; i < 10; ++i)
            if (mask & (1u << i)) edges.push_back(k5[static_cast<std::size_t>(i)]);
        REQUIRE(max_matching_size(edges) == brute_matching(edges));
    }
    // random sparse graphs on up to 10 vertices
    for (int trial = 0; trial < 500; ++trial) {
        int n = 4 + static_cast<int>(rnd() % 7);
        std::vector<Edge> all;
        for (Vertex v = 1; v < n; ++v)
            for (Vertex u = 0; u < v; ++u) all.push_back({u, v});
        std::vector<Edge> edges;
        for (const auto& e : all)
            if (rnd() % 100 < 20 && edges.size() < 8) edges.push_back(e);
        REQUIRE(max_matching_size(edges) == brute_matching(edges));
    }
}

TEST_CASE("shortest path") {
    std::vector<Edge> path{{0, 1}, {1, 2}};
    CHECK(shortest_path_len(path, 0, 2) == 2);
    CHECK(!shortest_path_len({}, 0, 1).has_value());
    std::vector<Edge> c5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
    CHECK(shortest_path_len(c5, 0, 2) == 2);
}

TEST_CASE("cycle of exact length") {
    std::vector<Edge> c4{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    CHECK(cycle_of_length_exists(c4, 4));
    CHECK(!cycle_of_length_exists(c4, 3));
    std::vector<Edge> k4;
    for (Vertex v = 1; v < 4; ++v)
        for (Vertex u = 0; u < v; ++u) k4.push_back({u, v});
    CHECK(cycle_of_length_exists(k4, 3));
    CHECK(cycle_of_length_exists(k4, 4));
    CHECK(!cycle_of_length_exists(k4, 5));
    CHECK(cycle_of_length_at_most_exists(c4, 5));
    CHECK(!cycle_of_length_at_most_exists(c4, 3));
}

TEST_CASE("path of exact length") {
    std::vector<Edge> c5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
    CHECK(path_of_length_exists(c5, 0, 2, 2));
    CHECK(path_of_length_exists(c5, 0, 2, 3));
    CHECK(!path_of_length_exists(c5, 0, 2, 4));
}
