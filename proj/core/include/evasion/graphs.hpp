#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "evasion/board.hpp"

namespace evasion {

// Plain graph helpers over explicit edge lists. Vertices are the edge
// endpoints plus an optional support set of (possibly isolated) vertices.

std::vector<std::vector<Vertex>> components(std::span<const Edge> edges,
                                            std::span<const Vertex> support);

/// Some odd cycle as a closed vertex walk v0..v(2t) with v0 adjacent to the
/// last entry, or nullopt if the graph is bipartite.
std::optional<std::vector<Vertex>> odd_cycle(std::span<const Edge> edges);

bool is_bipartite(std::span<const Edge> edges);

/// 2-coloring side per vertex (0/1, components colored independently with the
/// least vertex on side 0), or nullopt if an odd cycle exists.
std::optional<std::vector<std::pair<Vertex, int>>> bipartition(std::span<const Edge> edges,
                                                               std::span<const Vertex> support);

/// Exact maximum matching size (general graphs, blossom contraction).
int max_matching_size(std::span<const Edge> edges);

bool has_matching_of_size(std::span<const Edge> edges, int k);

std::optional<int> shortest_path_len(std::span<const Edge> edges, Vertex a, Vertex b);

/// Is there a simple cycle of exactly k edges? Exact DFS with canonical-start
/// pruning; intended for the small subgraphs strategies touch.
bool cycle_of_length_exists(std::span<const Edge> edges, int k);

bool cycle_of_length_at_most_exists(std::span<const Edge> edges, int k);

/// Is there a simple path of exactly len edges between a and b?
bool path_of_length_exists(std::span<const Edge> edges, Vertex a, Vertex b, int len);

bool connected_on(std::span<const Edge> edges, std::span<const Vertex> support);

}  // namespace evasion
