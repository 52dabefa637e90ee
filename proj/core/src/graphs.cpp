#include "evasion/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace evasion {
namespace {

Vertex max_vertex(std::span<const Edge> edges, std::span<const Vertex> support) {
    Vertex m = -1;
    for (const auto& e : edges) m = std::max(m, e.v);
    for (Vertex v : support) m = std::max(m, v);
    return m;
}

std::vector<std::vector<Vertex>> adjacency(std::span<const Edge> edges, Vertex n) {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (const auto& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<Vertex>> components(std::span<const Edge> edges,
                                            std::span<const Vertex> support) {
    Vertex n = max_vertex(edges, support) + 1;
    if (n <= 0) return {};
    UnionFind uf(n);
    for (const auto& e : edges) uf.unite(e.u, e.v);

    std::vector<bool> in_support(static_cast<std::size_t>(n), false);
    for (Vertex v : support) in_support[v] = true;
    for (const auto& e : edges) in_support[e.u] = in_support[e.v] = true;

    std::vector<std::vector<Vertex>> comp_of(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        if (in_support[v]) comp_of[uf.find(v)].push_back(v);
    std::vector<std::vector<Vertex>> out;
    for (auto& c : comp_of)
        if (!c.empty()) out.push_back(std::move(c));
    return out;
}

std::optional<std::vector<Vertex>> odd_cycle(std::span<const Edge> edges) {
    Vertex n = max_vertex(edges, {}) + 1;
    if (n <= 0) return std::nullopt;
    auto adj = adjacency(edges, n);
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);

    for (Vertex root = 0; root < n; ++root) {
        if (side[root] != -1 || adj[root].empty()) continue;
        side[root] = 0;
        std::queue<Vertex> q;
        q.push(root);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : adj[u]) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    q.push(w);
                } else if (side[w] == side[u]) {
                    // walk both endpoints up to their lowest common ancestor
                    std::vector<Vertex> pu{u}, pw{w};
                    Vertex a = u, b = w;
                    while (depth[a] > depth[b]) pu.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) pw.push_back(b = parent[b]);
                    while (a != b) {
                        pu.push_back(a = parent[a]);
                        pw.push_back(b = parent[b]);
                    }
                    std::vector<Vertex> cycle(pu);
                    for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it) cycle.push_back(*it);
                    return cycle;
                }
            }
        }
    }
    return std::nullopt;
}

bool is_bipartite(std::span<const Edge> edges) {
    return !odd_cycle(edges).has_value();
}

std::optional<std::vector<std::pair<Vertex, int>>> bipartition(std::span<const Edge> edges,
                                                               std::span<const Vertex> support) {
    Vertex n = max_vertex(edges, support) + 1;
    std::vector<std::pair<Vertex, int>> out;
    if (n <= 0) return out;
    auto adj = adjacency(edges, n);
    std::vector<bool> in_support(static_cast<std::size_t>(n), false);
    for (Vertex v : support) in_support[v] = true;
    for (const auto& e : edges) in_support[e.u] = in_support[e.v] = true;

    std::vector<int> side(static_cast<std::size_t>(n), -1);
    for (Vertex root = 0; root < n; ++root) {
        if (!in_support[root] || side[root] != -1) continue;
        side[root] = 0;
        std::queue<Vertex> q;
        q.push(root);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : adj[u]) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    q.push(w);
                } else if (side[w] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (in_support[v]) out.emplace_back(v, side[v]);
    return out;
}

namespace {

// Blossom-contraction maximum matching (Edmonds), array form.
struct Blossom {
    int n;
    std::vector<std::vector<int>> g;
    std::vector<int> match, parent, base;
    std::vector<bool> used, in_blossom;

    explicit Blossom(const std::vector<std::vector<Vertex>>& adj)
        : n(static_cast<int>(adj.size())), g(adj.begin(), adj.end()),
          match(n, -1), parent(n, -1), base(n), used(n, false), in_blossom(n, false) {}

    int lca(int a, int b) {
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int v = a;;) {
            v = base[v];
            seen[v] = true;
            if (match[v] == -1) break;
            v = parent[match[v]];
        }
        for (int v = b;;) {
            v = base[v];
            if (seen[v]) return v;
            v = parent[match[v]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = true;
            in_blossom[base[match[v]]] = true;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    int find_augmenting(int root) {
        std::fill(used.begin(), used.end(), false);
        std::fill(parent.begin(), parent.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        used[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    int cur_base = lca(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), false);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i) {
                        if (in_blossom[base[i]]) {
                            base[i] = cur_base;
                            if (!used[i]) {
                                used[i] = true;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = true;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    }

    int run() {
        int size = 0;
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1 || g[v].empty()) continue;
            int leaf = find_augmenting(v);
            if (leaf == -1) continue;
            ++size;
            for (int cur = leaf; cur != -1;) {
                int prev = parent[cur], next = (prev == -1) ? -1 : match[prev];
                match[cur] = prev;
                if (prev != -1) match[prev] = cur;
                cur = next;
            }
        }
        return size;
    }
};

}  // namespace

int max_matching_size(std::span<const Edge> edges) {
    Vertex n = max_vertex(edges, {}) + 1;
    if (n <= 0) return 0;
    Blossom bl(adjacency(edges, n));
    return bl.run();
}

bool has_matching_of_size(std::span<const Edge> edges, int k) {
    return max_matching_size(edges) >= k;
}

std::optional<int> shortest_path_len(std::span<const Edge> edges, Vertex a, Vertex b) {
    if (a == b) return 0;
    Vertex n = std::max(max_vertex(edges, {}), std::max(a, b)) + 1;
    auto adj = adjacency(edges, n);
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    dist[a] = 0;
    std::queue<Vertex> q;
    q.push(a);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : adj[u]) {
            if (dist[w] != -1) continue;
            dist[w] = dist[u] + 1;
            if (w == b) return dist[w];
            q.push(w);
        }
    }
    return std::nullopt;
}

namespace {

bool dfs_path(const std::vector<std::vector<Vertex>>& adj, std::vector<bool>& visited, Vertex cur,
              Vertex target, int remaining, Vertex min_allowed) {
    if (remaining == 0) return cur == target;
    for (Vertex w : adj[cur]) {
        if (w == target) {
            if (remaining == 1) return true;
            continue;
        }
        if (w < min_allowed || visited[w]) continue;
        visited[w] = true;
        if (dfs_path(adj, visited, w, target, remaining - 1, min_allowed)) {
            visited[w] = false;
            return true;
        }
        visited[w] = false;
    }
    return false;
}

}  // namespace

bool cycle_of_length_exists(std::span<const Edge> edges, int k) {
    if (k < 3) return false;
    Vertex n = max_vertex(edges, {}) + 1;
    if (n <= 0) return false;
    auto adj = adjacency(edges, n);
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    // canonical start: the least vertex on the cycle
    for (Vertex s = 0; s < n; ++s) {
        if (adj[s].empty()) continue;
        visited[s] = true;
        if (dfs_path(adj, visited, s, s, k, s)) return true;
        visited[s] = false;
    }
    return false;
}

bool cycle_of_length_at_most_exists(std::span<const Edge> edges, int k) {
    for (int len = 3; len <= k; ++len)
        if (cycle_of_length_exists(edges, len)) return true;
    return false;
}

bool path_of_length_exists(std::span<const Edge> edges, Vertex a, Vertex b, int len) {
    if (len == 0) return a == b;
    Vertex n = std::max(max_vertex(edges, {}), std::max(a, b)) + 1;
    auto adj = adjacency(edges, n);
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    visited[a] = true;
    return dfs_path(adj, visited, a, b, len, 0);
}

bool connected_on(std::span<const Edge> edges, std::span<const Vertex> support) {
    return components(edges, support).size() <= 1;
}

}  // namespace evasion
