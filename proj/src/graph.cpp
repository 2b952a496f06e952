#include "metra/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

#include "metra/errors.hpp"

namespace metra {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) fail("InvalidSize", "negative vertex count");
    adj_.assign(n, std::vector<bool>(n, false));
    degree_.assign(n, 0);
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail("IndexOutOfRange", "edge endpoint out of range");
        if (u == v) fail("InvalidEdge", "loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (adj_[u][v]) fail("Duplicate", "repeated edge");
        adj_[u][v] = adj_[v][u] = true;
        ++degree_[u];
        ++degree_[v];
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    return adj_[u][v];
}

Graph Graph::induced(const std::vector<int>& vertices) const {
    std::set<int> seen;
    for (int v : vertices) {
        if (v < 0 || v >= n_) fail("IndexOutOfRange", "vertex out of range");
        if (!seen.insert(v).second) fail("Duplicate", "repeated vertex in subset");
    }
    const int k = static_cast<int>(vertices.size());
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (has_edge(vertices[a], vertices[b])) edges.emplace_back(a, b);
    return Graph(k, std::move(edges));
}

Graph Graph::empty(int n) { return Graph(n, {}); }

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph Graph::complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(a + b, std::move(edges));
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph Graph::cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    if (n >= 3) edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges));
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    const int n = g.vertex_count();
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v = 0; v < n; ++v) {
            if (g.has_edge(u, v) && dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    std::vector<std::vector<int>> d;
    d.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) d.push_back(bfs_distances(g, v));
    return d;
}

std::vector<int> extract_geodesic(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) fail("Disconnected", "empty graph");
    const auto dist = all_pairs_distances(g);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dist[i][j] < 0) fail("Disconnected", "graph is not connected");

    int diameter = 0, a = 0, b = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dist[i][j] > diameter) {
                diameter = dist[i][j];
                a = i;
                b = j;
            }
    // dist scan order already yields the lexicographically smallest pair.

    // Walk from a towards b, taking the smallest-index neighbor that stays
    // on a shortest path.
    std::vector<int> path{a};
    int cur = a;
    while (cur != b) {
        for (int v = 0; v < n; ++v) {
            if (g.has_edge(cur, v) && dist[v][b] == dist[cur][b] - 1) {
                path.push_back(v);
                cur = v;
                break;
            }
        }
    }
    return path;
}

}  // namespace metra
