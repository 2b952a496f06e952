#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace metra {

/// Simple undirected graph on vertices 0..n-1. No loops, no repeated edges.
class Graph {
public:
    Graph() = default;
    /// Validates endpoints and rejects loops/duplicates. Edges are stored
    /// normalized (i < j, lexicographically sorted).
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;
    int degree(int v) const { return degree_[v]; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

    /// Induced subgraph on the given (distinct, in-range) vertices; the i-th
    /// vertex of the result corresponds to vertices[i].
    Graph induced(const std::vector<int>& vertices) const;

    static Graph empty(int n);
    static Graph complete(int n);
    /// K_{a,b} with the a-block first: sides {0..a-1} and {a..a+b-1}.
    static Graph complete_bipartite(int a, int b);
    static Graph path(int n);
    static Graph cycle(int n);

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<bool>> adj_;
    std::vector<int> degree_;
};

/// BFS distances from src; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);

/// All-pairs shortest-path distances (BFS from every vertex).
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

/// A shortest path realizing the diameter. Deterministic: the
/// lexicographically smallest diametral pair, then at every hop the
/// smallest-index vertex that stays on a shortest path. Throws
/// Error("Disconnected") when g is not connected.
std::vector<int> extract_geodesic(const Graph& g);

}  // namespace metra
