#pragma once

#include <string>
#include <utility>
#include <vector>

#include "detold/errors.hpp"
#include "detold/vertex_set.hpp"

namespace detold {

// Finite simple undirected graph on vertices 0..n-1. Neighbor lists are sorted
// and mirrored by bitset rows; instances are immutable once built.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj; // sorted, duplicate-free
    std::vector<VertexSet> nbr;        // adj as bitsets

    Graph() = default;

    // Validates simplicity: endpoints in range, no loops, no parallel edges.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int degree(int v) const { return int(adj[v].size()); }
    int min_degree() const;
    int max_degree() const;
    int edge_count() const;
    bool has_edge(int u, int v) const { return u >= 0 && u < n && nbr[u].contains(v); }
    bool is_cubic() const;
    bool connected() const;
    std::vector<std::pair<int, int>> edges() const; // lexicographic, u < v

    void check_vertex(int v) const {
        if (v < 0 || v >= n) throw input_error("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(n) + ")");
    }
};

VertexSet open_neighborhood(const Graph& g, int v);
VertexSet closed_neighborhood(const Graph& g, int v);

// True iff no pair of distinct vertices has two common neighbors, which is
// equivalent to containing no 4-cycle subgraph.
bool is_c4_free(const Graph& g);

// Single-source BFS distances; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int src);

Graph disjoint_union(const Graph& a, const Graph& b);

// Vertices joined to origin by a trail (edge-distinct walk) of exactly
// `length` edges. Vertices may repeat along a trail; edges may not.
// The origin itself appears when a closed trail of that length exists.
struct TrailSet {
    int origin = 0;
    int length = 0;
    VertexSet members;
};

// length must be 0, 2 or 4.
TrailSet trail_set(const Graph& g, int v, int length);

// Stock graphs used across tests and docs.
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph path_graph(int n);
Graph petersen_graph();
Graph heawood_graph();

} // namespace detold
