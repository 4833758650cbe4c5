#include "detold/graph.hpp"

#include <algorithm>
#include <queue>

namespace detold {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw input_error("negative vertex count");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    g.nbr.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw input_error("self-loop at vertex " + std::to_string(u));
        if (g.nbr[u].contains(v))
            throw input_error("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        g.nbr[u].insert(v);
        g.nbr[v].insert(u);
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& row : g.adj) std::sort(row.begin(), row.end());
    return g;
}

int Graph::min_degree() const {
    int d = n == 0 ? 0 : int(adj[0].size());
    for (const auto& row : adj) d = std::min(d, int(row.size()));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& row : adj) d = std::max(d, int(row.size()));
    return d;
}

int Graph::edge_count() const {
    int s = 0;
    for (const auto& row : adj) s += int(row.size());
    return s / 2;
}

bool Graph::is_cubic() const {
    if (n == 0) return false;
    for (const auto& row : adj)
        if (row.size() != 3) return false;
    return true;
}

bool Graph::connected() const {
    if (n <= 1) return true;
    auto dist = bfs_distances(*this, 0);
    for (int v = 0; v < n; ++v)
        if (dist[v] < 0) return false;
    return true;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet open_neighborhood(const Graph& g, int v) {
    g.check_vertex(v);
    return g.nbr[v];
}

VertexSet closed_neighborhood(const Graph& g, int v) {
    g.check_vertex(v);
    VertexSet s = g.nbr[v];
    s.insert(v);
    return s;
}

bool is_c4_free(const Graph& g) {
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.nbr[u].count_and(g.nbr[v]) >= 2) return false;
    return true;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.n, v + a.n);
    return Graph::from_edges(a.n + b.n, edges);
}

namespace {

void trail_walk(const Graph& g, int at, int remaining, int (&used)[4], int used_count, VertexSet& out) {
    if (remaining == 0) {
        out.insert(at);
        return;
    }
    for (int w : g.adj[at]) {
        // Edge ids as min*n+max; at most 4 live edges, linear scan beats a set.
        int lo = std::min(at, w), hi = std::max(at, w);
        int eid = lo * g.n + hi;
        bool seen = false;
        for (int i = 0; i < used_count; ++i)
            if (used[i] == eid) { seen = true; break; }
        if (seen) continue;
        used[used_count] = eid;
        trail_walk(g, w, remaining - 1, used, used_count + 1, out);
    }
}

} // namespace

TrailSet trail_set(const Graph& g, int v, int length) {
    g.check_vertex(v);
    if (length != 0 && length != 2 && length != 4)
        throw input_error("trail length must be 0, 2 or 4");
    TrailSet t{v, length, VertexSet(g.n)};
    if (length == 0) {
        t.members.insert(v);
        return t;
    }
    int used[4] = {0, 0, 0, 0};
    trail_walk(g, v, length, used, 0, t.members);
    return t;
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    if (n == 2) e.pop_back(); // avoid the duplicate 0-1
    if (n == 1) e.clear();
    return Graph::from_edges(n, e);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph::from_edges(a + b, e);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5); // outer 5-cycle
        e.emplace_back(i, i + 5);       // spoke
        e.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
    }
    return Graph::from_edges(10, e);
}

Graph heawood_graph() {
    // LCF notation [5,-5]^7 on a 14-cycle.
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 14; ++i) e.emplace_back(i, (i + 1) % 14);
    for (int i = 0; i < 14; i += 2) e.emplace_back(i, (i + 5) % 14);
    return Graph::from_edges(14, e);
}

} // namespace detold
