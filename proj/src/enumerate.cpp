#include "detold/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

namespace detold {

namespace {

// Bitmask adjacency for the n <= 8 enumeration universe.
struct SmallG {
    int n = 0;
    uint8_t row[8] = {0, 0, 0, 0, 0, 0, 0, 0};

    bool adj(int u, int v) const { return (row[u] >> v) & 1; }
};

// Finds the minimum packed upper-triangle bit string over all vertex
// orderings that sort degrees in non-increasing order. Positions are filled
// left to right; a branch dies as soon as its emitted bits exceed the best.
struct Canonizer {
    const SmallG& g;
    int total_bits;
    int posdeg[8];
    int deg[8];
    bool used[8] = {false, false, false, false, false, false, false, false};
    int chosen[8] = {0};
    uint64_t best = 0;
    bool have_best = false;

    explicit Canonizer(const SmallG& g_) : g(g_) {
        total_bits = g.n * (g.n - 1) / 2;
        for (int v = 0; v < g.n; ++v) deg[v] = std::popcount(unsigned(g.row[v]));
        int sorted[8];
        std::copy(deg, deg + g.n, sorted);
        std::sort(sorted, sorted + g.n, std::greater<int>());
        std::copy(sorted, sorted + g.n, posdeg);
    }

    void rec(int p, uint64_t prefix, int prefix_bits, bool tight) {
        if (p == g.n) {
            if (!have_best || !tight) {
                best = prefix;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < g.n; ++v) {
            if (used[v] || deg[v] != posdeg[p]) continue;
            uint64_t bits = 0;
            for (int i = 0; i < p; ++i) bits = (bits << 1) | (g.adj(v, chosen[i]) ? 1 : 0);
            bool t2 = tight;
            if (have_best && tight && p > 0) {
                uint64_t ref = (best >> (total_bits - (prefix_bits + p))) & ((uint64_t(1) << p) - 1);
                if (bits > ref) continue;
                t2 = bits == ref;
            } else if (have_best && !tight) {
                t2 = false;
            }
            used[v] = true;
            chosen[p] = v;
            rec(p + 1, (prefix << p) | bits, prefix_bits + p, t2);
            used[v] = false;
        }
    }

    uint64_t run() {
        rec(0, 0, 0, true);
        return best;
    }
};

uint64_t canon(const SmallG& g) { return Canonizer(g).run(); }

Graph to_graph(const SmallG& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.adj(u, v)) edges.emplace_back(u, v);
    return Graph::from_edges(g.n, edges);
}

} // namespace

uint64_t canonical_key(const Graph& g) {
    if (g.n > 8) throw capability_error("canonical_key handles n <= 8 only");
    SmallG s;
    s.n = g.n;
    for (auto [u, v] : g.edges()) {
        s.row[u] |= uint8_t(1) << v;
        s.row[v] |= uint8_t(1) << u;
    }
    // Mix in n so keys of different orders never collide.
    return (uint64_t(g.n) << 32) ^ canon(s);
}

void enumerate_graphs(int n, const std::function<bool(const Graph&)>& filter,
                      const std::function<void(const Graph&)>& yield) {
    if (n < 1) throw input_error("enumeration needs n >= 1");
    if (n > 8)
        throw capability_error("full non-isomorphic enumeration is capped at n <= 8; "
                               "ingest a corpus file for larger orders");

    std::vector<SmallG> reps;
    reps.push_back(SmallG{1, {0}});
    for (int k = 2; k <= n; ++k) {
        std::vector<SmallG> next;
        std::unordered_set<uint64_t> seen;
        for (const SmallG& g : reps) {
            for (int mask = 0; mask < (1 << (k - 1)); ++mask) {
                SmallG h = g;
                h.n = k;
                h.row[k - 1] = uint8_t(mask);
                for (int v = 0; v < k - 1; ++v)
                    if ((mask >> v) & 1) h.row[v] |= uint8_t(1) << (k - 1);
                if (seen.insert(canon(h)).second) next.push_back(h);
            }
        }
        reps = std::move(next);
    }

    for (const SmallG& s : reps) {
        Graph g = to_graph(s);
        if (!filter || filter(g)) yield(g);
    }
}

std::vector<Graph> enumerate_graphs(int n) {
    std::vector<Graph> out;
    enumerate_graphs(n, nullptr, [&](const Graph& g) { out.push_back(g); });
    return out;
}

} // namespace detold
