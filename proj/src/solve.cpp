#include "detold/solve.hpp"

#include <algorithm>
#include <numeric>

namespace detold {

namespace {

VertexSet set_of(const std::vector<int>& members, int n) {
    VertexSet s(n);
    for (int v : members) s.insert(v);
    return s;
}

struct LevelNeeds {
    int dom;
    bool sharp;
};

LevelNeeds needs_for(Level level) {
    switch (level) {
        case Level::Old: return {1, false};
        case Level::RedOld: return {2, false};
        case Level::DetOld: return {2, true};
    }
    return {1, false};
}

// Branch-and-bound engine shared by the optimizer and the decision query.
struct BranchSolver {
    const Graph& g;
    const Verifier& ver;
    Level level;
    LevelNeeds needs;
    long nodes = 0;

    int best = 0;
    VertexSet best_witness;

    BranchSolver(const Graph& g_, const Verifier& ver_, Level level_)
        : g(g_), ver(ver_), level(level_), needs(needs_for(level_)), best_witness(g_.n) {}

    // Vertices whose addition can repair the cheapest failing certificate of
    // `in`, or an empty set when some certificate is beyond repair.
    VertexSet pick_certificate(const VertexSet& in, const VertexSet& ex) const {
        VertexSet remaining = VertexSet::full(g.n) - in - ex;
        VertexSet best_cand(g.n);
        int best_size = -1;
        bool dominated_ok = true;
        for (int v = 0; v < g.n; ++v) {
            int have = g.nbr[v].count_and(in);
            if (have >= needs.dom) continue;
            dominated_ok = false;
            VertexSet cand = g.nbr[v] & remaining;
            int sz = cand.count();
            if (sz < needs.dom - have) return VertexSet(g.n); // cannot be fixed
            if (best_size < 0 || sz < best_size) {
                best_size = sz;
                best_cand = cand;
            }
        }
        if (!dominated_ok) return best_cand;
        // All vertices dominated: only pairs at distance <= 2 can still fail.
        for (int u = 0; u < g.n; ++u) {
            VertexSet du = g.nbr[u] & in;
            VertexSet ball = g.nbr[u];
            for (int w : g.adj[u]) ball |= g.nbr[w];
            bool dead = false;
            ball.for_each([&](int v) {
                if (v <= u || dead) return;
                VertexSet dv = g.nbr[v] & in;
                bool pass = needs.sharp
                                ? (du.count_minus(dv) >= 2 || dv.count_minus(du) >= 2)
                                : (du.count_xor(dv) >= (level == Level::Old ? 1 : 2));
                if (pass) return;
                VertexSet cand = (g.nbr[u] ^ g.nbr[v]) & remaining;
                int sz = cand.count();
                if (sz == 0) {
                    best_cand = VertexSet(g.n);
                    best_size = 0;
                    dead = true;
                    return;
                }
                if (best_size < 0 || sz < best_size) {
                    best_size = sz;
                    best_cand = cand;
                }
            });
            if (dead) return VertexSet(g.n);
        }
        return best_cand;
    }

    // Admissible count of extra detectors from unresolved domination deficits.
    int lower_bound(const VertexSet& in, const VertexSet& ex) const {
        VertexSet remaining = VertexSet::full(g.n) - in - ex;
        VertexSet deficient(g.n);
        int total_deficit = 0;
        for (int v = 0; v < g.n; ++v) {
            int have = g.nbr[v].count_and(in);
            if (have < needs.dom) {
                deficient.insert(v);
                total_deficit += needs.dom - have;
            }
        }
        if (total_deficit == 0) return 0;
        int best_cover = 0;
        remaining.for_each([&](int w) {
            best_cover = std::max(best_cover, g.nbr[w].count_and(deficient));
        });
        if (best_cover == 0) return g.n + 1; // deficits left, nothing can cover them
        return (total_deficit + best_cover - 1) / best_cover;
    }

    void optimize(const VertexSet& in, const VertexSet& ex) {
        ++nodes;
        if (ver.ok(in, level)) {
            int size = in.count();
            if (size < best) {
                best = size;
                best_witness = in;
            }
            return;
        }
        if (in.count() + std::max(1, lower_bound(in, ex)) >= best) return;
        if (!ver.ok(VertexSet::full(g.n) - ex, level)) return; // monotone: branch dead
        VertexSet cand = pick_certificate(in, ex);
        if (cand.empty()) return;
        VertexSet ex2 = ex;
        VertexSet in2 = in;
        cand.for_each([&](int w) {
            in2.insert(w);
            optimize(in2, ex2);
            in2.erase(w);
            ex2.insert(w);
        });
    }

    bool decide(const VertexSet& in, const VertexSet& ex, int budget) {
        ++nodes;
        int size = in.count();
        if (ver.ok(in, level)) return size <= budget;
        if (size + std::max(1, lower_bound(in, ex)) > budget) return false;
        if (!ver.ok(VertexSet::full(g.n) - ex, level)) return false;
        VertexSet cand = pick_certificate(in, ex);
        if (cand.empty()) return false;
        VertexSet ex2 = ex;
        VertexSet in2 = in;
        for (int w : cand.to_vector()) {
            in2.insert(w);
            if (decide(in2, ex2, budget)) return true;
            in2.erase(w);
            ex2.insert(w);
        }
        return false;
    }
};

} // namespace

SolveResult solve_oracle(const Graph& g, Level level) {
    if (g.n > 22)
        throw capability_error("solve_oracle is capped at n <= 22 (got n=" + std::to_string(g.n) + ")");
    Verifier ver(g);
    SolveResult res;
    res.witness = VertexSet(g.n);
    res.nodes_explored = 1;
    if (!ver.ok(VertexSet::full(g.n), level)) return res; // no superset can help

    for (int k = 0; k <= g.n; ++k) {
        std::vector<int> comb(k);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            ++res.nodes_explored;
            VertexSet s = set_of(comb, g.n);
            if (ver.ok(s, level)) {
                res.feasible = true;
                res.optimum = k;
                res.witness = s;
                return res;
            }
            // next k-combination in lexicographic order
            int i = k - 1;
            while (i >= 0 && comb[i] == g.n - k + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return res; // unreachable: the full set already verified
}

bool solve_bb_decide(const Graph& g, Level level, const VertexSet& required,
                     const VertexSet& excluded, int budget, long* nodes) {
    Verifier ver(g);
    BranchSolver bs(g, ver, level);
    bool out = bs.decide(required, excluded, budget);
    if (nodes) *nodes += bs.nodes;
    return out;
}

SolveResult solve_bb(const Graph& g, Level level) {
    Verifier ver(g);
    SolveResult res;
    res.witness = VertexSet(g.n);
    res.nodes_explored = 1;
    VertexSet all = VertexSet::full(g.n);
    if (!ver.ok(all, level)) return res;

    VertexSet forced(g.n);
    for (int v = 0; v < g.n; ++v) {
        VertexSet s = all;
        s.erase(v);
        if (!ver.ok(s, level)) forced.insert(v);
    }

    BranchSolver bs(g, ver, level);
    bs.best = g.n;
    bs.best_witness = all;
    bs.optimize(forced, VertexSet(g.n));

    res.feasible = true;
    res.optimum = bs.best;

    // Re-canonicalize: the lexicographically smallest witness of optimal size,
    // grown by per-vertex decision queries so the answer is independent of the
    // search order above.
    VertexSet in(g.n), ex(g.n);
    for (int v = 0; v < g.n && in.count() < res.optimum; ++v) {
        in.insert(v);
        BranchSolver q(g, ver, level);
        bool keep = q.decide(in, ex, res.optimum);
        bs.nodes += q.nodes;
        if (!keep) {
            in.erase(v);
            ex.insert(v);
        }
    }
    res.witness = in;
    res.nodes_explored += bs.nodes;
    return res;
}

int min_edge_bound(int n) {
    if (n < 7) throw input_error("no graph on fewer than 7 vertices admits DET:OLD");
    int a = 3 * n - n / 2;
    return (a + 1) / 2;
}

bool deg2_neighbor_ok(const Graph& g) {
    for (int v = 0; v < g.n; ++v) {
        int deg2 = 0;
        for (int w : g.adj[v])
            if (g.degree(w) == 2) ++deg2;
        if (deg2 > 1) return false;
    }
    return true;
}

} // namespace detold
