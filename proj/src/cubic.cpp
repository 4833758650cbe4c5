#include "detold/cubic.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "detold/graph6.hpp"

namespace detold {

namespace {

void require_cubic(const Graph& g) {
    if (!g.is_cubic()) throw input_error("graph is not cubic");
}

} // namespace

bool cubic_has_detold(const Graph& g) {
    require_cubic(g);
    return is_c4_free(g);
}

ConflictGraph build_conflict_graph(const Graph& g) {
    require_cubic(g);
    if (!is_c4_free(g)) throw input_error("graph contains a 4-cycle; no DET:OLD exists");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.n; ++v) {
        VertexSet reach = trail_set(g, v, 2).members | trail_set(g, v, 4).members;
        reach.for_each([&](int u) {
            if (u > v) edges.emplace_back(v, u); // trail reversal makes this symmetric
        });
    }
    return ConflictGraph{g, Graph::from_edges(g.n, edges)};
}

bool is_detold_cubic(const ConflictGraph& cg, const VertexSet& s) {
    // S is DET:OLD iff the non-detectors form an independent set of conflicts.
    VertexSet out = VertexSet::full(cg.base.n) - s;
    bool independent = true;
    out.for_each([&](int v) {
        if (independent && cg.conflicts.nbr[v].intersects(out)) independent = false;
    });
    return independent;
}

bool is_detold_cubic(const Graph& g, const VertexSet& s) {
    require_cubic(g);
    if (!is_c4_free(g)) return false;
    return is_detold_cubic(build_conflict_graph(g), s);
}

namespace {

int mis_rec(const Graph& g, VertexSet alive, long* nodes) {
    if (nodes) ++*nodes;
    int bonus = 0;
    // Degree 0 and 1 vertices are always safe to take.
    for (bool changed = true; changed;) {
        changed = false;
        int low = -1;
        alive.for_each([&](int v) {
            if (low >= 0) return;
            if (g.nbr[v].count_and(alive) <= 1) low = v;
        });
        if (low >= 0) {
            ++bonus;
            alive -= g.nbr[low];
            alive.erase(low);
            changed = true;
        }
    }
    if (alive.empty()) return bonus;
    int pick = -1, pick_deg = -1;
    alive.for_each([&](int v) {
        int d = g.nbr[v].count_and(alive);
        if (d > pick_deg) {
            pick_deg = d;
            pick = v;
        }
    });
    VertexSet with = alive;
    with -= g.nbr[pick];
    with.erase(pick);
    int best = 1 + mis_rec(g, with, nodes);
    VertexSet without = alive;
    without.erase(pick);
    return bonus + std::max(best, mis_rec(g, without, nodes));
}

} // namespace

int max_independent_set(const Graph& g, const VertexSet& allowed, long* nodes) {
    return mis_rec(g, allowed, nodes);
}

SolveResult detold_min_cubic(const Graph& g) {
    require_cubic(g);
    if (!is_c4_free(g)) throw input_error("graph contains a 4-cycle; no DET:OLD exists");
    ConflictGraph cg = build_conflict_graph(g);

    SolveResult res;
    res.feasible = true;
    VertexSet all = VertexSet::full(g.n);
    int alpha = max_independent_set(cg.conflicts, all, &res.nodes_explored);
    res.optimum = g.n - alpha;

    // Is there a valid S of size optimum with in <= S and S disjoint from ex?
    // Equivalently the excluded vertices extend to a maximum independent set
    // avoiding `in`.
    auto feasible = [&](const VertexSet& in, const VertexSet& ex) {
        bool ex_independent = true;
        ex.for_each([&](int v) {
            if (ex_independent && cg.conflicts.nbr[v].intersects(ex)) ex_independent = false;
        });
        if (!ex_independent) return false;
        VertexSet cand = all - in - ex;
        ex.for_each([&](int v) { cand -= cg.conflicts.nbr[v]; });
        return ex.count() + max_independent_set(cg.conflicts, cand, &res.nodes_explored) >= alpha;
    };

    VertexSet in(g.n), ex(g.n);
    for (int v = 0; v < g.n && in.count() < res.optimum; ++v) {
        in.insert(v);
        if (!feasible(in, ex)) {
            in.erase(v);
            ex.insert(v);
        }
    }
    res.witness = in;
    return res;
}

DensityBound greedy_density_bound(const Graph& g) {
    require_cubic(g);
    if (!is_c4_free(g)) throw input_error("graph contains a 4-cycle; no DET:OLD exists");
    ConflictGraph cg = build_conflict_graph(g);
    VertexSet sbar(g.n);
    for (int v = 0; v < g.n; ++v)
        if (!cg.conflicts.nbr[v].intersects(sbar)) sbar.insert(v);
    VertexSet s = VertexSet::full(g.n) - sbar;
    return DensityBound{s, Rational(s.count(), g.n)};
}

ExtremalTable extremal_scan(const std::vector<Graph>& corpus, std::optional<int> n_filter,
                            int workers) {
    struct Entry {
        bool skipped = false;
        bool ignored = false;
        int n = 0;
        int optimum = 0;
        std::string g6;
    };
    std::vector<Entry> entries(corpus.size());

    auto work = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            const Graph& g = corpus[i];
            Entry& e = entries[i];
            if (n_filter && g.n != *n_filter) {
                e.ignored = true;
                continue;
            }
            if (!g.is_cubic() || !is_c4_free(g)) {
                e.skipped = true;
                continue;
            }
            e.n = g.n;
            e.optimum = detold_min_cubic(g).optimum;
            e.g6 = to_graph6(g);
        }
    };

    workers = std::max(1, workers);
    if (workers == 1 || corpus.size() < 2) {
        work(0, corpus.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (corpus.size() + workers - 1) / workers;
        for (size_t b = 0; b < corpus.size(); b += chunk)
            pool.emplace_back(work, b, std::min(b + chunk, corpus.size()));
        for (auto& t : pool) t.join();
    }

    ExtremalTable table;
    std::map<int, ExtremalRow> best;
    for (const Entry& e : entries) {
        if (e.ignored) continue;
        if (e.skipped) {
            ++table.skipped;
            continue;
        }
        Rational density(e.optimum, e.n);
        auto it = best.find(e.n);
        if (it == best.end() || density > it->second.max_density)
            best[e.n] = ExtremalRow{e.n, density, e.optimum, e.g6};
    }
    for (auto& [n, row] : best) table.rows.push_back(row);
    return table;
}

} // namespace detold
