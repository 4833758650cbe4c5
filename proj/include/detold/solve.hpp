#pragma once

#include "detold/graph.hpp"
#include "detold/verify.hpp"

namespace detold {

struct SolveResult {
    bool feasible = false;
    int optimum = -1;          // defined when feasible
    VertexSet witness;         // lexicographically smallest optimal set
    long nodes_explored = 0;
};

// Brute-force reference: sweeps subsets in size order, lexicographic within a
// size. Hard-capped at n <= 22.
SolveResult solve_oracle(const Graph& g, Level level);

// Exact branch-and-bound. Decides existence via the full vertex set, seeds
// with the forced detectors, branches on failing certificates, and bounds by
// domination deficits. Agrees with solve_oracle wherever both run.
SolveResult solve_bb(const Graph& g, Level level);

// Decision variant of the branch-and-bound: is there a valid set S with
// required subset of S, excluded disjoint from S, and |S| <= budget?
bool solve_bb_decide(const Graph& g, Level level, const VertexSet& required,
                     const VertexSet& excluded, int budget, long* nodes = nullptr);

// Least edge count possible for a graph on n >= 7 vertices admitting DET:OLD:
// ceil((3n - floor(n/2)) / 2). Sharp for n >= 9.
int min_edge_bound(int n);

// Necessary condition for DET:OLD existence: no vertex has two or more
// neighbors of degree 2.
bool deg2_neighbor_ok(const Graph& g);

} // namespace detold
