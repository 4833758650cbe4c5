#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "detold/graph.hpp"
#include "detold/solve.hpp"
#include "detold/verify.hpp"

namespace detold {

using Rational = boost::rational<long long>;

// Auxiliary graph on V(base): u ~ v iff a trail of length 2 or 4 joins them.
// For a C4-free cubic base, DET:OLD sets are exactly the complements of its
// independent sets.
struct ConflictGraph {
    Graph base;
    Graph conflicts;
};

// Existence criterion for cubic graphs. Rejects non-cubic input.
bool cubic_has_detold(const Graph& g);

// Requires a cubic C4-free graph.
ConflictGraph build_conflict_graph(const Graph& g);

// Membership test through the trail characterization; agrees with
// check(g, s, DetOld) on every cubic graph.
bool is_detold_cubic(const Graph& g, const VertexSet& s);
bool is_detold_cubic(const ConflictGraph& cg, const VertexSet& s);

// Size of a maximum independent set inside `allowed`.
int max_independent_set(const Graph& g, const VertexSet& allowed, long* nodes = nullptr);

// Exact minimum via n - alpha(conflict graph); witness is the
// lexicographically smallest optimal set.
SolveResult detold_min_cubic(const Graph& g);

struct DensityBound {
    VertexSet detectors;
    Rational density;
};

// Grows a maximal independent set of the conflict graph in ascending vertex
// order and returns its complement: a DET:OLD set of density <= 30/31 and
// size <= n-1.
DensityBound greedy_density_bound(const Graph& g);

struct ExtremalRow {
    int n = 0;
    Rational max_density{0, 1};
    int best_optimum = 0;
    std::string witness_g6;
};

struct ExtremalTable {
    std::vector<ExtremalRow> rows; // ascending n
    long skipped = 0;              // non-cubic or non-C4-free corpus entries
};

// Highest DET:OLD(G)/n per order across the corpus. Entries that are not
// cubic or not C4-free are skipped and counted.
ExtremalTable extremal_scan(const std::vector<Graph>& corpus, std::optional<int> n_filter,
                            int workers = 1);

} // namespace detold
