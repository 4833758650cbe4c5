#pragma once

#include <string>
#include <vector>

#include "detold/graph.hpp"

namespace detold {

// Detection level. OLD needs 1-domination and 1-distinguished pairs; RED:OLD
// needs 2-domination and 2-distinguished pairs; DET:OLD needs 2-domination and
// sharp 2-distinguished pairs (a one-sided difference of size >= 2).
enum class Level { Old, RedOld, DetOld };

const char* level_name(Level level);      // "old", "red-old", "det-old"
Level level_from_name(const std::string& name);

struct Failure {
    enum class Kind { UnderDominated, Undistinguished };
    enum class Distinguish { Plain, Sharp };

    Kind kind = Kind::UnderDominated;
    int u = 0;        // the vertex, or the smaller vertex of the pair
    int v = -1;       // the larger vertex of an undistinguished pair
    Distinguish how = Distinguish::Plain;
    int have = 0;
    int need = 0;

    bool operator==(const Failure&) const = default;
};

std::string describe(const Failure& f);

struct Verdict {
    bool ok = true;
    std::vector<Failure> failures; // under-dominated by vertex, then pairs by (u,v)
};

// N(v) intersected with s.
VertexSet dominators(const Graph& g, const VertexSet& s, int v);

// |N_S(u) symmetric-difference N_S(v)| >= k.
bool k_distinguished(const Graph& g, const VertexSet& s, int u, int v, int k);

// |N_S(u) - N_S(v)| >= k or |N_S(v) - N_S(u)| >= k.
bool sharp_k_distinguished(const Graph& g, const VertexSet& s, int u, int v, int k);

// Precomputes the distance<=2 pair list for a graph so repeated checks (the
// solvers sweep thousands of candidate sets) skip the provably fine pairs:
// once both endpoints meet the domination threshold, a pair at distance >= 3
// has disjoint dominator sets and passes every level's distinguishing test.
class Verifier {
public:
    explicit Verifier(const Graph& g);

    const Graph& graph() const { return *g_; }

    // Early-exit feasibility test.
    bool ok(const VertexSet& s, Level level) const;

    // Full verdict; lists every violation. Pairs at distance >= 3 are skipped
    // only when both endpoints passed domination, which never drops a failure.
    Verdict check(const VertexSet& s, Level level) const;

    // All-pairs scan with no shortcut; the test oracle for check().
    Verdict check_all_pairs(const VertexSet& s, Level level) const;

private:
    Verdict run(const VertexSet& s, Level level, bool all_pairs) const;

    const Graph* g_;
    std::vector<std::pair<int, int>> near_pairs_; // dist(u,v) <= 2, u < v
};

Verdict check(const Graph& g, const VertexSet& s, Level level);

// Vertices present in every set of the given level: exactly those v for which
// V - {v} fails. Throws no_solution_error when no set of this level exists.
VertexSet forced_detectors(const Graph& g, Level level);

} // namespace detold
