#ifndef WEAKCLOSE_DENSE_HPP
#define WEAKCLOSE_DENSE_HPP

#include <cstdint>
#include <vector>

#include "weakclose/answer.hpp"
#include "weakclose/graph.hpp"

namespace weakclose {

enum class DenseKind { splex, defective };

// Deduplicated family of maximal sets of one kind, canonical order.
struct EnumFamily {
    std::vector<VertexSet> sets;
    std::uint64_t graph_fingerprint = 0;
    int s = 0;
    DenseKind kind = DenseKind::splex;
};

struct EnumOptions {
    // Hard cap on the common-neighborhood pool whose subsets are
    // enumerated (that pool is provably smaller than gamma; the cap stops
    // runaway inputs instead of hanging).
    int common_neighborhood_cap = 25;
    // Cap on clique collections examined by the cover-based solver.
    long long collection_budget = 2'000'000;
};

// Incremental enumeration over the reverse closure ordering; s >= 2
// (s = 1 is clique enumeration and is rejected here).
EnumFamily enumerate_maximal_splexes(const Graph& g, int s, const EnumOptions& opt = {});

// Same skeleton with the defective-clique candidate caps; s >= 1.
EnumFamily enumerate_maximal_defective_cliques(const Graph& g, int s,
                                               const EnumOptions& opt = {});

// Yes iff some maximal s-plex has at least k vertices; s >= 1 (s = 1 goes
// through clique enumeration).
ProblemAnswer solve_splex(const Graph& g, int s, int k, const EnumOptions& opt = {});

// Yes iff some maximal s-defective clique has at least k vertices; s >= 0.
ProblemAnswer solve_defective_clique(const Graph& g, int s, int k,
                                     const EnumOptions& opt = {});

// Covers an s-defective clique S by pairwise-disjoint cliques of G whose
// union is S: greedy proper coloring of the complement of G[S] in
// descending complement-degree order. Class count stays within
// floor(sqrt(2s+1/4)+1/2).
std::vector<VertexSet> clique_cover_of_defective(const Graph& g, const VertexSet& s_set,
                                                 int s);

// Number of cliques the cover lemma allows for a given s.
int clique_cover_bound(int s);

// Clique phase first, then unions of at most clique_cover_bound(s)
// maximal cliques, each handed to the enumeration-based solver.
ProblemAnswer solve_defective_clique_via_cover(const Graph& g, int s, int k,
                                               const EnumOptions& opt = {});

// |S| <= c_closure(G) + s for any s-defective clique with a non-edge;
// returns whether the bound holds (test hook and pruning aid).
bool defective_clique_size_bound(const Graph& g, const VertexSet& s_set, int s);

// Theorem-stated ceilings on family sizes, used by the enumerators'
// internal checks and by the test suites.
unsigned long long splex_family_bound(int n, int gamma, int s);
unsigned long long defective_family_bound(int n, int gamma, int s);

} // namespace weakclose

#endif
