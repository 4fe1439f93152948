#ifndef WEAKCLOSE_BICLIQUE_HPP
#define WEAKCLOSE_BICLIQUE_HPP

#include <vector>

#include "weakclose/answer.hpp"
#include "weakclose/graph.hpp"

namespace weakclose {

// A vertex set U is a non-induced biclique when G[U] contains a spanning
// complete bipartite subgraph; equivalently the complement of G[U] is
// disconnected (and |U| >= 2).
bool is_non_induced_biclique(const Graph& g, const VertexSet& u);

// Incremental enumeration over the reverse closure ordering, mirroring the
// dense-subgraph engine; canonical sets in lexicographic order.
std::vector<VertexSet> enumerate_maximal_non_induced_bicliques(const Graph& g);

struct SubsetSumInstance {
    SubsetSumInstance(std::vector<long long> values, long long lo, long long hi);
    std::vector<long long> values;
    long long lo = 0;
    long long hi = 0;
};

struct SubsetSumResult {
    bool decision = false;
    std::vector<int> chosen_indices;  // ascending; empty subset reaches 0
    long long sum = 0;
};

// Reachability DP over sums with back-pointers.
SubsetSumResult solve_subset_sum_range(const SubsetSumInstance& inst);

// For each maximal non-induced biclique U with complement components
// C_1..C_l, asks Subset Sum for a component union of size in
// [k1, |U|-k2]; that union and its complement in U are the sides.
ProblemAnswer solve_non_induced_biclique(const Graph& g, int k1, int k2);

// |S|*|T| >= k via the grid k1 = 1..ceil(sqrt(k)), k2 = ceil(k/k1).
ProblemAnswer solve_max_edge_non_induced_biclique(const Graph& g, long long k);

// Induced (k,k)-biclique in gamma terms: no for k >= gamma, otherwise
// anchor-pair branching with an independent-set search on the common
// neighborhood of the chosen side T.
ProblemAnswer solve_induced_kk_biclique(const Graph& g, int k);

// Exact branching for an independent set with k1 vertices in V1 and k2 in
// V2; intended for reduced instances with at most 2c-2 vertices.
ProblemAnswer solve_bicolored_independent_set(const Graph& g, const VertexSet& v1,
                                              const VertexSet& v2, int k1, int k2);

// Induced (k1,k2)-biclique for k1 >= 2 via the induced-C4 reduction to
// Bicolored Independent Set.
ProblemAnswer solve_induced_biclique_cclosed(const Graph& g, int k1, int k2);

// Induced (1,k2)-biclique on diamond-free graphs: a vertex whose
// neighborhood splits into at least k2 cliques.
ProblemAnswer solve_induced_1k_diamond_free(const Graph& g, int k2);

// Dispatch for 2-closed inputs: k1 = 1 goes to the diamond-free routine,
// k1 >= 2 to the c-closed routine.
ProblemAnswer solve_induced_biclique_2closed(const Graph& g, int k1, int k2);

// Empty when g is diamond-free; otherwise the four vertices of an induced
// diamond (K4 minus an edge).
std::vector<int> find_diamond(const Graph& g);

} // namespace weakclose

#endif
