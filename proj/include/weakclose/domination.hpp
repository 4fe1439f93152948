#ifndef WEAKCLOSE_DOMINATION_HPP
#define WEAKCLOSE_DOMINATION_HPP

#include "weakclose/answer.hpp"
#include "weakclose/graph.hpp"

namespace weakclose {

// Branching solver for Independent Dominating Set: greedily grow a
// maximal independent set by low-closure vertices; if it overshoots k,
// branch on the common neighbors of two of its members.
ProblemAnswer solve_ids(const Graph& g, int k);

// Branching solver for Dominating Clique: for each ordering-first
// candidate v_i, grow a clique through common neighborhoods of
// not-yet-dominated non-neighbors; fan-out stays below gamma.
ProblemAnswer solve_dominating_clique(const Graph& g, int k);

} // namespace weakclose

#endif
