#ifndef WEAKCLOSE_CLIQUE_HPP
#define WEAKCLOSE_CLIQUE_HPP

#include <functional>
#include <vector>

#include "weakclose/graph.hpp"

namespace weakclose {

// Every maximal clique exactly once, canonical sets, lexicographic order.
// Outer loop walks a closure ordering (each branch roots at v_i inside the
// suffix graph G_i); the inner recursion is pivoted Bron-Kerbosch.
std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g);

// Streaming count without storing the sets.
long long count_maximal_cliques(const Graph& g);

// Visitor form used by both entry points; stop by returning false.
void for_each_maximal_clique(const Graph& g, const std::function<bool(const VertexSet&)>& visit);

} // namespace weakclose

#endif
