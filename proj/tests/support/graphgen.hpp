#ifndef WEAKCLOSE_TESTS_GRAPHGEN_HPP
#define WEAKCLOSE_TESTS_GRAPHGEN_HPP

#include <random>
#include <vector>

#include "weakclose/graph.hpp"

namespace weakclose::testsupport {

// One representative per isomorphism class, for all graphs on 1..max_n
// vertices (max_n <= 7). Built by vertex augmentation with min-over-
// permutations canonical forms; results are cached per process.
const std::vector<Graph>& all_graphs_up_to(int max_n);

// Graphs on exactly n vertices, same representatives.
std::vector<Graph> all_graphs_exactly(int n);

// Known counts of non-isomorphic graphs, indexed by n (1-based, n <= 7).
long long expected_graph_count(int n);

Graph random_graph(std::mt19937& rng, int n, double p);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph edgeless_graph(int n);
Graph complete_bipartite(int a, int b);
// Two disjoint r-cliques.
Graph two_cliques(int r);
// A universal vertex plus t disjoint triangles.
Graph universal_plus_triangles(int t);

} // namespace weakclose::testsupport

#endif
