#ifndef WEAKCLOSE_CLOSURE_HPP
#define WEAKCLOSE_CLOSURE_HPP

#include <vector>

#include "weakclose/graph.hpp"

namespace weakclose {

// Vertex ordering v_1..v_n with step_closure[i] = cl_{G_i}(v_i), where
// G_i is the subgraph induced by {v_i..v_n}. gamma = 1 + max step value,
// at least 1, and equals the weak closure number of the graph: the greedy
// minimum-closure peeling is exact because cl only shrinks when taking
// induced subgraphs (same argument as for degeneracy orderings).
struct ClosureOrdering {
    std::vector<int> order;
    std::vector<int> step_closure;
    int gamma = 1;
};

struct DegeneracyOrdering {
    std::vector<int> order;
    std::vector<int> step_degree;
    int d = 0;
};

struct GraphStats {
    int n = 0;
    long long m = 0;
    int max_degree = 0;
    int c = 1;
    int d = 0;
    int gamma = 1;
};

// cl_G(v): most common neighbors v shares with any non-neighbor;
// 0 for a universal vertex (max over an empty set).
int closure_of_vertex(const Graph& g, int v);

// Smallest c with cl_G(v) < c for all v; always >= 1.
int c_closure(const Graph& g);

// Greedy minimum-closure peeling, lowest id on ties.
ClosureOrdering closure_ordering(const Graph& g);

// Greedy minimum-degree peeling, lowest id on ties; d is the degeneracy.
DegeneracyOrdering degeneracy_ordering(const Graph& g);

GraphStats graph_stats(const Graph& g);

// "rank vertex_label step_closure" lines.
std::string format_ordering(const Graph& g, const ClosureOrdering& ord);

} // namespace weakclose

#endif
