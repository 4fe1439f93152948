#ifndef WEAKCLOSE_KERNEL_HPP
#define WEAKCLOSE_KERNEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "weakclose/answer.hpp"
#include "weakclose/graph.hpp"

namespace weakclose {

// Result of exhausting the high-degree reduction rule: remove the i-th
// ordering vertex whenever its suffix degree reaches gamma*k.
struct KernelInstance {
    Graph graph;                    // reduced graph
    std::vector<int> to_original;   // kernel id -> original id
    int k = 0;
    int gamma_used = 1;             // gamma of the fixpoint ordering
    std::vector<int> removed;       // original ids in removal order
    bool shortcut = false;          // kernel still >= gamma*k^2 vertices: answer is yes
};

// Membership decides G[S] in the class; classes must be closed under
// vertex and edge deletions.
struct MonotoneClass {
    std::string name;
    SetPredicate membership;
};

MonotoneClass edgeless_class();
MonotoneClass acyclic_class();
MonotoneClass bipartite_class();
MonotoneClass max_degree_class(int max_deg);
MonotoneClass edge_count_class(long long max_edges);

// Lookup by name; "max-degree" and "edge-count" require the parameter.
MonotoneClass make_monotone_class(const std::string& name,
                                  std::optional<long long> param = std::nullopt);

struct KernelOptions {
    // Follow the rule against the original ordering only (single pass)
    // instead of re-deriving ordering and gamma after each removal pass.
    bool fixed_ordering = false;
    long long node_budget = 50'000'000;
};

KernelInstance apply_rule1(const Graph& g, int k, const KernelOptions& opt = {});

// Kernelize, shortcut to a greedy independent set when the kernel is
// large, otherwise search the kernel exactly.
ProblemAnswer solve_monotone_subgraph(const Graph& g, int k, const MonotoneClass& cls,
                                      const KernelOptions& opt = {});

ProblemAnswer solve_independent_set(const Graph& g, int k, const KernelOptions& opt = {});

// Exactly k vertices inducing at most t edges.
ProblemAnswer solve_sparsest_k_subgraph(const Graph& g, int k, long long t,
                                        const KernelOptions& opt = {});

} // namespace weakclose

#endif
