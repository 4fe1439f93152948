#ifndef WEAKCLOSE_ORACLE_HPP
#define WEAKCLOSE_ORACLE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weakclose/answer.hpp"
#include "weakclose/graph.hpp"

namespace weakclose {

// Brute-force reference implementations, deliberately separate from the
// main algorithm modules. Hard scale caps fail fast instead of hanging.

// Definitional weak closure: 1 + max over nonempty W of the minimum
// closure number inside G[W]. n <= 12.
int oracle_weak_closure(const Graph& g);

enum class OracleFamily { clique, splex, defective, non_induced_biclique };

// Filter all subsets by the property, keep the maximal ones. n <= 16.
std::vector<VertexSet> oracle_enumerate_maximal(const Graph& g, OracleFamily family,
                                                int s = 0);

// Maximal induced bicliques as canonical side pairs (smaller-min side
// first). n <= 12.
std::vector<std::pair<VertexSet, VertexSet>> oracle_enumerate_maximal_induced_bicliques(
    const Graph& g);

struct OracleParams {
    int k = 0;
    int s = 0;
    int k1 = 0;
    int k2 = 0;
    long long t = 0;
    std::string monotone_class;                // for problem "monotone"
    std::optional<long long> class_param;
};

// Exhaustive definitional search; deterministic lexicographically
// smallest witness. Problems: is, monotone, sparsest, splex, defective,
// ni-biclique, ni-maxedge, ind-kk, ind-k1k2, ids, dc. n <= 16.
ProblemAnswer oracle_decide(const std::string& problem, const Graph& g,
                            const OracleParams& params);

// Literal existence-of-bipartition check used by the graph-core
// invariant tests; exponential, n <= 7 intended.
bool oracle_is_non_induced_biclique_bipartition(const Graph& g, const VertexSet& u);

} // namespace weakclose

#endif
