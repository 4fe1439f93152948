#ifndef WEAKCLOSE_ANSWER_HPP
#define WEAKCLOSE_ANSWER_HPP

#include <map>
#include <optional>
#include <string>

#include "weakclose/graph.hpp"

namespace weakclose {

// Two disjoint sides with every cross pair adjacent; if induced, both
// sides are independent sets as well.
struct BicliqueWitness {
    VertexSet side_s;
    VertexSet side_t;
    bool induced = false;
};

// Uniform solver result: decision, optional witness (a set or a biclique
// pair), and counters describing the search.
struct ProblemAnswer {
    bool decision = false;
    std::optional<VertexSet> witness;
    std::optional<BicliqueWitness> biclique;
    std::map<std::string, long long> stats;

    static ProblemAnswer no() { return {}; }
    static ProblemAnswer yes(VertexSet w) {
        ProblemAnswer a;
        a.decision = true;
        a.witness = std::move(w);
        return a;
    }
    static ProblemAnswer yes(BicliqueWitness w) {
        ProblemAnswer a;
        a.decision = true;
        a.biclique = std::move(w);
        return a;
    }
};

} // namespace weakclose

#endif
