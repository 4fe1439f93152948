#include "weakclose/domination.hpp"

#include <algorithm>

#include "weakclose/bitset_utils.hpp"
#include "weakclose/closure.hpp"

namespace weakclose {

namespace {

// Minimum-closure vertex of the subgraph induced by alive (lowest id on
// ties) — the head of a fresh closure ordering of that subgraph.
int min_closure_vertex(const std::vector<Bits>& adj, const Bits& alive) {
    int best = -1;
    int best_cl = 0;
    for (auto v = alive.find_first(); v != Bits::npos; v = alive.find_next(v)) {
        Bits nv = adj[v] & alive;
        int cl = 0;
        Bits others = alive & ~nv;
        others.reset(v);
        for (auto u = others.find_first(); u != Bits::npos; u = others.find_next(u))
            cl = std::max(cl, static_cast<int>((nv & adj[u] & alive).count()));
        if (best == -1 || cl < best_cl) {
            best = static_cast<int>(v);
            best_cl = cl;
        }
        if (best_cl == 0) break;  // cannot improve; find_first order is ascending
    }
    return best;
}

} // namespace

ProblemAnswer solve_ids(const Graph& g, int k) {
    if (k < 0) throw DomainError("k must be nonnegative");
    int n = g.vertex_count();
    auto adj = adjacency_bitsets(g);
    int gamma = closure_ordering(g).gamma;

    ProblemAnswer ans;
    ans.stats["gamma"] = gamma;
    long long nodes = 0;
    std::vector<int> chosen;

    auto rec = [&](auto&& self, Bits alive, int budget) -> bool {
        ++nodes;
        if (budget == 0 && alive.any()) return false;

        // Greedy maximal independent set through low-closure vertices;
        // allowed to overshoot the budget by one before we branch.
        std::vector<int> greedy;
        Bits rest = alive;
        while (rest.any() && static_cast<int>(greedy.size()) <= budget) {
            int v = min_closure_vertex(adj, rest);
            greedy.push_back(v);
            rest &= ~adj[v];
            rest.reset(v);
        }
        if (static_cast<int>(greedy.size()) <= budget) {
            chosen.insert(chosen.end(), greedy.begin(), greedy.end());
            return true;
        }

        // Any solution must hit the common neighbors of two greedy picks.
        Bits in_i(n);
        for (int v : greedy) in_i.set(v);
        std::vector<int> p;
        for (auto w = alive.find_first(); w != Bits::npos; w = alive.find_next(w))
            if ((adj[w] & in_i).count() >= 2) p.push_back(static_cast<int>(w));
        detail::check_invariant(
            static_cast<long long>(p.size()) <=
                static_cast<long long>(gamma - 1) * (budget + 1) * budget / 2,
            "IDS branch set exceeds the (gamma-1)*C(k+1,2) bound");
        ans.stats["max_branch_width"] =
            std::max(ans.stats["max_branch_width"], static_cast<long long>(p.size()));

        for (int u : p) {
            chosen.push_back(u);
            Bits next = alive & ~adj[u];
            next.reset(u);
            if (self(self, std::move(next), budget - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };

    Bits all(n);
    all.set();
    if (rec(rec, std::move(all), k)) {
        ans.decision = true;
        ans.witness = VertexSet::of(chosen);
    }
    ans.stats["nodes"] = nodes;
    return ans;
}

ProblemAnswer solve_dominating_clique(const Graph& g, int k) {
    if (k < 0) throw DomainError("k must be nonnegative");
    int n = g.vertex_count();
    ProblemAnswer ans;
    if (n == 0) {
        ans.decision = true;
        ans.witness = VertexSet{};
        return ans;
    }
    if (k == 0) return ans;

    auto adj = adjacency_bitsets(g);
    auto ord = closure_ordering(g);
    ans.stats["gamma"] = ord.gamma;
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[ord.order[i]] = i;
    long long nodes = 0;

    std::vector<int> team;  // current T
    auto rec = [&](auto&& self, Bits alive, Bits common, int vi, int budget) -> bool {
        ++nodes;
        Bits dominated(n);
        for (int x : team) dominated |= adj[x];
        for (int x : team) dominated.set(x);
        if ((alive & ~dominated).none()) return true;
        if (budget == 0) return false;

        // Lowest-id non-neighbor of v_i still present; in the shrunken
        // graph every such vertex is undominated.
        Bits outside = alive & ~adj[vi];
        outside.reset(vi);
        detail::check_invariant(outside.any(),
                                "an undominated vertex must be a non-neighbor of v_i");
        int w = static_cast<int>(outside.find_first());

        Bits branch = common & adj[w] & alive;
        // Only vertices at or after v_i in the ordering may extend T.
        std::vector<int> branch_list;
        for (auto u = branch.find_first(); u != Bits::npos; u = branch.find_next(u))
            if (pos[static_cast<int>(u)] > pos[vi]) branch_list.push_back(static_cast<int>(u));
        if (ord.gamma >= 2)
            detail::check_invariant(
                static_cast<int>(branch_list.size()) <= ord.gamma - 1,
                "dominating-clique fan-out exceeds gamma-1");
        ans.stats["max_fanout"] =
            std::max(ans.stats["max_fanout"], static_cast<long long>(branch_list.size()));

        for (int u : branch_list) {
            team.push_back(u);
            Bits removal = adj[u] & ~adj[vi];  // N(u) \ N[v_i]
            removal.reset(vi);
            if (self(self, alive & ~removal, common & adj[u], vi, budget - 1)) return true;
            team.pop_back();
        }
        return false;
    };

    Bits all(n);
    all.set();
    for (int i = 0; i < n; ++i) {
        int v = ord.order[i];
        team.assign(1, v);
        if (rec(rec, all, adj[v], v, k - 1)) {
            ans.decision = true;
            ans.witness = VertexSet::of(team);
            break;
        }
    }
    ans.stats["nodes"] = nodes;
    return ans;
}

} // namespace weakclose
