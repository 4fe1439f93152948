#include "weakclose/kernel.hpp"

#include <algorithm>
#include <queue>

#include "weakclose/closure.hpp"

namespace weakclose {

namespace {

bool forest_membership(const Graph& g, const VertexSet& s) {
    // Cycle detection restricted to S via DFS with parent edges.
    const auto& mem = s.members();
    std::vector<int> state(g.vertex_count(), 0);  // 0 outside, 1 in S
    for (int v : mem) state[v] = 1;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int root : mem) {
        if (seen[root]) continue;
        std::vector<std::pair<int, int>> stack{{root, -1}};
        seen[root] = 1;
        while (!stack.empty()) {
            auto [v, parent] = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (!state[w] || w == parent) continue;
                if (seen[w]) return false;
                seen[w] = 1;
                stack.push_back({w, v});
            }
        }
    }
    return true;
}

bool bipartite_membership(const Graph& g, const VertexSet& s) {
    const auto& mem = s.members();
    std::vector<int> color(g.vertex_count(), -2);
    for (int v : mem) color[v] = -1;
    for (int root : mem) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (color[w] == -2) continue;
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

long long edges_inside(const Graph& g, const VertexSet& s) {
    long long count = 0;
    for (int v : s)
        for (int w : g.neighbors(v))
            if (w > v && s.contains(w)) ++count;
    return count;
}

} // namespace

MonotoneClass edgeless_class() {
    return {"edgeless",
            [](const Graph& g, const VertexSet& s) { return is_independent_set(g, s); }};
}

MonotoneClass acyclic_class() { return {"acyclic", forest_membership}; }

MonotoneClass bipartite_class() { return {"bipartite", bipartite_membership}; }

MonotoneClass max_degree_class(int max_deg) {
    return {"max-degree-" + std::to_string(max_deg),
            [max_deg](const Graph& g, const VertexSet& s) {
                for (int v : s) {
                    int inside = 0;
                    for (int w : g.neighbors(v))
                        if (s.contains(w)) ++inside;
                    if (inside > max_deg) return false;
                }
                return true;
            }};
}

MonotoneClass edge_count_class(long long max_edges) {
    return {"edge-count-" + std::to_string(max_edges),
            [max_edges](const Graph& g, const VertexSet& s) {
                return edges_inside(g, s) <= max_edges;
            }};
}

MonotoneClass make_monotone_class(const std::string& name, std::optional<long long> param) {
    if (name == "edgeless") return edgeless_class();
    if (name == "acyclic") return acyclic_class();
    if (name == "bipartite") return bipartite_class();
    if (name == "max-degree") {
        if (!param) throw ConfigError("class max-degree needs a degree parameter");
        return max_degree_class(static_cast<int>(*param));
    }
    if (name == "edge-count") {
        if (!param) throw ConfigError("class edge-count needs an edge parameter");
        return edge_count_class(*param);
    }
    throw ConfigError("unknown monotone class: " + name);
}

KernelInstance apply_rule1(const Graph& g, int k, const KernelOptions& opt) {
    if (k < 1) throw DomainError("kernelization requires k >= 1");

    std::vector<char> alive(g.vertex_count(), 1);
    std::vector<int> removed;
    int gamma_used = 1;

    while (true) {
        std::vector<int> keep;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (alive[v]) keep.push_back(v);
        auto sub = induced_subgraph(g, VertexSet::from_sorted(keep));
        auto ord = closure_ordering(sub.graph);
        gamma_used = ord.gamma;

        long long threshold = static_cast<long long>(ord.gamma) * k;
        int n = sub.graph.vertex_count();
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[ord.order[i]] = i;

        std::vector<int> fired;
        for (int i = 0; i < n; ++i) {
            int v = ord.order[i];
            long long suffix_degree = 0;
            for (int w : sub.graph.neighbors(v))
                if (pos[w] > i) ++suffix_degree;
            if (suffix_degree >= threshold) fired.push_back(v);
        }
        if (fired.empty()) break;
        for (int v : fired) {
            removed.push_back(sub.to_original[v]);
            alive[sub.to_original[v]] = 0;
        }
        if (opt.fixed_ordering) {
            // Literal mode: one sweep against the original ordering.
            std::vector<int> keep2;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (alive[v]) keep2.push_back(v);
            auto final_sub = induced_subgraph(g, VertexSet::from_sorted(keep2));
            KernelInstance out;
            out.graph = final_sub.graph;
            out.to_original = final_sub.to_original;
            out.k = k;
            out.gamma_used = gamma_used;
            out.removed = removed;
            out.shortcut = final_sub.graph.vertex_count() >=
                           static_cast<long long>(gamma_used) * k * k;
            return out;
        }
    }

    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (alive[v]) keep.push_back(v);
    auto final_sub = induced_subgraph(g, VertexSet::from_sorted(keep));

    KernelInstance out;
    out.graph = final_sub.graph;
    out.to_original = final_sub.to_original;
    out.k = k;
    out.gamma_used = gamma_used;
    out.removed = removed;
    out.shortcut =
        final_sub.graph.vertex_count() >= static_cast<long long>(gamma_used) * k * k;
    if (!out.shortcut)
        detail::check_invariant(out.graph.vertex_count() <
                                    static_cast<long long>(out.gamma_used) * k * k,
                                "kernel must stay below gamma*k^2 vertices");
    detail::check_invariant(degeneracy_ordering(out.graph).d <
                                static_cast<long long>(out.gamma_used) * k,
                            "kernel degeneracy must stay below gamma*k");
    return out;
}

namespace {

// Independent set by minimum-degree peeling; large enough on any kernel
// the shortcut accepts because its degeneracy is below gamma*k.
std::vector<int> greedy_independent_set(const Graph& g, int want) {
    std::vector<char> alive(g.vertex_count(), 1);
    std::vector<int> deg(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
    std::vector<int> picked;
    int remaining = g.vertex_count();
    while (remaining > 0 && static_cast<int>(picked.size()) < want) {
        int v = -1;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (alive[u] && (v == -1 || deg[u] < deg[v])) v = u;
        picked.push_back(v);
        alive[v] = 0;
        --remaining;
        for (int w : g.neighbors(v)) {
            if (!alive[w]) continue;
            alive[w] = 0;
            --remaining;
            for (int x : g.neighbors(w))
                if (alive[x]) --deg[x];
        }
    }
    return picked;
}

} // namespace

ProblemAnswer solve_monotone_subgraph(const Graph& g, int k, const MonotoneClass& cls,
                                      const KernelOptions& opt) {
    if (k < 0) throw DomainError("k must be nonnegative");
    ProblemAnswer ans;
    if (k == 0) {
        ans.decision = true;
        ans.witness = VertexSet{};
        return ans;
    }

    KernelInstance kernel = apply_rule1(g, k, opt);
    ans.stats["kernel_vertices"] = kernel.graph.vertex_count();
    ans.stats["removed"] = static_cast<long long>(kernel.removed.size());
    ans.stats["gamma_used"] = kernel.gamma_used;

    if (kernel.shortcut) {
        auto picked = greedy_independent_set(kernel.graph, k);
        detail::check_invariant(static_cast<int>(picked.size()) >= k,
                                "shortcut kernel must contain a size-k independent set");
        std::vector<int> lifted;
        for (int v : picked) lifted.push_back(kernel.to_original[v]);
        VertexSet witness = VertexSet::of(std::move(lifted));
        detail::check_invariant(cls.membership(g, witness),
                                "independent sets must belong to every registered class");
        ans.decision = true;
        ans.witness = witness;
        ans.stats["shortcut"] = 1;
        return ans;
    }

    // Exact search on the kernel: vertices in descending-degree order,
    // include/exclude branching. Monotone classes admit pruning as soon as
    // the chosen set leaves the class.
    const Graph& kg = kernel.graph;
    int n = kg.vertex_count();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (kg.degree(a) != kg.degree(b)) return kg.degree(a) > kg.degree(b);
        return a < b;
    });

    long long nodes = 0;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int idx) -> bool {
        if (++nodes > opt.node_budget)
            throw ResourceError("kernel search node budget exhausted", nodes);
        if (static_cast<int>(chosen.size()) >= k) return true;
        if (idx == n) return false;
        if (static_cast<int>(chosen.size()) + (n - idx) < k) return false;

        chosen.push_back(order[idx]);
        if (cls.membership(kg, VertexSet::of(chosen)) && self(self, idx + 1)) return true;
        chosen.pop_back();
        return self(self, idx + 1);
    };

    if (rec(rec, 0)) {
        std::vector<int> lifted;
        for (int v : chosen) lifted.push_back(kernel.to_original[v]);
        ans.decision = true;
        ans.witness = VertexSet::of(std::move(lifted));
        detail::check_invariant(cls.membership(g, *ans.witness),
                                "witness must satisfy the class on the original graph");
    }
    ans.stats["search_nodes"] = nodes;
    return ans;
}

ProblemAnswer solve_independent_set(const Graph& g, int k, const KernelOptions& opt) {
    return solve_monotone_subgraph(g, k, edgeless_class(), opt);
}

ProblemAnswer solve_sparsest_k_subgraph(const Graph& g, int k, long long t,
                                        const KernelOptions& opt) {
    if (k < 0 || t < 0) throw DomainError("parameters must be nonnegative");
    ProblemAnswer ans = solve_monotone_subgraph(g, k, edge_count_class(t), opt);
    if (ans.decision && ans.witness->size() > k) {
        // Monotone: any k-subset keeps at most t edges.
        std::vector<int> trimmed(ans.witness->members().begin(),
                                 ans.witness->members().begin() + k);
        ans.witness = VertexSet::from_sorted(std::move(trimmed));
    }
    return ans;
}

} // namespace weakclose
