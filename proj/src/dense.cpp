#include "weakclose/dense.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "weakclose/bitset_utils.hpp"
#include "weakclose/clique.hpp"
#include "weakclose/closure.hpp"

namespace weakclose {

namespace {

unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > std::numeric_limits<unsigned long long>::max() / b)
        return std::numeric_limits<unsigned long long>::max();
    return a * b;
}

unsigned long long sat_pow(unsigned long long base, int exp) {
    unsigned long long r = 1;
    for (int i = 0; i < exp; ++i) r = sat_mul(r, base);
    return r;
}

unsigned long long sat_shift(int bits) {
    if (bits >= 63) return std::numeric_limits<unsigned long long>::max();
    return 1ull << bits;
}

bool splex_ok(const std::vector<Bits>& adj, const Bits& s_bits, int s) {
    int k = static_cast<int>(s_bits.count());
    int need = k - s;
    if (need <= 0) return true;
    for (auto v = s_bits.find_first(); v != Bits::npos; v = s_bits.find_next(v))
        if (static_cast<int>((adj[v] & s_bits).count()) < need) return false;
    return true;
}

long long missing_edges(const std::vector<Bits>& adj, const Bits& s_bits) {
    long long k = static_cast<long long>(s_bits.count());
    long long inside = 0;
    for (auto v = s_bits.find_first(); v != Bits::npos; v = s_bits.find_next(v))
        inside += static_cast<long long>((adj[v] & s_bits).count());
    return k * (k - 1) / 2 - inside / 2;
}

bool defective_ok(const std::vector<Bits>& adj, const Bits& s_bits, int s) {
    return missing_edges(adj, s_bits) <= s;
}

// No w in alive\S extends S to a larger s-plex. A vertex v of S is tight
// when it sits at the minimum degree |S|-s; any extension vertex must be
// adjacent to every tight vertex and have at least |S|+1-s neighbors in S.
bool splex_maximal(const std::vector<Bits>& adj, const Bits& s_bits, const Bits& alive,
                   int s) {
    int k = static_cast<int>(s_bits.count());
    int thr = k + 1 - s;
    Bits tight(s_bits.size());
    for (auto v = s_bits.find_first(); v != Bits::npos; v = s_bits.find_next(v))
        if (static_cast<int>((adj[v] & s_bits).count()) == k - s) tight.set(v);
    Bits outside = alive & ~s_bits;
    for (auto w = outside.find_first(); w != Bits::npos; w = outside.find_next(w)) {
        if (thr > 0 && static_cast<int>((adj[w] & s_bits).count()) < thr) continue;
        if (tight.is_subset_of(adj[w])) return false;
    }
    return true;
}

bool defective_maximal(const std::vector<Bits>& adj, const Bits& s_bits, const Bits& alive,
                       int s) {
    long long miss = missing_edges(adj, s_bits);
    long long k = static_cast<long long>(s_bits.count());
    Bits outside = alive & ~s_bits;
    for (auto w = outside.find_first(); w != Bits::npos; w = outside.find_next(w)) {
        long long added = k - static_cast<long long>((adj[w] & s_bits).count());
        if (miss + added <= s) return false;
    }
    return true;
}

// Enumerates subsets of pool with sizes in [cur..max_size], invoking f at
// every node (so every admissible subset is visited exactly once). The
// working set is shared across nesting levels; pools must be disjoint.
template <typename F>
void subsets_rec(const std::vector<int>& pool, std::size_t start, int left, Bits& work,
                 const F& f) {
    f();
    if (left == 0) return;
    for (std::size_t j = start; j < pool.size(); ++j) {
        work.set(pool[j]);
        subsets_rec(pool, j + 1, left - 1, work, f);
        work.reset(pool[j]);
    }
}

struct StepPools {
    std::vector<int> common;  // N_i(v) & N_i(u)
    std::vector<int> sep;     // N_i(v) \ N_i(u)
};

struct Engine {
    const Graph& g;
    DenseKind kind;
    int s;
    const EnumOptions& opt;
    std::vector<Bits> adj;
    ClosureOrdering ord;
    Bits alive;
    std::unordered_set<Bits, BitsHash> cands;
    long long generated = 0;

    Engine(const Graph& graph, DenseKind k, int s_param, const EnumOptions& options)
        : g(graph), kind(k), s(s_param), opt(options), adj(adjacency_bitsets(graph)),
          ord(closure_ordering(graph)), alive(graph.vertex_count()) {}

    bool passes(const Bits& set) const {
        return kind == DenseKind::splex ? splex_ok(adj, set, s) : defective_ok(adj, set, s);
    }
    bool maximal(const Bits& set) const {
        return kind == DenseKind::splex ? splex_maximal(adj, set, alive, s)
                                        : defective_maximal(adj, set, alive, s);
    }

    void add(const Bits& set) {
        ++generated;
        cands.insert(set);
    }

    StepPools pools_for(int v, int u) const {
        Bits nv = adj[v] & alive;
        Bits common_bits = nv & adj[u];
        detail::check_invariant(static_cast<int>(common_bits.count()) < ord.gamma,
                                "common neighborhood of a step vertex must stay below gamma");
        if (static_cast<int>(common_bits.count()) > opt.common_neighborhood_cap)
            throw ResourceError("common-neighborhood pool exceeds the configured cap",
                                generated);
        StepPools p;
        p.common = bits_to_vector(common_bits);
        p.sep = bits_to_vector(nv & ~adj[u]);
        return p;
    }

    // Type 3: {v} + nonempty non-neighbor part A (u ranges over A), a part
    // B of N(v)\N(u), and any subset of the small common neighborhood.
    void generate_type3(int v, const std::vector<int>& non_neighbors) {
        int max_a = kind == DenseKind::splex ? s - 1 : s;
        if (max_a <= 0) return;
        Bits work(g.vertex_count());
        work.set(v);
        std::vector<int> a_members;
        // Hand-rolled A recursion so each A node can loop over u in A.
        auto rec_a = [&](auto&& self, std::size_t start) -> void {
            if (!a_members.empty()) {
                int max_b = kind == DenseKind::splex
                                ? s - 1
                                : s - static_cast<int>(a_members.size());
                for (int u : a_members) {
                    StepPools p = pools_for(v, u);
                    subsets_rec(p.sep, 0, std::max(0, max_b), work, [&] {
                        subsets_rec(p.common, 0, static_cast<int>(p.common.size()), work,
                                    [&] { add(work); });
                    });
                }
            }
            if (static_cast<int>(a_members.size()) == max_a) return;
            for (std::size_t j = start; j < non_neighbors.size(); ++j) {
                work.set(non_neighbors[j]);
                a_members.push_back(non_neighbors[j]);
                self(self, j + 1);
                a_members.pop_back();
                work.reset(non_neighbors[j]);
            }
        };
        rec_a(rec_a, 0);
    }

    // Type 4: {v} + a part D of N(v)\N(u) for one non-neighbor u, plus any
    // subset of the common neighborhood; the candidate stays inside N[v].
    void generate_type4(int v, const std::vector<int>& non_neighbors) {
        int max_d = kind == DenseKind::splex ? s - 1 : s;
        Bits work(g.vertex_count());
        work.set(v);
        for (int u : non_neighbors) {
            StepPools p = pools_for(v, u);
            subsets_rec(p.sep, 0, std::max(0, max_d), work, [&] {
                subsets_rec(p.common, 0, static_cast<int>(p.common.size()), work,
                            [&] { add(work); });
            });
        }
        // Closed neighborhood of v; also seeds singletons.
        Bits closed = (adj[v] & alive);
        closed.set(v);
        add(closed);
    }

    EnumFamily run() {
        int n = g.vertex_count();
        std::vector<Bits> fam;
        for (int i = n - 1; i >= 0; --i) {
            int v = ord.order[i];
            alive.set(v);
            cands.clear();
            for (const Bits& old : fam) {
                add(old);
                Bits plus = old;
                plus.set(v);
                add(plus);
            }
            std::vector<int> non_neighbors = bits_to_vector(alive & ~adj[v]);
            non_neighbors.erase(std::remove(non_neighbors.begin(), non_neighbors.end(), v),
                                non_neighbors.end());
            generate_type3(v, non_neighbors);
            generate_type4(v, non_neighbors);

            fam.clear();
            for (const Bits& cand : cands)
                if (cand.any() && passes(cand) && maximal(cand)) fam.push_back(cand);
            std::sort(fam.begin(), fam.end(),
                      [](const Bits& a, const Bits& b) { return a < b; });
        }

        EnumFamily out;
        out.kind = kind;
        out.s = s;
        out.graph_fingerprint = g.fingerprint();
        out.sets.reserve(fam.size());
        for (const Bits& b : fam) out.sets.push_back(bits_to_vertexset(b));
        std::sort(out.sets.begin(), out.sets.end());

        unsigned long long bound = kind == DenseKind::splex
                                       ? splex_family_bound(n, ord.gamma, s)
                                       : defective_family_bound(n, ord.gamma, s);
        detail::check_invariant(out.sets.size() <= bound,
                                "enumerated family exceeds the theorem bound");
        return out;
    }
};

// Shared witness pick: largest set, lexicographically smallest among ties.
ProblemAnswer answer_from_family(const std::vector<VertexSet>& sets, int k) {
    const VertexSet* best = nullptr;
    for (const VertexSet& s : sets)
        if (!best || s.size() > best->size()) best = &s;
    ProblemAnswer ans;
    ans.stats["family_size"] = static_cast<long long>(sets.size());
    if (best && best->size() >= k) {
        ans.decision = true;
        ans.witness = *best;
    }
    return ans;
}

} // namespace

unsigned long long splex_family_bound(int n, int gamma, int s) {
    return sat_mul(sat_shift(gamma), sat_pow(static_cast<unsigned long long>(n), 2 * s - 1));
}

unsigned long long defective_family_bound(int n, int gamma, int s) {
    return sat_mul(sat_shift(gamma), sat_pow(static_cast<unsigned long long>(n), s + 1));
}

EnumFamily enumerate_maximal_splexes(const Graph& g, int s, const EnumOptions& opt) {
    if (s < 2)
        throw DomainError("s-plex enumeration requires s >= 2; use clique enumeration for s = 1");
    Engine engine(g, DenseKind::splex, s, opt);
    return engine.run();
}

EnumFamily enumerate_maximal_defective_cliques(const Graph& g, int s, const EnumOptions& opt) {
    if (s < 1)
        throw DomainError(
            "defective-clique enumeration requires s >= 1; use clique enumeration for s = 0");
    Engine engine(g, DenseKind::defective, s, opt);
    return engine.run();
}

ProblemAnswer solve_splex(const Graph& g, int s, int k, const EnumOptions& opt) {
    if (s < 1) throw DomainError("s-plex requires s >= 1");
    if (k < 0) throw DomainError("k must be nonnegative");
    if (k == 0) return ProblemAnswer::yes(VertexSet{});
    if (s == 1) return answer_from_family(enumerate_maximal_cliques(g), k);
    return answer_from_family(enumerate_maximal_splexes(g, s, opt).sets, k);
}

ProblemAnswer solve_defective_clique(const Graph& g, int s, int k, const EnumOptions& opt) {
    if (s < 0) throw DomainError("s-defective clique requires s >= 0");
    if (k < 0) throw DomainError("k must be nonnegative");
    if (k == 0) return ProblemAnswer::yes(VertexSet{});
    if (s == 0) return answer_from_family(enumerate_maximal_cliques(g), k);
    return answer_from_family(enumerate_maximal_defective_cliques(g, s, opt).sets, k);
}

int clique_cover_bound(int s) {
    int b = 1;
    while (static_cast<long long>(b + 1) * b / 2 <= s) ++b;
    return b;
}

namespace {

// Exact coloring fallback: assigns colors 0..limit-1 to the vertices of
// the complement restricted to non-isolated ones (at most 2s of them).
bool exact_color(const std::vector<std::vector<int>>& comp_adj, std::vector<int>& color,
                 std::size_t idx, int limit) {
    if (idx == color.size()) return true;
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (int w : comp_adj[idx])
            if (static_cast<std::size_t>(w) < idx && color[w] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[idx] = c;
        if (exact_color(comp_adj, color, idx + 1, limit)) return true;
    }
    color[idx] = -1;
    return false;
}

} // namespace

std::vector<VertexSet> clique_cover_of_defective(const Graph& g, const VertexSet& s_set,
                                                 int s) {
    if (s < 1) throw DomainError("clique cover requires s >= 1");
    if (!check_defective_clique(g, s_set, s))
        throw ContractError("clique_cover_of_defective: S is not an s-defective clique");

    const auto& mem = s_set.members();
    int k = static_cast<int>(mem.size());

    // Complement degree of each member inside S.
    std::vector<int> cdeg(k, 0);
    std::vector<std::vector<int>> comp_adj(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!g.has_edge(mem[i], mem[j])) {
                comp_adj[i].push_back(j);
                comp_adj[j].push_back(i);
                ++cdeg[i];
                ++cdeg[j];
            }

    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (cdeg[a] != cdeg[b]) return cdeg[a] > cdeg[b];
        return mem[a] < mem[b];
    });

    std::vector<int> color(k, -1);
    int colors_used = 0;
    for (int i : order) {
        std::vector<char> used(static_cast<std::size_t>(colors_used) + 1, 0);
        for (int j : comp_adj[i])
            if (color[j] >= 0 && color[j] <= colors_used) used[color[j]] = 1;
        int c = 0;
        while (used[c]) ++c;
        color[i] = c;
        colors_used = std::max(colors_used, c + 1);
    }

    int bound = clique_cover_bound(s);
    if (colors_used > bound) {
        // Greedy provably meets the bound; kept as a safety net.
        std::vector<int> nontrivial;
        for (int i = 0; i < k; ++i)
            if (cdeg[i] > 0) nontrivial.push_back(i);
        std::vector<std::vector<int>> sub_adj(nontrivial.size());
        std::vector<int> local(k, -1);
        for (std::size_t i = 0; i < nontrivial.size(); ++i) local[nontrivial[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < nontrivial.size(); ++i)
            for (int j : comp_adj[nontrivial[i]])
                if (local[j] >= 0) sub_adj[i].push_back(local[j]);
        std::vector<int> sub_color(nontrivial.size(), -1);
        detail::check_invariant(exact_color(sub_adj, sub_color, 0, bound),
                                "complement of an s-defective clique must be sqrt-colorable");
        std::fill(color.begin(), color.end(), 0);
        for (std::size_t i = 0; i < nontrivial.size(); ++i) color[nontrivial[i]] = sub_color[i];
        colors_used = bound;
    }

    std::vector<std::vector<int>> classes(colors_used);
    for (int i = 0; i < k; ++i) classes[color[i]].push_back(mem[i]);
    std::vector<VertexSet> out;
    for (auto& cls : classes)
        if (!cls.empty()) out.push_back(VertexSet::of(std::move(cls)));
    std::sort(out.begin(), out.end());

    detail::check_invariant(static_cast<int>(out.size()) <= bound,
                            "clique cover exceeds the chi bound");
    for (const VertexSet& cls : out)
        detail::check_invariant(is_clique(g, cls), "cover class is not a clique");
    return out;
}

bool defective_clique_size_bound(const Graph& g, const VertexSet& s_set, int s) {
    if (!check_defective_clique(g, s_set, s))
        throw ContractError("defective_clique_size_bound: S is not an s-defective clique");
    if (is_clique(g, s_set))
        throw ContractError("defective_clique_size_bound: S has no non-adjacent pair");
    return s_set.size() <= c_closure(g) + s;
}

ProblemAnswer solve_defective_clique_via_cover(const Graph& g, int s, int k,
                                               const EnumOptions& opt) {
    if (s < 1) throw DomainError("cover-based solver requires s >= 1");
    if (k < 1) throw DomainError("cover-based solver requires k >= 1");

    std::vector<VertexSet> cliques = enumerate_maximal_cliques(g);
    ProblemAnswer ans;
    ans.stats["maximal_cliques"] = static_cast<long long>(cliques.size());

    const VertexSet* best = nullptr;
    for (const VertexSet& c : cliques)
        if (!best || c.size() > best->size()) best = &c;
    if (best && best->size() >= k) {
        ans.decision = true;
        ans.witness = *best;
        ans.stats["clique_phase_hit"] = 1;
        return ans;
    }

    // With no clique of size k, any qualifying set has a non-edge and is
    // limited to c + s vertices.
    int c = c_closure(g);
    if (k > c + s) {
        ans.stats["size_bound_prune"] = 1;
        return ans;
    }

    int bound = clique_cover_bound(s);
    long long examined = 0;
    int count = static_cast<int>(cliques.size());
    std::vector<int> pick;

    auto combine = [&](auto&& self, int start, int left) -> bool {
        if (!pick.empty()) {
            if (++examined > opt.collection_budget)
                throw ResourceError("clique-collection budget exhausted", examined);
            std::vector<int> members;
            for (int idx : pick)
                members.insert(members.end(), cliques[idx].members().begin(),
                               cliques[idx].members().end());
            auto sub = induced_subgraph(g, VertexSet::of(std::move(members)));
            ProblemAnswer inner = solve_defective_clique(sub.graph, s, k, opt);
            if (inner.decision) {
                std::vector<int> lifted;
                for (int w : *inner.witness) lifted.push_back(sub.to_original[w]);
                ans.decision = true;
                ans.witness = VertexSet::of(std::move(lifted));
                return true;
            }
        }
        if (left == 0) return false;
        for (int j = start; j < count; ++j) {
            pick.push_back(j);
            if (self(self, j + 1, left - 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    combine(combine, 0, bound);
    ans.stats["collections_examined"] = examined;
    return ans;
}

} // namespace weakclose
