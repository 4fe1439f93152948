#include "weakclose/biclique.hpp"

#include <algorithm>
#include <unordered_set>

#include "weakclose/bitset_utils.hpp"
#include "weakclose/closure.hpp"
#include "weakclose/kernel.hpp"

namespace weakclose {

namespace {

constexpr int kCommonPoolCap = 25;

// Connected components of the complement of G[S], over adjacency bitsets.
int complement_component_count(const std::vector<Bits>& adj, const Bits& s_bits) {
    Bits todo = s_bits;
    int comps = 0;
    while (todo.any()) {
        ++comps;
        auto seed = todo.find_first();
        Bits frontier(s_bits.size());
        frontier.set(seed);
        todo.reset(seed);
        while (frontier.any()) {
            auto v = frontier.find_first();
            frontier.reset(v);
            Bits reach = todo & ~adj[v];
            todo &= ~reach;
            frontier |= reach;
        }
    }
    return comps;
}

bool nib_ok(const std::vector<Bits>& adj, const Bits& s_bits) {
    if (s_bits.count() < 2) return false;
    return complement_component_count(adj, s_bits) >= 2;
}

bool nib_maximal(const std::vector<Bits>& adj, const Bits& s_bits, const Bits& alive) {
    Bits outside = alive & ~s_bits;
    for (auto w = outside.find_first(); w != Bits::npos; w = outside.find_next(w)) {
        Bits bigger = s_bits;
        bigger.set(w);
        if (nib_ok(adj, bigger)) return false;
    }
    return true;
}

} // namespace

bool is_non_induced_biclique(const Graph& g, const VertexSet& u) {
    if (u.size() < 2) return false;
    return complement_components(g, u).size() >= 2;
}

std::vector<VertexSet> enumerate_maximal_non_induced_bicliques(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return {};
    auto adj = adjacency_bitsets(g);
    auto ord = closure_ordering(g);
    Bits alive(n);
    std::vector<Bits> fam;
    std::unordered_set<Bits, BitsHash> cands;

    for (int i = n - 1; i >= 0; --i) {
        int v = ord.order[i];
        alive.set(v);
        cands.clear();
        for (const Bits& old : fam) {
            cands.insert(old);
            Bits plus = old;
            plus.set(v);
            cands.insert(plus);
        }

        // Type 3: a non-neighbor u pins the small pool N_i(v) & N_i(u);
        // each nonempty C from that pool determines the rest of the set as
        // the common neighborhood of C outside N_i(v).
        Bits nv = adj[v] & alive;
        Bits non_neighbors = alive & ~adj[v];
        non_neighbors.reset(v);
        for (auto u = non_neighbors.find_first(); u != Bits::npos;
             u = non_neighbors.find_next(u)) {
            Bits common_bits = nv & adj[u];
            detail::check_invariant(static_cast<int>(common_bits.count()) < ord.gamma,
                                    "common neighborhood of a step vertex must stay below gamma");
            if (static_cast<int>(common_bits.count()) > kCommonPoolCap)
                throw ResourceError("common-neighborhood pool exceeds the configured cap",
                                    static_cast<long long>(fam.size()));
            std::vector<int> pool = bits_to_vector(common_bits);
            Bits cset(n);
            auto rec = [&](auto&& self, std::size_t start) -> void {
                if (cset.any()) {
                    Bits inter = alive;
                    for (auto w = cset.find_first(); w != Bits::npos; w = cset.find_next(w))
                        inter &= adj[w];
                    inter &= ~nv;
                    Bits cand = inter | cset;
                    cand.set(v);
                    cands.insert(cand);
                }
                for (std::size_t j = start; j < pool.size(); ++j) {
                    cset.set(pool[j]);
                    self(self, j + 1);
                    cset.reset(pool[j]);
                }
            };
            rec(rec, 0);
        }

        // Type 4: the closed neighborhood of v.
        Bits closed = nv;
        closed.set(v);
        cands.insert(closed);

        fam.clear();
        for (const Bits& cand : cands)
            if (nib_ok(adj, cand) && nib_maximal(adj, cand, alive)) fam.push_back(cand);
        std::sort(fam.begin(), fam.end(), [](const Bits& a, const Bits& b) { return a < b; });
    }

    std::vector<VertexSet> out;
    out.reserve(fam.size());
    for (const Bits& b : fam) out.push_back(bits_to_vertexset(b));
    std::sort(out.begin(), out.end());
    return out;
}

SubsetSumInstance::SubsetSumInstance(std::vector<long long> vals, long long lo_in,
                                     long long hi_in)
    : values(std::move(vals)), lo(lo_in), hi(hi_in) {
    if (values.empty()) throw DomainError("subset-sum values must be nonempty");
    for (long long v : values)
        if (v <= 0) throw DomainError("subset-sum values must be positive");
    if (lo > hi) throw DomainError("subset-sum range must satisfy lo <= hi");
}

SubsetSumResult solve_subset_sum_range(const SubsetSumInstance& inst) {
    long long total = 0;
    for (long long v : inst.values) total += v;

    std::vector<char> reach(static_cast<std::size_t>(total) + 1, 0);
    std::vector<int> choice(static_cast<std::size_t>(total) + 1, -1);
    reach[0] = 1;
    for (int i = 0; i < static_cast<int>(inst.values.size()); ++i) {
        long long a = inst.values[i];
        for (long long sum = total - a; sum >= 0; --sum) {
            if (reach[sum] && !reach[sum + a]) {
                reach[sum + a] = 1;
                choice[sum + a] = i;
            }
        }
    }

    SubsetSumResult res;
    long long lo = std::max<long long>(inst.lo, 0);
    long long hi = std::min(inst.hi, total);
    for (long long sum = lo; sum <= hi; ++sum) {
        if (!reach[sum]) continue;
        res.decision = true;
        res.sum = sum;
        long long cur = sum;
        while (cur > 0) {
            int item = choice[cur];
            res.chosen_indices.push_back(item);
            cur -= inst.values[item];
        }
        std::sort(res.chosen_indices.begin(), res.chosen_indices.end());
        break;
    }
    return res;
}

ProblemAnswer solve_non_induced_biclique(const Graph& g, int k1, int k2) {
    if (k1 < 1 || k2 < 1) throw DomainError("biclique sides must be at least 1");
    ProblemAnswer ans;
    auto family = enumerate_maximal_non_induced_bicliques(g);
    ans.stats["family_size"] = static_cast<long long>(family.size());
    long long tested = 0;
    for (const VertexSet& u : family) {
        long long hi = static_cast<long long>(u.size()) - k2;
        if (hi < k1) continue;
        ++tested;
        auto comps = complement_components(g, u);
        std::vector<long long> sizes;
        sizes.reserve(comps.size());
        for (const auto& c : comps) sizes.push_back(c.size());
        SubsetSumResult res = solve_subset_sum_range({std::move(sizes), k1, hi});
        if (!res.decision) continue;

        std::vector<int> side_s;
        std::vector<char> taken(comps.size(), 0);
        for (int idx : res.chosen_indices) {
            taken[idx] = 1;
            side_s.insert(side_s.end(), comps[idx].members().begin(),
                          comps[idx].members().end());
        }
        std::vector<int> side_t;
        for (std::size_t idx = 0; idx < comps.size(); ++idx)
            if (!taken[idx])
                side_t.insert(side_t.end(), comps[idx].members().begin(),
                              comps[idx].members().end());
        ans.decision = true;
        ans.biclique = BicliqueWitness{VertexSet::of(std::move(side_s)),
                                       VertexSet::of(std::move(side_t)), false};
        ans.stats["sets_tested"] = tested;
        return ans;
    }
    ans.stats["sets_tested"] = tested;
    return ans;
}

ProblemAnswer solve_max_edge_non_induced_biclique(const Graph& g, long long k) {
    if (k < 1) throw DomainError("edge target must be at least 1");
    long long root = 1;
    while (root * root < k) ++root;

    ProblemAnswer best;
    long long best_product = -1;
    for (long long k1 = 1; k1 <= root; ++k1) {
        long long k2 = (k + k1 - 1) / k1;
        ProblemAnswer sub = solve_non_induced_biclique(g, static_cast<int>(k1),
                                                       static_cast<int>(k2));
        best.stats["instances"] += 1;
        if (!sub.decision) continue;
        long long product = static_cast<long long>(sub.biclique->side_s.size()) *
                            static_cast<long long>(sub.biclique->side_t.size());
        if (product > best_product) {
            best_product = product;
            best.decision = true;
            best.biclique = sub.biclique;
        }
    }
    return best;
}

ProblemAnswer solve_induced_kk_biclique(const Graph& g, int k) {
    if (k < 0) throw DomainError("k must be nonnegative");
    if (k == 0) return ProblemAnswer::yes(BicliqueWitness{{}, {}, true});
    if (k == 1) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) > 0) {
                int w = g.neighbors(v).front();
                return ProblemAnswer::yes(
                    BicliqueWitness{VertexSet::of({v}), VertexSet::of({w}), true});
            }
        return ProblemAnswer::no();
    }

    int n = g.vertex_count();
    auto ord = closure_ordering(g);
    ProblemAnswer ans;
    ans.stats["gamma"] = ord.gamma;
    if (k >= ord.gamma) {
        // K_{gamma,gamma} is not weakly gamma-closed, so larger targets
        // cannot appear.
        ans.stats["gamma_cutoff"] = 1;
        return ans;
    }

    auto adj = adjacency_bitsets(g);
    // Walk ordering positions, shrinking the suffix as we go.
    Bits alive(n);
    alive.set();

    long long anchors = 0;
    for (int i = 0; i < n; ++i) {
        int v = ord.order[i];
        // The anchor v is the ordering-first vertex of the sought S side.
        for (int vp = 0; vp < n; ++vp) {
            if (vp == v || !alive.test(vp) || adj[v].test(vp)) continue;
            Bits common_bits = adj[v] & adj[vp] & alive;
            detail::check_invariant(static_cast<int>(common_bits.count()) < ord.gamma,
                                    "anchor common neighborhood must stay below gamma");
            std::vector<int> pool = bits_to_vector(common_bits);
            if (static_cast<int>(pool.size()) < k) continue;
            ++anchors;

            // Independent T of exactly k vertices from the pool.
            std::vector<int> t_pick;
            auto rec_t = [&](auto&& self, std::size_t start) -> bool {
                if (static_cast<int>(t_pick.size()) == k) {
                    Bits inter = alive;
                    for (int u : t_pick) inter &= adj[u];
                    inter &= ~adj[v];
                    inter &= ~adj[vp];
                    inter.reset(v);
                    inter.reset(vp);
                    auto sub = induced_subgraph(g, bits_to_vertexset(inter));
                    ProblemAnswer is_ans = solve_independent_set(sub.graph, k - 2);
                    if (!is_ans.decision) return false;
                    std::vector<int> side_s{v, vp};
                    int want = k - 2;
                    for (int w : *is_ans.witness) {
                        if (want-- <= 0) break;
                        side_s.push_back(sub.to_original[w]);
                    }
                    ans.decision = true;
                    ans.biclique = BicliqueWitness{VertexSet::of(side_s),
                                                   VertexSet::of(t_pick), true};
                    return true;
                }
                for (std::size_t j = start; j < pool.size(); ++j) {
                    bool independent = true;
                    for (int u : t_pick)
                        if (adj[u].test(pool[j])) {
                            independent = false;
                            break;
                        }
                    if (!independent) continue;
                    t_pick.push_back(pool[j]);
                    if (self(self, j + 1)) return true;
                    t_pick.pop_back();
                }
                return false;
            };
            if (rec_t(rec_t, 0)) {
                ans.stats["anchor_pairs"] = anchors;
                return ans;
            }
        }
        alive.reset(v);
    }
    ans.stats["anchor_pairs"] = anchors;
    return ans;
}

ProblemAnswer solve_bicolored_independent_set(const Graph& g, const VertexSet& v1,
                                              const VertexSet& v2, int k1, int k2) {
    if (k1 < 0 || k2 < 0) throw DomainError("side targets must be nonnegative");
    int n = g.vertex_count();
    Bits b1 = vertexset_to_bits(v1, n);
    Bits b2 = vertexset_to_bits(v2, n);
    if ((b1 & b2).any() || (b1 | b2).count() != static_cast<std::size_t>(n))
        throw DomainError("(V1, V2) must partition the vertex set");

    auto adj = adjacency_bitsets(g);
    std::vector<int> chosen;
    long long nodes = 0;

    auto rec = [&](auto&& self, Bits alive, int need1, int need2) -> bool {
        ++nodes;
        if (need1 <= 0 && need2 <= 0) return true;
        if (static_cast<int>((alive & b1).count()) < need1) return false;
        if (static_cast<int>((alive & b2).count()) < need2) return false;

        int v = -1;
        std::size_t best_deg = 0;
        for (auto u = alive.find_first(); u != Bits::npos; u = alive.find_next(u)) {
            std::size_t d = (adj[u] & alive).count();
            if (v == -1 || d > best_deg) {
                v = static_cast<int>(u);
                best_deg = d;
            }
        }
        if (best_deg == 0) {
            // Edgeless remainder: take the lowest ids per side.
            for (auto u = (alive & b1).find_first(); u != Bits::npos && need1 > 0;
                 u = (alive & b1).find_next(u)) {
                chosen.push_back(static_cast<int>(u));
                --need1;
            }
            for (auto u = (alive & b2).find_first(); u != Bits::npos && need2 > 0;
                 u = (alive & b2).find_next(u)) {
                chosen.push_back(static_cast<int>(u));
                --need2;
            }
            return true;
        }

        bool v_in_1 = b1.test(v);
        int need_here = v_in_1 ? need1 : need2;
        if (need_here > 0) {
            chosen.push_back(v);
            Bits next = alive & ~adj[v];
            next.reset(v);
            if (self(self, std::move(next), need1 - (v_in_1 ? 1 : 0),
                     need2 - (v_in_1 ? 0 : 1)))
                return true;
            chosen.pop_back();
        }
        Bits without = alive;
        without.reset(v);
        return self(self, std::move(without), need1, need2);
    };

    Bits all(n);
    all.set();
    ProblemAnswer ans;
    if (rec(rec, all, k1, k2)) {
        ans.decision = true;
        ans.witness = VertexSet::of(chosen);
    }
    ans.stats["nodes"] = nodes;
    return ans;
}

std::vector<int> find_diamond(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto nb = g.neighbors(v);
        for (int z : nb) {
            for (std::size_t i = 0; i < nb.size(); ++i) {
                int x = nb[i];
                if (x == z || !g.has_edge(z, x)) continue;
                for (std::size_t j = i + 1; j < nb.size(); ++j) {
                    int y = nb[j];
                    if (y == z || !g.has_edge(z, y)) continue;
                    if (!g.has_edge(x, y)) {
                        std::vector<int> d{v, z, x, y};
                        std::sort(d.begin(), d.end());
                        return d;
                    }
                }
            }
        }
    }
    return {};
}

ProblemAnswer solve_induced_biclique_cclosed(const Graph& g, int k1, int k2) {
    if (k1 > k2) std::swap(k1, k2);
    if (k1 < 2)
        throw DomainError("c-closed biclique routine requires k1 >= 2; "
                          "use the diamond-free or 2-closed routines for k1 = 1");

    int n = g.vertex_count();
    auto adj = adjacency_bitsets(g);
    int c = c_closure(g);
    ProblemAnswer ans;
    long long c4s = 0;

    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (adj[a].test(b)) continue;
            Bits common = adj[a] & adj[b];
            std::vector<int> cv = bits_to_vector(common);
            for (std::size_t i = 0; i < cv.size(); ++i) {
                for (std::size_t j = i + 1; j < cv.size(); ++j) {
                    int x = cv[i], y = cv[j];
                    if (adj[x].test(y)) continue;
                    if (x < a) continue;  // canonical orientation: a is the minimum
                    ++c4s;
                    // Roles: either (a,b) is the S diagonal or the T one.
                    for (int role = 0; role < 2; ++role) {
                        int us = role == 0 ? a : x, vs = role == 0 ? b : y;
                        int ut = role == 0 ? x : a, vt = role == 0 ? y : b;

                        Bits pool_t = adj[us] & adj[vs] & ~adj[ut] & ~adj[vt];
                        pool_t.reset(ut);
                        pool_t.reset(vt);
                        Bits pool_s = adj[ut] & adj[vt] & ~adj[us] & ~adj[vs];
                        pool_s.reset(us);
                        pool_s.reset(vs);
                        detail::check_invariant((pool_t & pool_s).none(),
                                                "extension pools must be disjoint");
                        detail::check_invariant(
                            static_cast<int>(pool_t.count() + pool_s.count()) <=
                                2 * c - 2,
                            "reduced instance must have at most 2c-2 vertices");
                        if (static_cast<int>(pool_t.count()) < k2 - 2) continue;
                        if (static_cast<int>(pool_s.count()) < k1 - 2) continue;

                        // Reduced graph: intra-part edges kept, cross edges
                        // complemented; an independent set there extends the
                        // fixed cycle to a full biclique.
                        std::vector<int> verts = bits_to_vector(pool_t);
                        std::vector<int> sverts = bits_to_vector(pool_s);
                        int t_count = static_cast<int>(verts.size());
                        verts.insert(verts.end(), sverts.begin(), sverts.end());
                        std::vector<std::pair<int, int>> edges;
                        std::vector<std::string> labels;
                        for (int w : verts) labels.push_back(g.label(w));
                        int total = static_cast<int>(verts.size());
                        for (int p = 0; p < total; ++p)
                            for (int q = p + 1; q < total; ++q) {
                                bool same_part = (p < t_count) == (q < t_count);
                                bool g_edge = adj[verts[p]].test(verts[q]);
                                if (same_part ? g_edge : !g_edge) edges.emplace_back(p, q);
                            }
                        Graph reduced = Graph::from_edges(total, edges, labels);
                        std::vector<int> part1(t_count), part2(total - t_count);
                        for (int p = 0; p < t_count; ++p) part1[p] = p;
                        for (int p = t_count; p < total; ++p) part2[p - t_count] = p;
                        ProblemAnswer sub = solve_bicolored_independent_set(
                            reduced, VertexSet::from_sorted(part1),
                            VertexSet::from_sorted(part2), k2 - 2, k1 - 2);
                        ans.stats["bis_nodes"] += sub.stats["nodes"];
                        if (!sub.decision) continue;

                        std::vector<int> side_t{ut, vt}, side_s{us, vs};
                        for (int w : *sub.witness) {
                            if (w < t_count)
                                side_t.push_back(verts[w]);
                            else
                                side_s.push_back(verts[w]);
                        }
                        ans.decision = true;
                        ans.biclique = BicliqueWitness{VertexSet::of(side_s),
                                                       VertexSet::of(side_t), true};
                        ans.stats["induced_c4s"] = c4s;
                        return ans;
                    }
                }
            }
        }
    }
    ans.stats["induced_c4s"] = c4s;
    return ans;
}

ProblemAnswer solve_induced_1k_diamond_free(const Graph& g, int k2) {
    auto diamond = find_diamond(g);
    if (!diamond.empty()) {
        std::string names;
        for (int v : diamond) names += (names.empty() ? "" : ", ") + g.label(v);
        throw ContractError("input is not diamond-free; violating vertices: " + names);
    }
    if (k2 <= 0) {
        if (g.vertex_count() == 0) return ProblemAnswer::no();
        return ProblemAnswer::yes(BicliqueWitness{VertexSet::of({0}), {}, true});
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto nb_set = VertexSet::of(std::vector<int>(g.neighbors(v).begin(),
                                                     g.neighbors(v).end()));
        // In a diamond-free graph every neighborhood is a disjoint union of
        // cliques, so components double as the independent-choice pools.
        auto sub = induced_subgraph(g, nb_set);
        int m = sub.graph.vertex_count();
        std::vector<int> comp(m, -1);
        int comps = 0;
        for (int u = 0; u < m; ++u) {
            if (comp[u] != -1) continue;
            std::vector<int> stack{u};
            comp[u] = comps;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : sub.graph.neighbors(x))
                    if (comp[y] == -1) {
                        comp[y] = comps;
                        stack.push_back(y);
                    }
            }
            ++comps;
        }
        if (comps >= k2) {
            std::vector<int> side_t;
            for (int target = 0; target < k2; ++target)
                for (int u = 0; u < m; ++u)
                    if (comp[u] == target) {
                        side_t.push_back(sub.to_original[u]);
                        break;
                    }
            return ProblemAnswer::yes(
                BicliqueWitness{VertexSet::of({v}), VertexSet::of(side_t), true});
        }
    }
    return ProblemAnswer::no();
}

ProblemAnswer solve_induced_biclique_2closed(const Graph& g, int k1, int k2) {
    int c = c_closure(g);
    if (c > 2)
        throw DomainError("2-closed routine invoked on a graph with c-closure " +
                          std::to_string(c));
    if (k1 > k2) std::swap(k1, k2);
    if (k1 < 1) throw DomainError("side targets must be at least 1");
    if (k1 == 1) {
        detail::check_invariant(find_diamond(g).empty(), "2-closed graphs are diamond-free");
        return solve_induced_1k_diamond_free(g, k2);
    }
    return solve_induced_biclique_cclosed(g, k1, k2);
}

} // namespace weakclose
