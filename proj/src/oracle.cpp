#include "weakclose/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace weakclose {

namespace {

using Mask = std::uint32_t;

int popcount(Mask m) { return std::popcount(m); }

struct MaskGraph {
    int n = 0;
    std::vector<Mask> adj;
};

MaskGraph mask_graph(const Graph& g, int cap, const char* op) {
    if (g.vertex_count() > cap)
        throw ScaleError(std::string(op) + ": oracle scale cap is " + std::to_string(cap) +
                         " vertices");
    MaskGraph mg;
    mg.n = g.vertex_count();
    mg.adj.assign(mg.n, 0);
    for (int v = 0; v < mg.n; ++v)
        for (int w : g.neighbors(v)) mg.adj[v] |= Mask{1} << w;
    return mg;
}

std::vector<int> mask_to_vec(Mask m) {
    std::vector<int> out;
    for (Mask rest = m; rest;) {
        int v = std::countr_zero(rest);
        out.push_back(v);
        rest &= rest - 1;
    }
    return out;
}

bool independent(const MaskGraph& g, Mask s) {
    for (Mask rest = s; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (g.adj[v] & s) return false;
    }
    return true;
}

bool clique(const MaskGraph& g, Mask s) {
    int k = popcount(s);
    for (Mask rest = s; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (popcount(g.adj[v] & s) != k - 1) return false;
    }
    return true;
}

bool splex(const MaskGraph& g, Mask s, int slack) {
    int k = popcount(s);
    for (Mask rest = s; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (popcount(g.adj[v] & s) < k - slack) return false;
    }
    return true;
}

long long edges_in(const MaskGraph& g, Mask s) {
    long long twice = 0;
    for (Mask rest = s; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        twice += popcount(g.adj[v] & s);
    }
    return twice / 2;
}

bool defective(const MaskGraph& g, Mask s, int slack) {
    long long k = popcount(s);
    return k * (k - 1) / 2 - edges_in(g, s) <= slack;
}

bool dominating(const MaskGraph& g, Mask s) {
    for (int v = 0; v < g.n; ++v)
        if (!(s & (g.adj[v] | (Mask{1} << v)))) return false;
    return true;
}

// Complement of G[S] connected? BFS over non-edges.
bool complement_disconnected(const MaskGraph& g, Mask s) {
    if (!s) return false;
    Mask seed = s & (~s + 1);
    Mask visited = seed;
    Mask frontier = seed;
    while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        Mask reach = s & ~g.adj[v] & ~visited & ~(Mask{1} << v);
        visited |= reach;
        frontier |= reach;
    }
    return visited != s;
}

bool nib(const MaskGraph& g, Mask s) {
    return popcount(s) >= 2 && complement_disconnected(g, s);
}

bool forest(const MaskGraph& g, Mask s) {
    // Union-find over edges inside S.
    std::vector<int> parent(g.n);
    for (int v = 0; v < g.n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (Mask rest = s; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        for (Mask nb = g.adj[v] & s; nb;) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (w <= v) continue;
            int a = find(v), b = find(w);
            if (a == b) return false;
            parent[a] = b;
        }
    }
    return true;
}

bool bipartite(const MaskGraph& g, Mask s) {
    std::vector<int> color(g.n, -1);
    for (Mask rest = s; rest;) {
        int root = std::countr_zero(rest);
        rest &= rest - 1;
        if (color[root] != -1) continue;
        color[root] = 0;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (Mask nb = g.adj[v] & s; nb;) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool degree_capped(const MaskGraph& g, Mask s, int cap) {
    for (Mask rest = s; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (popcount(g.adj[v] & s) > cap) return false;
    }
    return true;
}

VertexSet to_set(Mask m) { return VertexSet::from_sorted(mask_to_vec(m)); }

// Tracks the lexicographically smallest single-set witness.
struct BestSet {
    bool found = false;
    std::vector<int> vec;
    void offer(Mask m) {
        auto v = mask_to_vec(m);
        if (!found || v < vec) {
            found = true;
            vec = std::move(v);
        }
    }
};

struct BestPair {
    bool found = false;
    std::vector<int> s_vec, t_vec;
    void offer(Mask s, Mask t) {
        auto sv = mask_to_vec(s);
        auto tv = mask_to_vec(t);
        if (!found || sv < s_vec || (sv == s_vec && tv < t_vec)) {
            found = true;
            s_vec = std::move(sv);
            t_vec = std::move(tv);
        }
    }
};

} // namespace

int oracle_weak_closure(const Graph& g) {
    auto mg = mask_graph(g, 12, "oracle_weak_closure");
    int best = 0;
    Mask full = mg.n == 32 ? ~Mask{0} : (Mask{1} << mg.n) - 1;
    for (Mask w = 1; w <= full; ++w) {
        int min_cl = mg.n + 1;
        for (Mask rest = w; rest && min_cl > 0;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int cl = 0;
            Mask nonneighbors = w & ~mg.adj[v] & ~(Mask{1} << v);
            for (Mask nn = nonneighbors; nn;) {
                int u = std::countr_zero(nn);
                nn &= nn - 1;
                cl = std::max(cl, popcount(mg.adj[v] & mg.adj[u] & w));
            }
            min_cl = std::min(min_cl, cl);
        }
        best = std::max(best, min_cl);
    }
    return best + 1;
}

std::vector<VertexSet> oracle_enumerate_maximal(const Graph& g, OracleFamily family,
                                                int s) {
    auto mg = mask_graph(g, 16, "oracle_enumerate_maximal");
    auto passes = [&](Mask m) {
        switch (family) {
        case OracleFamily::clique: return clique(mg, m);
        case OracleFamily::splex: return splex(mg, m, s);
        case OracleFamily::defective: return defective(mg, m, s);
        case OracleFamily::non_induced_biclique: return nib(mg, m);
        }
        return false;
    };
    std::vector<VertexSet> out;
    Mask full = mg.n >= 32 ? ~Mask{0} : (Mask{1} << mg.n) - 1;
    for (Mask m = 1; m <= full && mg.n > 0; ++m) {
        if (!passes(m)) continue;
        bool maximal = true;
        for (int w = 0; w < mg.n && maximal; ++w)
            if (!(m & (Mask{1} << w)) && passes(m | (Mask{1} << w))) maximal = false;
        if (maximal) out.push_back(to_set(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<VertexSet, VertexSet>> oracle_enumerate_maximal_induced_bicliques(
    const Graph& g) {
    auto mg = mask_graph(g, 12, "oracle_enumerate_maximal_induced_bicliques");
    std::vector<std::pair<VertexSet, VertexSet>> out;
    if (mg.n == 0) return out;
    Mask full = (Mask{1} << mg.n) - 1;

    auto cross_complete = [&](Mask a, Mask b) {
        for (Mask rest = a; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if ((b & mg.adj[v]) != b) return false;
        }
        return true;
    };
    auto is_biclique = [&](Mask a, Mask b) {
        return a && b && independent(mg, a) && independent(mg, b) && cross_complete(a, b);
    };

    for (Mask s = 1; s <= full; ++s) {
        if (!independent(mg, s)) continue;
        Mask rest_pool = full & ~s;
        for (Mask t = rest_pool; t; t = (t - 1) & rest_pool) {
            if (std::countr_zero(s) > std::countr_zero(t)) continue;  // canonical side order
            if (!is_biclique(s, t)) continue;
            bool maximal = true;
            for (int w = 0; w < mg.n && maximal; ++w) {
                Mask bit = Mask{1} << w;
                if ((s | t) & bit) continue;
                if (is_biclique(s | bit, t) || is_biclique(s, t | bit)) maximal = false;
            }
            if (maximal) out.emplace_back(to_set(s), to_set(t));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool oracle_is_non_induced_biclique_bipartition(const Graph& g, const VertexSet& u) {
    if (u.size() > 20) throw ScaleError("bipartition brute force capped at 20 vertices");
    const auto& mem = u.members();
    int k = static_cast<int>(mem.size());
    if (k < 2) return false;
    for (Mask a = 1; a < (Mask{1} << k) - 1; ++a) {
        bool good = true;
        for (int i = 0; i < k && good; ++i) {
            if (!(a & (Mask{1} << i))) continue;
            for (int j = 0; j < k && good; ++j) {
                if (a & (Mask{1} << j)) continue;
                if (!g.has_edge(mem[i], mem[j])) good = false;
            }
        }
        if (good) return true;
    }
    return false;
}

ProblemAnswer oracle_decide(const std::string& problem, const Graph& g,
                            const OracleParams& params) {
    auto mg = mask_graph(g, 16, "oracle_decide");
    Mask full = mg.n >= 32 ? ~Mask{0} : (Mask{1} << mg.n) - 1;
    ProblemAnswer ans;

    auto scan_sets = [&](auto&& qualifies) {
        BestSet best;
        for (Mask m = 0;; ++m) {
            if (qualifies(m)) best.offer(m);
            if (m == full) break;
        }
        if (best.found) {
            ans.decision = true;
            ans.witness = VertexSet::from_sorted(best.vec);
        }
    };

    if (problem == "is") {
        scan_sets([&](Mask m) {
            return popcount(m) >= params.k && independent(mg, m);
        });
    } else if (problem == "monotone") {
        const std::string& cls = params.monotone_class;
        auto member = [&](Mask m) {
            if (cls == "edgeless") return independent(mg, m);
            if (cls == "acyclic") return forest(mg, m);
            if (cls == "bipartite") return bipartite(mg, m);
            if (cls == "max-degree") {
                if (!params.class_param) throw ConfigError("max-degree needs a parameter");
                return degree_capped(mg, m, static_cast<int>(*params.class_param));
            }
            if (cls == "edge-count") {
                if (!params.class_param) throw ConfigError("edge-count needs a parameter");
                return edges_in(mg, m) <= *params.class_param;
            }
            throw ConfigError("unknown monotone class: " + cls);
        };
        scan_sets([&](Mask m) { return popcount(m) >= params.k && member(m); });
    } else if (problem == "sparsest") {
        scan_sets([&](Mask m) {
            return popcount(m) == params.k && edges_in(mg, m) <= params.t;
        });
    } else if (problem == "splex") {
        if (params.s < 1) throw DomainError("s-plex requires s >= 1");
        scan_sets([&](Mask m) {
            return popcount(m) >= params.k && splex(mg, m, params.s);
        });
    } else if (problem == "defective") {
        if (params.s < 0) throw DomainError("s-defective requires s >= 0");
        scan_sets([&](Mask m) {
            return popcount(m) >= params.k && defective(mg, m, params.s);
        });
    } else if (problem == "ni-biclique" || problem == "ni-maxedge") {
        bool maxedge = problem == "ni-maxedge";
        if (!maxedge && (params.k1 < 1 || params.k2 < 1))
            throw DomainError("biclique sides must be at least 1");
        if (maxedge && params.k < 1) throw DomainError("edge target must be at least 1");
        BestPair best;
        for (Mask s = 1; s <= full && mg.n > 0; ++s) {
            Mask common = full & ~s;
            for (Mask rest = s; rest && common;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                common &= mg.adj[v];
            }
            int have_s = popcount(s);
            int have_t = popcount(common);
            if (maxedge) {
                if (static_cast<long long>(have_s) * have_t < params.k) continue;
                int want_t = static_cast<int>((params.k + have_s - 1) / have_s);
                Mask t = 0;
                for (Mask pool = common; pool && popcount(t) < want_t;) {
                    t |= pool & (~pool + 1);
                    pool &= pool - 1;
                }
                best.offer(s, t);
            } else {
                if (have_s < params.k1 || have_t < params.k2) continue;
                Mask t = 0;
                for (Mask pool = common; pool && popcount(t) < params.k2;) {
                    t |= pool & (~pool + 1);
                    pool &= pool - 1;
                }
                best.offer(s, t);
            }
        }
        if (best.found) {
            ans.decision = true;
            ans.biclique = BicliqueWitness{VertexSet::from_sorted(best.s_vec),
                                           VertexSet::from_sorted(best.t_vec), false};
        }
    } else if (problem == "ind-kk" || problem == "ind-k1k2") {
        int k1 = problem == "ind-kk" ? params.k : params.k1;
        int k2 = problem == "ind-kk" ? params.k : params.k2;
        if (k1 < 0 || k2 < 0) throw DomainError("side sizes must be nonnegative");
        if (k1 == 0 && k2 == 0) {
            ans.decision = true;
            ans.biclique = BicliqueWitness{{}, {}, true};
            return ans;
        }
        BestPair best;
        auto consider = [&](int want_s, int want_t) {
            for (Mask s = 1; s <= full && mg.n > 0; ++s) {
                if (popcount(s) != want_s || !independent(mg, s)) continue;
                Mask common = full & ~s;
                for (Mask rest = s; rest && common;) {
                    int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    common &= mg.adj[v];
                }
                if (want_t == 0) {
                    best.offer(s, 0);
                    continue;
                }
                if (popcount(common) < want_t) continue;
                for (Mask t = common; t; t = (t - 1) & common) {
                    if (popcount(t) != want_t || !independent(mg, t)) continue;
                    best.offer(s, t);
                }
            }
        };
        consider(k1, k2);
        if (best.found) {
            ans.decision = true;
            ans.biclique = BicliqueWitness{VertexSet::from_sorted(best.s_vec),
                                           VertexSet::from_sorted(best.t_vec), true};
        }
    } else if (problem == "ids") {
        scan_sets([&](Mask m) {
            return popcount(m) <= params.k && independent(mg, m) && dominating(mg, m);
        });
    } else if (problem == "dc") {
        scan_sets([&](Mask m) {
            return popcount(m) <= params.k && clique(mg, m) && dominating(mg, m);
        });
    } else {
        throw ConfigError("unknown oracle problem: " + problem);
    }
    return ans;
}

} // namespace weakclose
