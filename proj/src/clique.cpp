#include "weakclose/clique.hpp"

#include <algorithm>

#include "weakclose/bitset_utils.hpp"
#include "weakclose/closure.hpp"

namespace weakclose {

namespace {

struct BkState {
    const std::vector<Bits>& adj;
    const std::function<bool(const VertexSet&)>& visit;
    std::vector<int> r;
    bool stopped = false;
};

// Pivot from the candidate set: most neighbors inside P, lowest id on ties
// (find_first scans ascending, so the first maximum wins).
int choose_pivot(const BkState& st, const Bits& p) {
    int pivot = -1;
    std::size_t best = 0;
    for (auto v = p.find_first(); v != Bits::npos; v = p.find_next(v)) {
        std::size_t k = (st.adj[v] & p).count();
        if (pivot == -1 || k > best) {
            pivot = static_cast<int>(v);
            best = k;
        }
    }
    return pivot;
}

void expand(BkState& st, Bits p, Bits x) {
    if (st.stopped) return;
    if (p.none() && x.none()) {
        if (!st.visit(VertexSet::of(st.r))) st.stopped = true;
        return;
    }
    if (p.none()) return;
    int pivot = choose_pivot(st, p);
    Bits ext = p & ~st.adj[pivot];
    for (auto v = ext.find_first(); v != Bits::npos; v = ext.find_next(v)) {
        st.r.push_back(static_cast<int>(v));
        expand(st, p & st.adj[v], x & st.adj[v]);
        st.r.pop_back();
        if (st.stopped) return;
        p.reset(v);
        x.set(v);
    }
}

} // namespace

void for_each_maximal_clique(const Graph& g,
                             const std::function<bool(const VertexSet&)>& visit) {
    int n = g.vertex_count();
    if (n == 0) return;
    auto adj = adjacency_bitsets(g);
    auto ord = closure_ordering(g);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[ord.order[i]] = i;

    BkState st{adj, visit, {}, false};
    for (int i = 0; i < n && !st.stopped; ++i) {
        int v = ord.order[i];
        Bits p(n), x(n);
        for (int w : g.neighbors(v)) {
            if (pos[w] > i)
                p.set(w);
            else
                x.set(w);
        }
        st.r.assign(1, v);
        expand(st, std::move(p), std::move(x));
    }
}

std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    for_each_maximal_clique(g, [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

long long count_maximal_cliques(const Graph& g) {
    long long count = 0;
    for_each_maximal_clique(g, [&](const VertexSet&) {
        ++count;
        return true;
    });
    return count;
}

} // namespace weakclose
