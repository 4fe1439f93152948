#include "weakclose/closure.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>
#include <vector>

#include "weakclose/util.hpp"

namespace weakclose {

namespace {

// Reusable buffers for the 2-neighborhood path counting.
struct ClosureScratch {
    std::vector<int> count;        // common-neighbor count per candidate
    std::vector<int> touched;      // candidates with nonzero count
    std::vector<char> is_neighbor; // marks N(v)

    explicit ClosureScratch(int n) : count(n, 0), is_neighbor(n, 0) { touched.reserve(n); }
};

// cl of v inside the subgraph induced by {w : alive[w]}; v must be alive.
// Counts 2-paths v-u-w, then maximizes over alive non-neighbors w.
int closure_in_subgraph(const Graph& g, int v, const std::vector<char>& alive,
                        ClosureScratch& scratch) {
    for (int u : g.neighbors(v))
        if (alive[u]) scratch.is_neighbor[u] = 1;
    for (int u : g.neighbors(v)) {
        if (!alive[u]) continue;
        for (int w : g.neighbors(u)) {
            if (!alive[w] || w == v) continue;
            if (scratch.count[w] == 0) scratch.touched.push_back(w);
            ++scratch.count[w];
        }
    }
    int best = 0;
    for (int w : scratch.touched) {
        if (!scratch.is_neighbor[w]) best = std::max(best, scratch.count[w]);
        scratch.count[w] = 0;
    }
    scratch.touched.clear();
    for (int u : g.neighbors(v))
        if (alive[u]) scratch.is_neighbor[u] = 0;
    return best;
}

std::vector<int> all_closures(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> cl(n, 0);
    std::vector<char> alive(n, 1);
    if (n >= 512 && thread_budget() > 1) {
        int workers = std::min(thread_budget(), n);
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                ClosureScratch scratch(n);
                for (int v = next.fetch_add(1); v < n; v = next.fetch_add(1))
                    cl[v] = closure_in_subgraph(g, v, alive, scratch);
            });
        }
        for (auto& t : pool) t.join();
    } else {
        ClosureScratch scratch(n);
        for (int v = 0; v < n; ++v) cl[v] = closure_in_subgraph(g, v, alive, scratch);
    }
    return cl;
}

} // namespace

int closure_of_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw DomainError("vertex id out of range");
    ClosureScratch scratch(g.vertex_count());
    std::vector<char> alive(g.vertex_count(), 1);
    return closure_in_subgraph(g, v, alive, scratch);
}

int c_closure(const Graph& g) {
    auto cl = all_closures(g);
    int best = 0;
    for (int v : cl) best = std::max(best, v);
    return best + 1;
}

ClosureOrdering closure_ordering(const Graph& g) {
    int n = g.vertex_count();
    ClosureOrdering out;
    out.order.reserve(n);
    out.step_closure.reserve(n);

    std::vector<int> cl = all_closures(g);
    std::vector<char> alive(n, 1);
    std::vector<char> affected(n, 0);
    ClosureScratch scratch(n);

    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (alive[u] && (v == -1 || cl[u] < cl[v])) v = u;
        out.order.push_back(v);
        out.step_closure.push_back(cl[v]);
        alive[v] = 0;

        // cl depends only on the 2-neighborhood, so removing v can only
        // change vertices within distance 2 of it.
        std::vector<int> to_update;
        for (int u : g.neighbors(v)) {
            if (!alive[u]) continue;
            if (!affected[u]) {
                affected[u] = 1;
                to_update.push_back(u);
            }
            for (int w : g.neighbors(u)) {
                if (!alive[w] || affected[w]) continue;
                affected[w] = 1;
                to_update.push_back(w);
            }
        }
        for (int u : to_update) {
            cl[u] = closure_in_subgraph(g, u, alive, scratch);
            affected[u] = 0;
        }
    }

    int worst = 0;
    for (int v : out.step_closure) worst = std::max(worst, v);
    out.gamma = worst + 1;
    return out;
}

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
    int n = g.vertex_count();
    DegeneracyOrdering out;
    out.order.reserve(n);
    out.step_degree.reserve(n);

    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<char> alive(n, 1);

    // Bucket queue over degrees; lowest id wins inside a bucket because
    // vertices are appended in id order and re-pushed entries are screened
    // against the current degree.
    int maxd = g.max_degree();
    std::vector<std::vector<int>> bucket(maxd + 1);
    for (int v = 0; v < n; ++v) bucket[deg[v]].push_back(v);
    std::vector<std::vector<int>::size_type> cursor(maxd + 1, 0);

    int d = 0;
    int low = 0;
    for (int step = 0; step < n; ++step) {
        int v = -1;
        low = std::min(low, maxd);
        while (true) {
            while (low <= maxd && cursor[low] >= bucket[low].size()) ++low;
            int cand = bucket[low][cursor[low]++];
            if (alive[cand] && deg[cand] == low) {
                v = cand;
                break;
            }
        }
        out.order.push_back(v);
        out.step_degree.push_back(deg[v]);
        d = std::max(d, deg[v]);
        alive[v] = 0;
        for (int u : g.neighbors(v)) {
            if (!alive[u]) continue;
            --deg[u];
            bucket[deg[u]].push_back(u);
            low = std::min(low, deg[u]);
        }
    }
    out.d = d;
    return out;
}

GraphStats graph_stats(const Graph& g) {
    GraphStats s;
    s.n = g.vertex_count();
    s.m = g.edge_count();
    s.max_degree = g.max_degree();
    s.c = c_closure(g);
    s.d = degeneracy_ordering(g).d;
    s.gamma = closure_ordering(g).gamma;
    return s;
}

std::string format_ordering(const Graph& g, const ClosureOrdering& ord) {
    std::ostringstream out;
    for (std::size_t i = 0; i < ord.order.size(); ++i)
        out << i << ' ' << g.label(ord.order[i]) << ' ' << ord.step_closure[i] << '\n';
    return out.str();
}

} // namespace weakclose
