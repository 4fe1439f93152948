#include "graphgen.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace weakclose::testsupport {

namespace {

constexpr int kMaxN = 7;

int pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

std::vector<std::vector<int>> permutations(int n) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(idx);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

// For each permutation, where each edge bit moves.
std::vector<std::vector<std::uint8_t>> pair_maps(int n) {
    auto perms = permutations(n);
    int pairs = n * (n - 1) / 2;
    std::vector<std::vector<std::uint8_t>> maps(perms.size(),
                                                std::vector<std::uint8_t>(pairs));
    for (std::size_t p = 0; p < perms.size(); ++p)
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                maps[p][pair_index(i, j)] =
                    static_cast<std::uint8_t>(pair_index(perms[p][i], perms[p][j]));
    return maps;
}

std::uint32_t canonical_mask(std::uint32_t mask,
                             const std::vector<std::vector<std::uint8_t>>& maps) {
    std::uint32_t best = ~std::uint32_t{0};
    for (const auto& map : maps) {
        std::uint32_t img = 0;
        for (std::uint32_t rest = mask; rest;) {
            int bit = std::countr_zero(rest);
            rest &= rest - 1;
            img |= std::uint32_t{1} << map[bit];
        }
        best = std::min(best, img);
        if (best == 0) break;
    }
    return best;
}

Graph mask_to_graph(int n, std::uint32_t mask) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask & (std::uint32_t{1} << pair_index(i, j))) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

// masks[n] holds the canonical representatives on exactly n vertices.
const std::vector<std::vector<std::uint32_t>>& representative_masks() {
    static std::vector<std::vector<std::uint32_t>> cache;
    static std::once_flag flag;
    std::call_once(flag, [] {
        cache.assign(kMaxN + 1, {});
        cache[1] = {0};
        for (int n = 2; n <= kMaxN; ++n) {
            auto maps = pair_maps(n);
            int new_vertex = n - 1;
            std::unordered_set<std::uint32_t> seen;
            for (std::uint32_t parent : cache[n - 1]) {
                for (std::uint32_t nb = 0; nb < (std::uint32_t{1} << (n - 1)); ++nb) {
                    std::uint32_t mask = parent;
                    for (std::uint32_t rest = nb; rest;) {
                        int v = std::countr_zero(rest);
                        rest &= rest - 1;
                        mask |= std::uint32_t{1} << pair_index(v, new_vertex);
                    }
                    seen.insert(canonical_mask(mask, maps));
                }
            }
            cache[n].assign(seen.begin(), seen.end());
            std::sort(cache[n].begin(), cache[n].end());
        }
    });
    return cache;
}

} // namespace

const std::vector<Graph>& all_graphs_up_to(int max_n) {
    if (max_n < 1 || max_n > kMaxN)
        throw std::invalid_argument("generator supports 1..7 vertices");
    static std::array<std::vector<Graph>, kMaxN + 1> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (cache[max_n].empty()) {
        const auto& masks = representative_masks();
        std::vector<Graph> out;
        for (int n = 1; n <= max_n; ++n)
            for (std::uint32_t m : masks[n]) out.push_back(mask_to_graph(n, m));
        cache[max_n] = std::move(out);
    }
    return cache[max_n];
}

std::vector<Graph> all_graphs_exactly(int n) {
    if (n < 1 || n > kMaxN) throw std::invalid_argument("generator supports 1..7 vertices");
    const auto& masks = representative_masks();
    std::vector<Graph> out;
    for (std::uint32_t m : masks[n]) out.push_back(mask_to_graph(n, m));
    return out;
}

long long expected_graph_count(int n) {
    static const long long counts[] = {0, 1, 2, 4, 11, 34, 156, 1044};
    if (n < 1 || n > kMaxN) throw std::invalid_argument("counts known for 1..7");
    return counts[n];
}

Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (coin(rng)) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    if (n >= 3) edges.emplace_back(0, n - 1);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(leaves + 1, edges);
}

Graph edgeless_graph(int n) { return Graph::from_edges(n, {}); }

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph::from_edges(a + b, edges);
}

Graph two_cliques(int r) {
    std::vector<std::pair<int, int>> edges;
    for (int side = 0; side < 2; ++side)
        for (int j = 1; j < r; ++j)
            for (int i = 0; i < j; ++i) edges.emplace_back(side * r + i, side * r + j);
    return Graph::from_edges(2 * r, edges);
}

Graph universal_plus_triangles(int t) {
    std::vector<std::pair<int, int>> edges;
    int n = 1 + 3 * t;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    for (int tri = 0; tri < t; ++tri) {
        int base = 1 + 3 * tri;
        edges.emplace_back(base, base + 1);
        edges.emplace_back(base, base + 2);
        edges.emplace_back(base + 1, base + 2);
    }
    return Graph::from_edges(n, edges);
}

} // namespace weakclose::testsupport
