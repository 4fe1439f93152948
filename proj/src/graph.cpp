#include "weakclose/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace weakclose {

VertexSet VertexSet::of(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    VertexSet s;
    s.members_ = std::move(ids);
    return s;
}

VertexSet VertexSet::from_sorted(std::vector<int> ids) {
    for (std::size_t i = 1; i < ids.size(); ++i)
        if (ids[i - 1] >= ids[i]) throw DomainError("VertexSet ids must be strictly ascending");
    VertexSet s;
    s.members_ = std::move(ids);
    return s;
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::with(int v) const {
    VertexSet s = *this;
    auto it = std::lower_bound(s.members_.begin(), s.members_.end(), v);
    if (it == s.members_.end() || *it != v) s.members_.insert(it, v);
    return s;
}

VertexSet VertexSet::without(int v) const {
    VertexSet s = *this;
    auto it = std::lower_bound(s.members_.begin(), s.members_.end(), v);
    if (it != s.members_.end() && *it == v) s.members_.erase(it);
    return s;
}

std::size_t VertexSetHash::operator()(const VertexSet& s) const {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ s.members().size();
    for (int v : s.members()) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::vector<std::string> labels) {
    if (n < 0) throw DomainError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    if (labels.empty()) {
        labels.reserve(n);
        for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
    }
    if (static_cast<int>(labels.size()) != n) throw DomainError("label count != vertex count");
    {
        std::unordered_set<std::string> seen;
        for (const auto& l : labels)
            if (!seen.insert(l).second) throw DomainError("duplicate vertex label: " + l);
    }
    g.labels_ = std::move(labels);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw DomainError("edge endpoint out of range");
        if (u == v) throw DomainError("self-loop in edge set");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    long long m = 0;
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw DomainError("duplicate edge in edge set");
        m += static_cast<long long>(nb.size());
    }
    g.m_ = m / 2;
    return g;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), target);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max<int>(d, static_cast<int>(nb.size()));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::uint64_t Graph::fingerprint() const {
    std::uint64_t h = 0x100000001b3ull * static_cast<std::uint64_t>(n_ + 1);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) {
                h ^= (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
                h *= 0x100000001b3ull;
            }
    return h;
}

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char ch : line) {
        if (ch == ' ' || ch == '\t' || ch == '\r') continue;
        return ch == '#' || ch == '%';
    }
    return true;  // blank
}

} // namespace

ParseResult parse_edge_list(std::istream& in) {
    ParseResult res;
    std::unordered_map<std::string, int> id_of;
    std::vector<std::string> labels;
    std::unordered_set<std::uint64_t> edge_seen;
    std::vector<std::pair<int, int>> edges;

    auto intern = [&](const std::string& tok) {
        auto [it, fresh] = id_of.try_emplace(tok, static_cast<int>(labels.size()));
        if (fresh) labels.push_back(tok);
        return it->second;
    };

    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b) || (ls >> extra)) {
            throw ParseError("line " + std::to_string(lineno) +
                                 ": expected exactly two vertex tokens",
                             lineno);
        }
        int u = intern(a);
        int v = intern(b);
        if (u == v) {
            ++res.self_loops_dropped;
            continue;
        }
        int lo = std::min(u, v), hi = std::max(u, v);
        std::uint64_t key = (static_cast<std::uint64_t>(lo) << 32) | static_cast<std::uint64_t>(hi);
        if (!edge_seen.insert(key).second) {
            ++res.duplicate_edges;
            continue;
        }
        edges.emplace_back(lo, hi);
    }
    res.graph = Graph::from_edges(static_cast<int>(labels.size()), edges, std::move(labels));
    return res;
}

ParseResult parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

ParseResult parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path, 0);
    return parse_edge_list(in);
}

void serialize_edge_list(const Graph& g, std::ostream& out) {
    for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    serialize_edge_list(g, out);
    return out.str();
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x) {
    std::vector<int> to_original = x.members();
    std::unordered_map<int, int> to_new;
    to_new.reserve(to_original.size());
    for (int i = 0; i < static_cast<int>(to_original.size()); ++i) {
        int old = to_original[i];
        if (old < 0 || old >= g.vertex_count()) throw DomainError("set member outside graph");
        to_new.emplace(old, i);
    }
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    labels.reserve(to_original.size());
    for (int i = 0; i < static_cast<int>(to_original.size()); ++i) {
        int old = to_original[i];
        labels.push_back(g.label(old));
        for (int w : g.neighbors(old)) {
            auto it = to_new.find(w);
            if (it != to_new.end() && i < it->second) edges.emplace_back(i, it->second);
        }
    }
    InducedSubgraph out;
    out.graph = Graph::from_edges(static_cast<int>(to_original.size()), edges, std::move(labels));
    out.to_original = std::move(to_original);
    return out;
}

std::vector<VertexSet> complement_components(const Graph& g, const VertexSet& u) {
    const auto& verts = u.members();
    for (int v : verts)
        if (v < 0 || v >= g.vertex_count()) throw DomainError("set member outside graph");

    // BFS in the complement over a shrinking candidate pool; each vertex
    // is inspected against the frontier only until it joins a component.
    std::vector<int> pool = verts;
    std::vector<VertexSet> comps;
    while (!pool.empty()) {
        std::vector<int> comp{pool.front()};
        pool.erase(pool.begin());
        std::vector<int> frontier{comp.front()};
        while (!frontier.empty()) {
            int v = frontier.back();
            frontier.pop_back();
            std::vector<int> still;
            still.reserve(pool.size());
            for (int w : pool) {
                if (!g.has_edge(v, w)) {
                    comp.push_back(w);
                    frontier.push_back(w);
                } else {
                    still.push_back(w);
                }
            }
            pool.swap(still);
        }
        comps.push_back(VertexSet::of(std::move(comp)));
    }
    std::sort(comps.begin(), comps.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.members() < b.members(); });
    return comps;
}

bool check_splex(const Graph& g, const VertexSet& s_set, int s) {
    if (s < 1) throw DomainError("s-plex requires s >= 1");
    const auto& mem = s_set.members();
    int need = static_cast<int>(mem.size()) - s;
    if (need <= 0) return true;
    for (int v : mem) {
        int inside = 0;
        for (int w : g.neighbors(v))
            if (s_set.contains(w)) ++inside;
        if (inside < need) return false;
    }
    return true;
}

bool check_defective_clique(const Graph& g, const VertexSet& s_set, int s) {
    if (s < 0) throw DomainError("s-defective clique requires s >= 0");
    const auto& mem = s_set.members();
    long long k = static_cast<long long>(mem.size());
    long long inside = 0;
    for (int v : mem)
        for (int w : g.neighbors(v))
            if (w > v && s_set.contains(w)) ++inside;
    return k * (k - 1) / 2 - inside <= s;
}

bool check_maximal(const Graph& g, const VertexSet& s_set, const SetPredicate& property) {
    if (!property(g, s_set)) throw ContractError("check_maximal: property does not hold on S");
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (s_set.contains(v)) continue;
        if (property(g, s_set.with(v))) return false;
    }
    return true;
}

bool is_clique(const Graph& g, const VertexSet& s_set) {
    const auto& mem = s_set.members();
    for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = i + 1; j < mem.size(); ++j)
            if (!g.has_edge(mem[i], mem[j])) return false;
    return true;
}

bool is_independent_set(const Graph& g, const VertexSet& s_set) {
    const auto& mem = s_set.members();
    for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = i + 1; j < mem.size(); ++j)
            if (g.has_edge(mem[i], mem[j])) return false;
    return true;
}

} // namespace weakclose
