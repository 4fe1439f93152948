#ifndef WEAKCLOSE_GRAPH_HPP
#define WEAKCLOSE_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weakclose/errors.hpp"

namespace weakclose {

// Canonical vertex subset: strictly ascending ids, no duplicates.
// Equality and ordering are plain lexicographic comparison of the member
// lists, so a VertexSet doubles as a hashable dictionary key.
class VertexSet {
public:
    VertexSet() = default;

    // Takes an arbitrary id list; sorts and deduplicates.
    static VertexSet of(std::vector<int> ids);
    // Requires ids strictly ascending (checked).
    static VertexSet from_sorted(std::vector<int> ids);

    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    bool contains(int v) const;

    VertexSet with(int v) const;     // insert, keeping canonical form
    VertexSet without(int v) const;  // erase if present

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const VertexSet& other) const { return members_ == other.members_; }
    bool operator!=(const VertexSet& other) const { return members_ != other.members_; }
    bool operator<(const VertexSet& other) const { return members_ < other.members_; }

private:
    std::vector<int> members_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const;
};

// Immutable simple undirected graph. Vertex ids are dense 0..n-1; labels
// keep the original tokens from the input. Adjacency lists are sorted.
class Graph {
public:
    Graph() = default;

    // Builds a simple graph: self-loops and duplicate edges are rejected
    // here (parse_edge_list filters them before calling).
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    std::span<const int> neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }
    bool has_edge(int u, int v) const;
    const std::string& label(int v) const {
        check_vertex(v);
        return labels_[v];
    }
    const std::vector<std::string>& labels() const { return labels_; }

    int max_degree() const;
    // Edges as ascending (u,v) pairs with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;
    // Stable structural hash over n and the edge list.
    std::uint64_t fingerprint() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_ && labels_ == other.labels_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw DomainError("vertex id out of range");
    }

    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

// Result of reading an edge-list stream. Warnings are counted, not fatal.
struct ParseResult {
    Graph graph;
    long long self_loops_dropped = 0;
    long long duplicate_edges = 0;
};

// Edge-list dialect: one "u v" pair per line, '#'/'%' comment lines,
// blank lines ignored, labels are arbitrary tokens mapped to dense ids in
// first-appearance order.
ParseResult parse_edge_list(std::istream& in);
ParseResult parse_edge_list(const std::string& text);
ParseResult parse_edge_list_file(const std::string& path);

// One "label_u label_v" line per edge, sorted by id pair.
void serialize_edge_list(const Graph& g, std::ostream& out);
std::string serialize_edge_list(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;  // new id -> old id
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x);

// Connected components of the complement of G[U], in original ids.
// Each component ascending; list sorted by smallest member.
std::vector<VertexSet> complement_components(const Graph& g, const VertexSet& u);

// Every v in S has at least |S|-s neighbors inside S. Empty sets and
// singletons are s-plexes for every s >= 1.
bool check_splex(const Graph& g, const VertexSet& s_set, int s);

// G[S] misses at most s edges.
bool check_defective_clique(const Graph& g, const VertexSet& s_set, int s);

using SetPredicate = std::function<bool(const Graph&, const VertexSet&)>;

// True iff no vertex outside S can be added while keeping the property.
// Requires property(g, s_set) to hold.
bool check_maximal(const Graph& g, const VertexSet& s_set, const SetPredicate& property);

bool is_clique(const Graph& g, const VertexSet& s_set);
bool is_independent_set(const Graph& g, const VertexSet& s_set);

} // namespace weakclose

#endif
