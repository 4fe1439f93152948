#ifndef WEAKCLOSE_BITSET_UTILS_HPP
#define WEAKCLOSE_BITSET_UTILS_HPP

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <vector>

#include "weakclose/graph.hpp"

namespace weakclose {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// Per-vertex neighbor masks; rows[v][w] == has_edge(v, w).
std::vector<Bits> adjacency_bitsets(const Graph& g);

std::size_t bits_hash(const Bits& b);

struct BitsHash {
    std::size_t operator()(const Bits& b) const { return bits_hash(b); }
};

VertexSet bits_to_vertexset(const Bits& b);
Bits vertexset_to_bits(const VertexSet& s, int n);

// Members of b in ascending order.
std::vector<int> bits_to_vector(const Bits& b);

} // namespace weakclose

#endif
