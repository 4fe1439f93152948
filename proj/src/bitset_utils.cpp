#include "weakclose/bitset_utils.hpp"

namespace weakclose {

std::vector<Bits> adjacency_bitsets(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Bits> rows(n, Bits(n));
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) rows[v].set(w);
    return rows;
}

std::size_t bits_hash(const Bits& b) {
    std::size_t h = 0xcbf29ce484222325ull;
    std::vector<std::uint64_t> blocks(b.num_blocks());
    boost::to_block_range(b, blocks.begin());
    for (std::uint64_t w : blocks) {
        h ^= w;
        h *= 0x100000001b3ull;
    }
    return h;
}

VertexSet bits_to_vertexset(const Bits& b) {
    return VertexSet::from_sorted(bits_to_vector(b));
}

std::vector<int> bits_to_vector(const Bits& b) {
    std::vector<int> out;
    out.reserve(b.count());
    for (auto v = b.find_first(); v != Bits::npos; v = b.find_next(v))
        out.push_back(static_cast<int>(v));
    return out;
}

Bits vertexset_to_bits(const VertexSet& s, int n) {
    Bits b(n);
    for (int v : s) {
        if (v < 0 || v >= n) throw DomainError("set member outside graph");
        b.set(v);
    }
    return b;
}

} // namespace weakclose
