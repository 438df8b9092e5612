// Vertex labeling, adjacency and edge enumeration for the hypercube Q_n,
// plus the label-concatenation embedding used for Cartesian products.
#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hqd {

using Vertex = std::uint32_t;

// Labels live in 32 bits; certificates beyond n = 24 are out of scope.
inline constexpr int kMaxDim = 24;

inline std::uint64_t vertex_count(int n) { return std::uint64_t{1} << n; }

inline void check_dim(int n) {
    if (n < 1 || n > kMaxDim)
        throw std::invalid_argument("hypercube dimension out of range: " + std::to_string(n));
}

inline void check_label(Vertex v, int n) {
    if (v >= vertex_count(n))
        throw std::invalid_argument("vertex label " + std::to_string(v) +
                                    " out of range for n=" + std::to_string(n));
}

// Coordinate j of a binary string (leftmost character = coordinate 1) is
// stored at bit j-1, so "0100" parses to 2 and 28 prints as "001110" at n=6.
inline Vertex label_from_string(const std::string& s) {
    if (s.empty() || s.size() > static_cast<std::size_t>(kMaxDim))
        throw std::invalid_argument("bad label string: \"" + s + "\"");
    Vertex v = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] == '1')
            v |= Vertex{1} << j;
        else if (s[j] != '0')
            throw std::invalid_argument("bad label string: \"" + s + "\"");
    }
    return v;
}

inline std::string label_to_string(Vertex v, int n) {
    check_dim(n);
    check_label(v, n);
    std::string s(static_cast<std::size_t>(n), '0');
    for (int j = 0; j < n; ++j)
        if (v >> j & 1) s[static_cast<std::size_t>(j)] = '1';
    return s;
}

inline bool are_adjacent(Vertex u, Vertex v, int n) {
    check_dim(n);
    check_label(u, n);
    check_label(v, n);
    return std::popcount(u ^ v) == 1;
}

// Canonical unordered edge: smaller endpoint first, so equality is set
// equality.
struct Edge {
    Vertex a = 0;  // a < b
    Vertex b = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex u, Vertex v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// 64-bit packing, used for edge-set arithmetic.
inline std::uint64_t edge_key(Vertex u, Vertex v) {
    Edge e = make_edge(u, v);
    return (std::uint64_t{e.b} << 32) | e.a;
}

// All n * 2^(n-1) edges, each exactly once, in increasing (vertex, direction)
// order.
inline std::vector<Edge> hypercube_edges(int n) {
    check_dim(n);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) << (n - 1));
    for (Vertex v = 0; v < vertex_count(n); ++v)
        for (int d = 0; d < n; ++d)
            if (!(v >> d & 1)) edges.push_back(Edge{v, v | (Vertex{1} << d)});
    return edges;
}

// The C4 vertex order 00, 01, 11, 10 (strings read leftmost = low bit), so
// consecutive indices mod 4 are adjacent labels.
inline Vertex gray2(int j) {
    if (j < 0 || j > 3) throw std::invalid_argument("gray2 index out of range");
    constexpr Vertex table[4] = {0, 2, 3, 1};
    return table[j];
}

// Reflected Gray order on b-bit labels in the same string convention;
// gray_cycle(2) is exactly {gray2(0), .., gray2(3)}.
inline std::vector<Vertex> gray_cycle(int bits) {
    check_dim(bits);
    std::vector<Vertex> order(static_cast<std::size_t>(1) << bits);
    for (std::uint32_t t = 0; t < order.size(); ++t) {
        std::uint32_t g = t ^ (t >> 1);
        Vertex v = 0;
        for (int j = 0; j < bits; ++j)
            if (g >> (bits - 1 - j) & 1) v |= Vertex{1} << j;
        order[t] = v;
    }
    return order;
}

// Bijection from product coordinates onto (a+b)-bit labels: the left factor
// occupies the low-order coordinates, so left-factor edges are "horizontal"
// (change a low bit) and right-factor edges are "vertical".
struct ProductEmbedding {
    int left_bits = 0;
    int right_bits = 0;

    int total_bits() const { return left_bits + right_bits; }

    Vertex map(Vertex u, Vertex v) const {
        check_label(u, left_bits);
        check_label(v, right_bits);
        return u | (v << left_bits);
    }
};

inline Vertex embed_product(const ProductEmbedding& e, Vertex u, Vertex v) {
    check_dim(e.left_bits);
    check_dim(e.right_bits);
    check_dim(e.total_bits());
    return e.map(u, v);
}

}  // namespace hqd
