// Cycle sequences and partitioned decompositions, the central certificate
// objects.
#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "hqd/hypercube.hpp"

namespace hqd {

// A closed sequence of distinct vertices; the first vertex is not repeated at
// the end.
struct CycleSeq {
    int host_n = 0;
    std::vector<Vertex> vertices;

    std::size_t length() const { return vertices.size(); }

    friend bool operator==(const CycleSeq&, const CycleSeq&) = default;
};

// A set of cycles plus a partition-set id per cycle. Valid certificates have
// pairwise edge-disjoint cycles covering E(Q_n) exactly, and within each
// partition set the cycle vertex sets partition V(Q_n).
struct PartitionedDecomposition {
    int host_n = 0;
    std::size_t cycle_length = 0;
    std::vector<CycleSeq> cycles;
    std::vector<int> set_of;  // parallel to cycles

    int num_sets() const {
        int m = 0;
        for (int s : set_of) m = std::max(m, s + 1);
        return m;
    }

    friend bool operator==(const PartitionedDecomposition&,
                           const PartitionedDecomposition&) = default;
};

// Lexicographically least rotation with the smaller neighbor second; the
// serialized form of every cycle.
inline CycleSeq canonical_rotation(const CycleSeq& c) {
    const auto& v = c.vertices;
    std::size_t k = v.size();
    if (k < 3) return c;
    std::size_t at = static_cast<std::size_t>(
        std::min_element(v.begin(), v.end()) - v.begin());
    Vertex next = v[(at + 1) % k];
    Vertex prev = v[(at + k - 1) % k];
    CycleSeq out;
    out.host_n = c.host_n;
    out.vertices.reserve(k);
    if (next <= prev) {
        for (std::size_t i = 0; i < k; ++i) out.vertices.push_back(v[(at + i) % k]);
    } else {
        for (std::size_t i = 0; i < k; ++i) out.vertices.push_back(v[(at + k - i) % k]);
    }
    return out;
}

// Equality up to rotation and reversal; listings are compared through this,
// the stored order stays verbatim.
inline bool same_cycle(const CycleSeq& a, const CycleSeq& b) {
    if (a.host_n != b.host_n || a.vertices.size() != b.vertices.size()) return false;
    return canonical_rotation(a).vertices == canonical_rotation(b).vertices;
}

inline void canonicalize_cycles(PartitionedDecomposition& d) {
    for (auto& c : d.cycles) c = canonical_rotation(c);
}

inline std::vector<std::uint64_t> cycle_edge_keys(const CycleSeq& c) {
    std::vector<std::uint64_t> keys;
    keys.reserve(c.vertices.size());
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
        keys.push_back(edge_key(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]));
    return keys;
}

}  // namespace hqd
