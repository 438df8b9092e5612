// Construction-independent brute-force oracle for small instances: exhaustive
// exact-cover search over 2^i-cycles of Q_n, followed by an exhaustive
// grouping into partition sets.
#pragma once

#include <optional>

#include "hqd/errors.hpp"
#include "hqd/verify.hpp"

namespace hqd {

namespace oracle_detail {

// All cycles of the requested length, each generated once: the start vertex
// is the cycle minimum and the second vertex is smaller than the last.
inline std::vector<std::vector<Vertex>> enumerate_cycles(int n, std::size_t len) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> path;
    std::vector<char> in_path(vertex_count(n), 0);

    auto dfs = [&](auto&& self) -> void {
        Vertex cur = path.back();
        if (path.size() == len) {
            if (std::popcount(cur ^ path[0]) == 1 && path[1] < path.back()) out.push_back(path);
            return;
        }
        for (int d = 0; d < n; ++d) {
            Vertex nx = cur ^ (Vertex{1} << d);
            if (nx <= path[0] || in_path[nx]) continue;
            path.push_back(nx);
            in_path[nx] = 1;
            self(self);
            in_path[nx] = 0;
            path.pop_back();
        }
    };
    for (Vertex s = 0; s < vertex_count(n); ++s) {
        path = {s};
        std::fill(in_path.begin(), in_path.end(), 0);
        in_path[s] = 1;
        dfs(dfs);
    }
    return out;
}

}  // namespace oracle_detail

// Returns a verified certificate for (n, i), or nothing if the exhaustive
// search proves none exists. Instances beyond 64 edges are refused.
inline std::optional<PartitionedDecomposition> brute_force_decompose(int n, int i) {
    if (n < 2 || i < 2 || i > n) throw std::invalid_argument("brute_force_decompose: bad (n, i)");
    if (static_cast<std::uint64_t>(n) << (n - 1) > 64)
        throw unsupported_instance("brute_force_decompose: instance above the 64-edge cap");

    const std::size_t len = std::size_t{1} << i;
    const std::size_t num_edges = static_cast<std::size_t>(n) << (n - 1);
    const std::size_t num_cycles = num_edges / len;
    const int num_sets = n / 2;
    const std::size_t per_set = num_cycles / static_cast<std::size_t>(num_sets);

    auto cycles = oracle_detail::enumerate_cycles(n, len);
    std::vector<Edge> edges = hypercube_edges(n);
    std::vector<int> edge_index(static_cast<std::size_t>(1) << (2 * n), -1);
    auto eidx = [&](Vertex a, Vertex b) -> int {
        Edge e = make_edge(a, b);
        return static_cast<int>((static_cast<std::size_t>(e.a) << n) | e.b);
    };
    for (std::size_t k = 0; k < edges.size(); ++k)
        edge_index[static_cast<std::size_t>(eidx(edges[k].a, edges[k].b))] = static_cast<int>(k);

    std::vector<std::uint64_t> edge_mask(cycles.size(), 0), vert_mask(cycles.size(), 0);
    std::vector<std::vector<std::size_t>> by_edge(num_edges);
    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
        for (std::size_t j = 0; j < cycles[ci].size(); ++j) {
            Vertex a = cycles[ci][j], b = cycles[ci][(j + 1) % cycles[ci].size()];
            int k = edge_index[static_cast<std::size_t>(eidx(a, b))];
            edge_mask[ci] |= std::uint64_t{1} << k;
            vert_mask[ci] |= std::uint64_t{1} << a;
            by_edge[static_cast<std::size_t>(k)].push_back(ci);
        }
    }

    // grouping: assign chosen cycles to partition sets so each set's vertex
    // masks are disjoint (hence exactly cover, by counting)
    std::vector<std::size_t> chosen;
    std::vector<int> set_assign;
    std::vector<std::uint64_t> set_verts(static_cast<std::size_t>(num_sets), 0);
    std::vector<std::size_t> set_size(static_cast<std::size_t>(num_sets), 0);

    auto group = [&](auto&& self, std::size_t at) -> bool {
        if (at == chosen.size()) return true;
        std::uint64_t vm = vert_mask[chosen[at]];
        for (int s = 0; s < num_sets; ++s) {
            if (set_size[static_cast<std::size_t>(s)] == per_set) continue;
            if (set_verts[static_cast<std::size_t>(s)] & vm) continue;
            set_verts[static_cast<std::size_t>(s)] |= vm;
            ++set_size[static_cast<std::size_t>(s)];
            set_assign[at] = s;
            if (self(self, at + 1)) return true;
            set_verts[static_cast<std::size_t>(s)] &= ~vm;
            --set_size[static_cast<std::size_t>(s)];
            // first cycle of each empty set is forced: avoid symmetric retries
            if (set_size[static_cast<std::size_t>(s)] == 0) break;
        }
        return false;
    };

    std::uint64_t covered = 0;
    std::optional<PartitionedDecomposition> found;
    auto cover = [&](auto&& self) -> bool {
        if (chosen.size() == num_cycles) {
            set_assign.assign(chosen.size(), -1);
            std::fill(set_verts.begin(), set_verts.end(), 0);
            std::fill(set_size.begin(), set_size.end(), 0);
            if (!group(group, 0)) return false;
            PartitionedDecomposition d;
            d.host_n = n;
            d.cycle_length = len;
            for (std::size_t j = 0; j < chosen.size(); ++j) {
                d.cycles.push_back(CycleSeq{n, cycles[chosen[j]]});
                d.set_of.push_back(set_assign[j]);
            }
            found = std::move(d);
            return true;
        }
        int next_edge = std::countr_one(covered);
        for (std::size_t ci : by_edge[static_cast<std::size_t>(next_edge)]) {
            if (edge_mask[ci] & covered) continue;
            covered |= edge_mask[ci];
            chosen.push_back(ci);
            if (self(self)) return true;
            chosen.pop_back();
            covered &= ~edge_mask[ci];
        }
        return false;
    };
    cover(cover);
    return found;
}

}  // namespace hqd
