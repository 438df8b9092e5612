// Product-decomposition algebra: spanning-part products, composition of
// partitionable decompositions, the two-cycle torus route, the three-cycle
// route for a Hamiltonian pair times a cycle, and the two top combinators
// built from them.
#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>

#include "hqd/cycles.hpp"
#include "hqd/errors.hpp"
#include "hqd/torus.hpp"
#include "hqd/verify.hpp"

namespace hqd {

// Sorted set of packed edge keys over some host.
using EdgeSet = std::vector<std::uint64_t>;

struct SpanningPart {
    int host_n = 0;
    EdgeSet edges;
};

// Two edge-disjoint Hamiltonian cycles on a common vertex set.
struct HamPair {
    CycleSeq first;
    CycleSeq second;
};

inline EdgeSet edge_set_of_cycle(const CycleSeq& c) {
    EdgeSet s = cycle_edge_keys(c);
    std::sort(s.begin(), s.end());
    return s;
}

inline bool part_spans(const SpanningPart& p) {
    std::vector<char> hit(vertex_count(p.host_n), 0);
    for (std::uint64_t k : p.edges) {
        hit[static_cast<Vertex>(k & 0xffffffffu)] = 1;
        hit[static_cast<Vertex>(k >> 32)] = 1;
    }
    for (char h : hit)
        if (!h) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Spanning-part products.

// Part i of G [] H is E(G_i [] H_i); with all parts spanning, the m outputs
// partition E(G [] H).
inline std::vector<EdgeSet> spanning_product(const std::vector<SpanningPart>& parts_g,
                                             const std::vector<SpanningPart>& parts_h,
                                             const ProductEmbedding& e) {
    if (parts_g.size() != parts_h.size() || parts_g.empty())
        throw std::invalid_argument("spanning_product: part lists must have equal nonzero length");
    for (const auto& p : parts_g)
        if (p.host_n != e.left_bits || !part_spans(p))
            throw std::invalid_argument("spanning_product: left part not spanning its host");
    for (const auto& p : parts_h)
        if (p.host_n != e.right_bits || !part_spans(p))
            throw std::invalid_argument("spanning_product: right part not spanning its host");

    std::vector<EdgeSet> out;
    out.reserve(parts_g.size());
    for (std::size_t i = 0; i < parts_g.size(); ++i) {
        EdgeSet s;
        for (std::uint64_t k : parts_g[i].edges) {
            Vertex u = static_cast<Vertex>(k & 0xffffffffu), v = static_cast<Vertex>(k >> 32);
            for (Vertex w = 0; w < vertex_count(e.right_bits); ++w)
                s.push_back(edge_key(e.map(u, w), e.map(v, w)));
        }
        for (std::uint64_t k : parts_h[i].edges) {
            Vertex w = static_cast<Vertex>(k & 0xffffffffu), x = static_cast<Vertex>(k >> 32);
            for (Vertex u = 0; u < vertex_count(e.left_bits); ++u)
                s.push_back(edge_key(e.map(u, w), e.map(u, x)));
        }
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
    }
    return out;
}

// One part per cycle C of a single-partition-set family: E(C [] H). The
// horizontal edge uu' at level v goes to the part owning uu'; the vertical
// edge at u goes to the part whose cycle contains u.
inline std::vector<EdgeSet> one_set_product(const std::vector<CycleSeq>& family,
                                            const EdgeSet& h_edges, const ProductEmbedding& e) {
    std::vector<int> owner(vertex_count(e.left_bits), -1);
    for (std::size_t i = 0; i < family.size(); ++i)
        for (Vertex v : family[i].vertices) {
            if (owner[v] != -1) throw std::invalid_argument("one_set_product: family overlaps");
            owner[v] = static_cast<int>(i);
        }
    for (int o : owner)
        if (o == -1) throw std::invalid_argument("one_set_product: family does not cover the host");

    std::vector<EdgeSet> out(family.size());
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::uint64_t k : cycle_edge_keys(family[i])) {
            Vertex u = static_cast<Vertex>(k & 0xffffffffu), v = static_cast<Vertex>(k >> 32);
            for (Vertex w = 0; w < vertex_count(e.right_bits); ++w)
                out[i].push_back(edge_key(e.map(u, w), e.map(v, w)));
        }
    for (std::uint64_t k : h_edges) {
        Vertex w = static_cast<Vertex>(k & 0xffffffffu), x = static_cast<Vertex>(k >> 32);
        for (Vertex u = 0; u < vertex_count(e.left_bits); ++u)
            out[static_cast<std::size_t>(owner[u])].push_back(edge_key(e.map(u, w), e.map(u, x)));
    }
    for (auto& s : out) std::sort(s.begin(), s.end());
    return out;
}

// Concatenates per-part partitionable decompositions of a common host; the
// output partition sets are the union of all inner partition sets, renumbered
// in input order.
inline PartitionedDecomposition compose_partitionable(
    const std::vector<PartitionedDecomposition>& parts) {
    if (parts.empty()) throw std::invalid_argument("compose_partitionable: no parts");
    PartitionedDecomposition out;
    out.host_n = parts[0].host_n;
    out.cycle_length = parts[0].cycle_length;
    int next_set = 0;
    for (const auto& part : parts) {
        if (part.host_n != out.host_n || part.cycle_length != out.cycle_length)
            throw std::invalid_argument("compose_partitionable: mismatched parts");
        // every partition set of a spanning part covers all host vertices
        std::vector<char> hit(vertex_count(out.host_n), 0);
        for (std::size_t i = 0; i < part.cycles.size(); ++i)
            if (part.set_of[i] == 0)
                for (Vertex v : part.cycles[i].vertices) hit[v] = 1;
        for (char h : hit)
            if (!h) throw std::invalid_argument("compose_partitionable: part is not spanning");
        for (std::size_t i = 0; i < part.cycles.size(); ++i) {
            out.cycles.push_back(part.cycles[i]);
            out.set_of.push_back(next_set + part.set_of[i]);
        }
        next_set += part.num_sets();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Three Hamiltonian cycles of (H1 u H2) [] C_c.
//
// The construction is an exact search over 3-colorings of the product's
// edges: each color class must be 2-regular and close into one Hamiltonian
// cycle. A DFS with forced-move propagation (cell degree deficits) and
// per-class premature-cycle pruning assigns edges; a small deterministic
// portfolio of edge orderings and branching orders covers the instances the
// pipeline needs. Every output is verified before use.

namespace as_detail {

struct GridSpec {
    int N = 0;  // positions along H1
    int c = 0;  // levels along the cycle factor
    std::vector<int> h2ord;  // H2 cycle expressed in H1-position space

    int cells() const { return N * c; }
    int cell(int p, int t) const { return t * N + p; }
};

struct SolverConfig {
    bool mrv;      // most-constrained-edge-first instead of static order
    int rot;       // rotation of the class try order
    int sort;      // edge ordering variant
    long long cap; // node budget
};

class ThreeCycleSolver {
  public:
    ThreeCycleSolver(const GridSpec& spec, const SolverConfig& cfg) : spec_(spec), cfg_(cfg) {
        int N = spec.N, c = spec.c;
        for (int t = 0; t < c; ++t) {
            for (int p = 0; p < N; ++p)
                edges_.push_back({spec.cell(p, t), spec.cell((p + 1) % N, t)});
            for (int k = 0; k < N; ++k)
                edges_.push_back({spec.cell(spec.h2ord[static_cast<std::size_t>(k)], t),
                                  spec.cell(spec.h2ord[static_cast<std::size_t>((k + 1) % N)], t)});
            for (int p = 0; p < N; ++p)
                edges_.push_back({spec.cell(p, t), spec.cell(p, (t + 1) % c)});
        }
        if (cfg.sort == 0) {
            std::stable_sort(edges_.begin(), edges_.end(), [](const Edge2& x, const Edge2& y) {
                int mx = std::max(x.a, x.b), my = std::max(y.a, y.b);
                if (mx != my) return mx < my;
                return std::min(x.a, x.b) < std::min(y.a, y.b);
            });
        } else if (cfg.sort == 2) {
            std::stable_sort(edges_.begin(), edges_.end(), [](const Edge2& x, const Edge2& y) {
                int mx = std::min(x.a, x.b), my = std::min(y.a, y.b);
                if (mx != my) return mx < my;
                return std::max(x.a, x.b) < std::max(y.a, y.b);
            });
        }
        inc_.assign(static_cast<std::size_t>(spec.cells()), {});
        std::vector<int> cnt(static_cast<std::size_t>(spec.cells()), 0);
        for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
            inc_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].a)]
                [static_cast<std::size_t>(cnt[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].a)]++)] = e;
            inc_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].b)]
                [static_cast<std::size_t>(cnt[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].b)]++)] = e;
        }
        cls_.assign(edges_.size(), -1);
        deg_.assign(static_cast<std::size_t>(spec.cells()), {0, 0, 0});
        for (int z = 0; z < 3; ++z) {
            uf_[static_cast<std::size_t>(z)].resize(static_cast<std::size_t>(spec.cells()));
            size_[static_cast<std::size_t>(z)].assign(static_cast<std::size_t>(spec.cells()), 1);
            for (int i = 0; i < spec.cells(); ++i) uf_[static_cast<std::size_t>(z)][static_cast<std::size_t>(i)] = i;
        }
        zcount_ = {0, 0, 0};
    }

    // cell sequences of the three Hamiltonian cycles, or nothing within budget
    std::optional<std::array<std::vector<int>, 3>> solve() {
        std::vector<Undo> trail;
        // class labels are interchangeable: pin the first edge
        if (!assign(0, 0, trail)) return std::nullopt;
        dirty_.clear();
        dirty_.push_back(edges_[0].a);
        dirty_.push_back(edges_[0].b);
        if (!propagate(trail)) return std::nullopt;
        if (!dfs(trail)) return std::nullopt;
        return extract();
    }

  private:
    struct Edge2 { int a, b; };
    struct Undo { int edge; int root; std::int8_t z; bool unioned; };

    const GridSpec& spec_;
    SolverConfig cfg_;
    std::vector<Edge2> edges_;
    std::vector<std::array<int, 6>> inc_;
    std::vector<std::int8_t> cls_;
    std::vector<std::array<std::int8_t, 3>> deg_;
    std::array<std::vector<int>, 3> uf_;
    std::array<std::vector<int>, 3> size_;
    std::array<int, 3> zcount_{};
    std::vector<int> dirty_;
    long long nodes_ = 0;
    int scan_hint_ = 0;

    // no path compression: parent writes must be exactly undoable
    int find(int z, int x) const {
        const auto& u = uf_[static_cast<std::size_t>(z)];
        while (u[static_cast<std::size_t>(x)] != x) x = u[static_cast<std::size_t>(x)];
        return x;
    }

    bool can_take(int e, int z) {
        const Edge2& E = edges_[static_cast<std::size_t>(e)];
        if (deg_[static_cast<std::size_t>(E.a)][static_cast<std::size_t>(z)] >= 2 ||
            deg_[static_cast<std::size_t>(E.b)][static_cast<std::size_t>(z)] >= 2)
            return false;
        int ra = find(z, E.a), rb = find(z, E.b);
        return ra != rb || zcount_[static_cast<std::size_t>(z)] + 1 == spec_.cells();
    }

    bool assign(int e, int z, std::vector<Undo>& trail) {
        if (!can_take(e, z)) return false;
        const Edge2& E = edges_[static_cast<std::size_t>(e)];
        int ra = find(z, E.a), rb = find(z, E.b);
        cls_[static_cast<std::size_t>(e)] = static_cast<std::int8_t>(z);
        ++deg_[static_cast<std::size_t>(E.a)][static_cast<std::size_t>(z)];
        ++deg_[static_cast<std::size_t>(E.b)][static_cast<std::size_t>(z)];
        ++zcount_[static_cast<std::size_t>(z)];
        bool unioned = false;
        if (ra != rb) {
            if (size_[static_cast<std::size_t>(z)][static_cast<std::size_t>(ra)] >
                size_[static_cast<std::size_t>(z)][static_cast<std::size_t>(rb)])
                std::swap(ra, rb);
            uf_[static_cast<std::size_t>(z)][static_cast<std::size_t>(ra)] = rb;
            size_[static_cast<std::size_t>(z)][static_cast<std::size_t>(rb)] +=
                size_[static_cast<std::size_t>(z)][static_cast<std::size_t>(ra)];
            unioned = true;
        }
        trail.push_back({e, ra, static_cast<std::int8_t>(z), unioned});
        return true;
    }

    void unwind(std::vector<Undo>& trail, std::size_t mark) {
        while (trail.size() > mark) {
            Undo u = trail.back();
            trail.pop_back();
            const Edge2& E = edges_[static_cast<std::size_t>(u.edge)];
            if (u.unioned) {
                int rb = uf_[static_cast<std::size_t>(u.z)][static_cast<std::size_t>(u.root)];
                size_[static_cast<std::size_t>(u.z)][static_cast<std::size_t>(rb)] -=
                    size_[static_cast<std::size_t>(u.z)][static_cast<std::size_t>(u.root)];
                uf_[static_cast<std::size_t>(u.z)][static_cast<std::size_t>(u.root)] = u.root;
            }
            --zcount_[static_cast<std::size_t>(u.z)];
            --deg_[static_cast<std::size_t>(E.a)][static_cast<std::size_t>(u.z)];
            --deg_[static_cast<std::size_t>(E.b)][static_cast<std::size_t>(u.z)];
            cls_[static_cast<std::size_t>(u.edge)] = -1;
            scan_hint_ = std::min(scan_hint_, u.edge);
        }
    }

    // forced-move closure: whenever a cell's remaining incident edges all have
    // to land in one class, assign them immediately
    bool propagate(std::vector<Undo>& trail) {
        while (!dirty_.empty()) {
            int cell = dirty_.back();
            dirty_.pop_back();
            int rem[6], nrem = 0;
            for (int ie : inc_[static_cast<std::size_t>(cell)])
                if (cls_[static_cast<std::size_t>(ie)] < 0) rem[nrem++] = ie;
            if (nrem == 0) continue;
            for (int z = 0; z < 3; ++z) {
                if (2 - deg_[static_cast<std::size_t>(cell)][static_cast<std::size_t>(z)] != nrem)
                    continue;
                for (int i = 0; i < nrem; ++i) {
                    int ie = rem[i];
                    if (cls_[static_cast<std::size_t>(ie)] >= 0) continue;
                    if (!assign(ie, z, trail)) {
                        dirty_.clear();
                        return false;
                    }
                    const Edge2& E = edges_[static_cast<std::size_t>(ie)];
                    dirty_.push_back(E.a == cell ? E.b : E.a);
                }
                break;
            }
        }
        return true;
    }

    int valid_classes(int e, int* out) {
        int n = 0;
        for (int z = 0; z < 3; ++z)
            if (can_take(e, z)) out[n++] = z;
        return n;
    }

    bool dfs(std::vector<Undo>& trail) {
        if (++nodes_ > cfg_.cap) return false;
        int e = -1, opts[3], chosen[3], nch = 0;
        if (cfg_.mrv) {
            int best = 4;
            for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
                if (cls_[static_cast<std::size_t>(i)] >= 0) continue;
                int n = valid_classes(i, opts);
                if (n == 0) return false;
                if (n < best) {
                    best = n;
                    e = i;
                    nch = n;
                    for (int j = 0; j < n; ++j) chosen[j] = opts[j];
                    if (n == 1) break;
                }
            }
        } else {
            while (scan_hint_ < static_cast<int>(edges_.size()) &&
                   cls_[static_cast<std::size_t>(scan_hint_)] >= 0)
                ++scan_hint_;
            if (scan_hint_ < static_cast<int>(edges_.size())) {
                e = scan_hint_;
                nch = valid_classes(e, chosen);
                if (nch == 0) return false;
            }
        }
        if (e < 0)
            return zcount_[0] == spec_.cells() && zcount_[1] == spec_.cells() &&
                   zcount_[2] == spec_.cells();
        for (int zi = 0; zi < nch; ++zi) {
            int z = chosen[(zi + cfg_.rot) % nch];
            std::size_t mark = trail.size();
            int saved_hint = scan_hint_;
            if (assign(e, z, trail)) {
                dirty_.clear();
                dirty_.push_back(edges_[static_cast<std::size_t>(e)].a);
                dirty_.push_back(edges_[static_cast<std::size_t>(e)].b);
                if (propagate(trail) && dfs(trail)) return true;
            }
            unwind(trail, mark);
            scan_hint_ = saved_hint;
        }
        return false;
    }

    std::array<std::vector<int>, 3> extract() const {
        std::array<std::vector<int>, 3> out;
        for (int z = 0; z < 3; ++z) {
            std::vector<int>& seq = out[static_cast<std::size_t>(z)];
            int cur = 0, prev = -1;
            do {
                seq.push_back(cur);
                int next = -1;
                for (int ie : inc_[static_cast<std::size_t>(cur)]) {
                    if (cls_[static_cast<std::size_t>(ie)] != z) continue;
                    const Edge2& E = edges_[static_cast<std::size_t>(ie)];
                    int other = E.a == cur ? E.b : E.a;
                    if (other != prev) { next = other; break; }
                }
                prev = cur;
                cur = next;
            } while (cur != 0 && cur != -1);
            if (cur != 0 || seq.size() != static_cast<std::size_t>(spec_.cells()))
                throw std::logic_error("three-cycle extraction failed");
        }
        return out;
    }
};

// Positions of one cycle along another: h2's vertex order expressed as
// indices into h1's vertex order.
inline std::vector<int> h2_order_in_positions(const CycleSeq& h1, const CycleSeq& h2) {
    std::vector<int> pos_of(vertex_count(h1.host_n), -1);
    for (std::size_t i = 0; i < h1.vertices.size(); ++i)
        pos_of[h1.vertices[i]] = static_cast<int>(i);
    std::vector<int> ord;
    ord.reserve(h2.vertices.size());
    for (Vertex v : h2.vertices) {
        if (pos_of[v] < 0) throw std::invalid_argument("ham_pair_product: pair vertex sets differ");
        ord.push_back(pos_of[v]);
    }
    return ord;
}

inline std::optional<std::array<std::vector<int>, 3>> three_cycles_of_grid(
    int N, int c, const std::vector<int>& h2ord) {
    if (static_cast<long long>(N) * c > 8192) return std::nullopt;  // search depth cap
    GridSpec spec{N, c, h2ord};
    // portfolio in proven-first order; node budgets keep each try bounded
    const SolverConfig portfolio[] = {
        {false, 0, 0, 2'000'000}, {false, 1, 0, 2'000'000}, {true, 2, 1, 150'000},
        {true, 2, 2, 150'000},    {false, 1, 2, 2'000'000}, {false, 2, 2, 2'000'000},
        {true, 1, 1, 150'000},    {false, 2, 0, 2'000'000}, {false, 0, 2, 2'000'000},
        {true, 0, 1, 150'000},    {false, 1, 1, 2'000'000}, {false, 0, 1, 2'000'000},
        {true, 0, 0, 150'000},    {true, 1, 0, 150'000},    {true, 1, 2, 150'000},
        {true, 0, 2, 150'000},
    };
    for (const SolverConfig& cfg : portfolio) {
        ThreeCycleSolver solver(spec, cfg);
        if (auto res = solver.solve()) return res;
    }
    return std::nullopt;
}

}  // namespace as_detail

// Three edge-disjoint Hamiltonian cycles of (H1 u H2) [] C, where C is given
// by its vertex labels in the other factor. pair_is_left selects which factor
// occupies the low-order bits of the embedding. Output is verified; failure
// raises unsupported_instance, never a silent wrong answer.
inline std::array<CycleSeq, 3> ham_pair_product(const HamPair& pair,
                                                const std::vector<Vertex>& level_labels,
                                                const ProductEmbedding& e, bool pair_is_left) {
    const CycleSeq& h1 = pair.first;
    const CycleSeq& h2 = pair.second;
    int pair_bits = pair_is_left ? e.left_bits : e.right_bits;
    int c = static_cast<int>(level_labels.size());
    if (h1.host_n != pair_bits || h2.host_n != pair_bits)
        throw std::invalid_argument("ham_pair_product: pair host does not match embedding");
    if (h1.vertices.size() != vertex_count(pair_bits) ||
        h2.vertices.size() != vertex_count(pair_bits))
        throw std::invalid_argument("ham_pair_product: pair cycles are not Hamiltonian");
    if (c < 3) throw std::invalid_argument("ham_pair_product: cycle factor too short");
    int N = static_cast<int>(h1.vertices.size());

    std::vector<int> h2ord = as_detail::h2_order_in_positions(h1, h2);
    for (int k = 0; k < N; ++k) {
        int d = (h2ord[static_cast<std::size_t>((k + 1) % N)] - h2ord[static_cast<std::size_t>(k)] + N) % N;
        if (d == 1 || d == N - 1)
            throw std::invalid_argument("ham_pair_product: pair cycles share an edge");
    }

    auto res = as_detail::three_cycles_of_grid(N, c, h2ord);
    if (!res) throw unsupported_instance("ham_pair_product: no construction found for N=" +
                                         std::to_string(N) + " c=" + std::to_string(c));

    std::array<CycleSeq, 3> out;
    for (int z = 0; z < 3; ++z) {
        CycleSeq cyc;
        cyc.host_n = e.total_bits();
        cyc.vertices.reserve(static_cast<std::size_t>(N) * c);
        for (int cellid : (*res)[static_cast<std::size_t>(z)]) {
            Vertex w = h1.vertices[static_cast<std::size_t>(cellid % N)];
            Vertex lv = level_labels[static_cast<std::size_t>(cellid / N)];
            cyc.vertices.push_back(pair_is_left ? e.map(w, lv) : e.map(lv, w));
        }
        out[static_cast<std::size_t>(z)] = std::move(cyc);
    }

    // verifier gate: Hamiltonian on the product vertex set, edge-disjoint
    std::vector<std::uint64_t> all;
    for (const auto& cyc : out) {
        VerificationReport r = check_cycle(cyc);
        if (!r.ok() || cyc.vertices.size() != static_cast<std::size_t>(N) * c)
            throw unsupported_instance("ham_pair_product: output failed verification");
        auto keys = cycle_edge_keys(cyc);
        all.insert(all.end(), keys.begin(), keys.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw unsupported_instance("ham_pair_product: output cycles share an edge");
    return out;
}

// Spec form: the second factor is the 2^b-cycle in Gray order on the
// embedding's right-hand bits.
inline std::array<CycleSeq, 3> ham_pair_product(const HamPair& pair, int c,
                                                const ProductEmbedding& e) {
    if (c != static_cast<int>(vertex_count(e.right_bits)))
        throw std::invalid_argument("ham_pair_product: c must match the right factor size");
    return ham_pair_product(pair, gray_cycle(e.right_bits), e, /*pair_is_left=*/true);
}

// ---------------------------------------------------------------------------
// Top combinators.

// G [] H for G with m partition sets of length-l cycles and H given by m+n'
// Hamiltonian cycles, m <= m+n' <= 2m. H^i pairs with H^{m+i} for i < n'.
// Single-cycle H_i uses the two-cycle torus route (two partition sets);
// paired H_i uses the three-cycle route (three partition sets).
inline PartitionedDecomposition hh_product(const PartitionedDecomposition& g_dec,
                                           const std::vector<CycleSeq>& h_ham,
                                           const ProductEmbedding& e) {
    int m = g_dec.num_sets();
    int h = static_cast<int>(h_ham.size());
    if (m < 1 || h < m || h > 2 * m)
        throw std::invalid_argument("hh_product: need m <= |H cycles| <= 2m");
    if (g_dec.host_n != e.left_bits)
        throw std::invalid_argument("hh_product: left host mismatch");
    std::size_t nh = vertex_count(e.right_bits);
    for (const auto& cyc : h_ham)
        if (cyc.host_n != e.right_bits || cyc.vertices.size() != nh)
            throw std::invalid_argument("hh_product: H cycles must be Hamiltonian on the right host");
    int n_paired = h - m;
    int ell = static_cast<int>(g_dec.cycle_length);

    std::vector<PartitionedDecomposition> parts;
    for (int i = 0; i < m; ++i) {
        PartitionedDecomposition part;
        part.host_n = e.total_bits();
        part.cycle_length = g_dec.cycle_length * nh;
        for (std::size_t ci = 0; ci < g_dec.cycles.size(); ++ci) {
            if (g_dec.set_of[ci] != i) continue;
            const CycleSeq& C = g_dec.cycles[ci];
            if (i < n_paired) {
                HamPair pair{h_ham[static_cast<std::size_t>(i)], h_ham[static_cast<std::size_t>(m + i)]};
                auto three = ham_pair_product(pair, C.vertices, e, /*pair_is_left=*/false);
                for (int z = 0; z < 3; ++z) {
                    part.cycles.push_back(std::move(three[static_cast<std::size_t>(z)]));
                    part.set_of.push_back(z);
                }
            } else {
                auto [red, blue] = kotzig_torus(ell, static_cast<int>(nh));
                const CycleSeq& hi = h_ham[static_cast<std::size_t>(i)];
                for (int z = 0; z < 2; ++z) {
                    const TorusCycle& tc = z == 0 ? red : blue;
                    CycleSeq cyc;
                    cyc.host_n = e.total_bits();
                    cyc.vertices.reserve(tc.size());
                    for (TorusCoord p : tc)
                        cyc.vertices.push_back(
                            e.map(C.vertices[static_cast<std::size_t>(p.x)],
                                  hi.vertices[static_cast<std::size_t>(p.y)]));
                    part.cycles.push_back(std::move(cyc));
                    part.set_of.push_back(z);
                }
            }
        }
        parts.push_back(std::move(part));
    }
    return compose_partitionable(parts);
}

// G [] C_4 keeping cycle length: partition sets 1..k-1 are copied at the four
// levels; the last set takes all vertical edges, each of its cycles becoming
// a C_{4l} x C_4 torus decomposed into length-4l cycles with two partition
// sets. Output has k+1 sets.
inline PartitionedDecomposition cart_times_c4(const PartitionedDecomposition& g_dec,
                                              const ProductEmbedding& e) {
    if (e.right_bits != 2 || g_dec.host_n != e.left_bits)
        throw std::invalid_argument("cart_times_c4: embedding must append one C4 factor");
    if (g_dec.cycle_length % 4 != 0 || g_dec.cycle_length < 4)
        throw std::invalid_argument("cart_times_c4: cycle length must be a multiple of 4");
    int k = g_dec.num_sets();
    if (k < 1) throw std::invalid_argument("cart_times_c4: empty decomposition");
    int ell = static_cast<int>(g_dec.cycle_length / 4);

    std::vector<PartitionedDecomposition> parts;
    for (int i = 0; i + 1 < k; ++i) {
        PartitionedDecomposition part;
        part.host_n = e.total_bits();
        part.cycle_length = g_dec.cycle_length;
        for (std::size_t ci = 0; ci < g_dec.cycles.size(); ++ci) {
            if (g_dec.set_of[ci] != i) continue;
            for (int j = 0; j < 4; ++j) {
                CycleSeq cyc;
                cyc.host_n = e.total_bits();
                cyc.vertices.reserve(g_dec.cycles[ci].vertices.size());
                for (Vertex v : g_dec.cycles[ci].vertices)
                    cyc.vertices.push_back(e.map(v, gray2(j)));
                part.cycles.push_back(std::move(cyc));
                part.set_of.push_back(0);
            }
        }
        parts.push_back(std::move(part));
    }

    PartitionedDecomposition last;
    last.host_n = e.total_bits();
    last.cycle_length = g_dec.cycle_length;
    for (std::size_t ci = 0; ci < g_dec.cycles.size(); ++ci) {
        if (g_dec.set_of[ci] != k - 1) continue;
        const CycleSeq& C = g_dec.cycles[ci];
        TorusDecomposition td = torus_4n_decomposition(ell, ell);
        for (std::size_t z = 0; z < td.cycles.size(); ++z) {
            CycleSeq cyc;
            cyc.host_n = e.total_bits();
            cyc.vertices.reserve(td.cycles[z].size());
            for (TorusCoord p : td.cycles[z])
                cyc.vertices.push_back(
                    e.map(C.vertices[static_cast<std::size_t>(p.x)], gray2(p.y)));
            last.cycles.push_back(std::move(cyc));
            last.set_of.push_back(td.set_of[z]);
        }
    }
    parts.push_back(std::move(last));
    return compose_partitionable(parts);
}

}  // namespace hqd
