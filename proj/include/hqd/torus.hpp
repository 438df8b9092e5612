// Cycle constructions on tori: the four-cycle seed coloring of C_{4l} x C_4,
// the cycle combination operation, the length-4n recoloring schedule, and a
// two-cycle Hamiltonian decomposition of C_a x C_b.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "hqd/errors.hpp"
#include "hqd/verify.hpp"

namespace hqd {

struct TorusCoord {
    int x = 0;
    int y = 0;
    friend bool operator==(const TorusCoord&, const TorusCoord&) = default;
    friend auto operator<=>(const TorusCoord&, const TorusCoord&) = default;
};

using TorusCycle = std::vector<TorusCoord>;

// A cycle family over C_w x C_h with a partition-set id per cycle, plus the
// list of recoloring squares that produced it (empty when not applicable).
struct TorusDecomposition {
    int width = 0;
    int height = 0;
    std::vector<TorusCycle> cycles;
    std::vector<int> set_of;
    std::vector<int> recolored;
};

namespace torus_detail {

inline bool coords_adjacent(int w, int h, TorusCoord a, TorusCoord b) {
    if (a.x == b.x) {
        int d = ((b.y - a.y) % h + h) % h;
        return d == 1 || d == h - 1;
    }
    if (a.y == b.y) {
        int d = ((b.x - a.x) % w + w) % w;
        return d == 1 || d == w - 1;
    }
    return false;
}

// Canonical edge id on the torus: direction bit, then the cell whose +1
// neighbor is the other endpoint.
inline std::uint64_t torus_edge_key(int w, int h, TorusCoord a, TorusCoord b) {
    if (a.y == b.y && (a.x + 1) % w == b.x) return (std::uint64_t(a.x * h + a.y) << 1) | 0;
    if (a.y == b.y && (b.x + 1) % w == a.x) return (std::uint64_t(b.x * h + b.y) << 1) | 0;
    if (a.x == b.x && (a.y + 1) % h == b.y) return (std::uint64_t(a.x * h + a.y) << 1) | 1;
    if (a.x == b.x && (b.y + 1) % h == a.y) return (std::uint64_t(b.x * h + b.y) << 1) | 1;
    throw std::invalid_argument("not a torus edge");
}

}  // namespace torus_detail

inline VerificationReport check_torus_cycle(int w, int h, const TorusCycle& c) {
    VerificationReport r;
    if (c.size() < 4) r.fail(check::cycle_length, "length " + std::to_string(c.size()));
    std::vector<char> seen(static_cast<std::size_t>(w) * h, 0);
    for (TorusCoord p : c) {
        if (p.x < 0 || p.x >= w || p.y < 0 || p.y >= h) {
            r.fail(check::cycle_range, "coordinate out of range");
            return r;
        }
        if (seen[static_cast<std::size_t>(p.x) * h + p.y]++)
            r.fail(check::cycle_distinctness,
                   "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ") repeated");
    }
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!torus_detail::coords_adjacent(w, h, c[i], c[(i + 1) % c.size()]))
            r.fail(check::cycle_adjacency, "step " + std::to_string(i));
    return r;
}

// Edge-exact cover of C_w x C_h plus vertex partition per set id.
inline VerificationReport check_torus_decomposition(const TorusDecomposition& d) {
    VerificationReport r;
    for (std::size_t i = 0; i < d.cycles.size(); ++i) {
        VerificationReport rc = check_torus_cycle(d.width, d.height, d.cycles[i]);
        for (auto& f : rc.failures) f.detail = "cycle " + std::to_string(i) + ": " + f.detail;
        r.merge(rc);
    }
    if (!r.ok()) return r;

    std::map<std::uint64_t, int> count;
    for (const auto& c : d.cycles)
        for (std::size_t i = 0; i < c.size(); ++i)
            ++count[torus_detail::torus_edge_key(d.width, d.height, c[i], c[(i + 1) % c.size()])];
    std::size_t total = static_cast<std::size_t>(2) * d.width * d.height;
    std::size_t covered_once = 0, duplicated = 0;
    for (auto& [k, n] : count) {
        if (n == 1)
            ++covered_once;
        else
            ++duplicated;
    }
    if (duplicated) r.fail(check::decomposition_disjointness, std::to_string(duplicated) + " edges repeated");
    if (covered_once + duplicated < total)
        r.fail(check::decomposition_coverage,
               std::to_string(total - covered_once - duplicated) + " missing edges");

    int sets = 0;
    for (int s : d.set_of) sets = std::max(sets, s + 1);
    std::vector<std::vector<int>> seen(static_cast<std::size_t>(sets),
                                       std::vector<int>(static_cast<std::size_t>(d.width) * d.height, 0));
    for (std::size_t i = 0; i < d.cycles.size(); ++i)
        for (TorusCoord p : d.cycles[i])
            ++seen[static_cast<std::size_t>(d.set_of[i])][static_cast<std::size_t>(p.x) * d.height + p.y];
    for (int s = 0; s < sets; ++s) {
        std::size_t over = 0, under = 0;
        for (int c : seen[static_cast<std::size_t>(s)]) {
            if (c > 1) ++over;
            if (c == 0) ++under;
        }
        if (over) r.fail(check::partition_overlap, "set " + std::to_string(s));
        if (under) r.fail(check::partition_coverage, "set " + std::to_string(s));
    }
    return r;
}

// ---------------------------------------------------------------------------
// The red/blue coloring of C_{4l} x C_4.

enum class TorusColor : std::uint8_t { Red = 0, Blue = 1 };

// Edge coloring of C_{4l} x C_4; each color class is a disjoint union of
// cycles whose vertex sets partition all 16l vertices.
struct TorusColoring {
    int ell = 0;
    // cx[x*4+y] colors edge (x,y)-(x+1,y); cy[x*4+y] colors edge (x,y)-(x,y+1)
    std::vector<TorusColor> cx, cy;

    int width() const { return 4 * ell; }
    int height() const { return 4; }

    TorusColor edge_color(TorusCoord a, TorusCoord b) const {
        int w = width(), h = height();
        if (a.y == b.y && (a.x + 1) % w == b.x) return cx[static_cast<std::size_t>(a.x) * h + a.y];
        if (a.y == b.y && (b.x + 1) % w == a.x) return cx[static_cast<std::size_t>(b.x) * h + b.y];
        if (a.x == b.x && (a.y + 1) % h == b.y) return cy[static_cast<std::size_t>(a.x) * h + a.y];
        if (a.x == b.x && (b.y + 1) % h == a.y) return cy[static_cast<std::size_t>(b.x) * h + b.y];
        throw std::invalid_argument("not a torus edge");
    }

    void set_edge_color(TorusCoord a, TorusCoord b, TorusColor c) {
        int w = width(), h = height();
        if (a.y == b.y && (a.x + 1) % w == b.x) { cx[static_cast<std::size_t>(a.x) * h + a.y] = c; return; }
        if (a.y == b.y && (b.x + 1) % w == a.x) { cx[static_cast<std::size_t>(b.x) * h + b.y] = c; return; }
        if (a.x == b.x && (a.y + 1) % h == b.y) { cy[static_cast<std::size_t>(a.x) * h + a.y] = c; return; }
        if (a.x == b.x && (b.y + 1) % h == a.y) { cy[static_cast<std::size_t>(b.x) * h + b.y] = c; return; }
        throw std::invalid_argument("not a torus edge");
    }

    // Current cycle partition of one color class. Deterministic walk: lowest
    // coordinate starts, lexicographically smaller neighbor first.
    std::vector<TorusCycle> cycles(TorusColor color) const {
        int w = width(), h = height();
        std::vector<char> used(static_cast<std::size_t>(w) * h, 0);
        std::vector<TorusCycle> out;
        for (int sx = 0; sx < w; ++sx) {
            for (int sy = 0; sy < h; ++sy) {
                if (used[static_cast<std::size_t>(sx) * h + sy]) continue;
                TorusCycle cyc;
                TorusCoord prev{-1, -1};
                TorusCoord cur{sx, sy};
                do {
                    used[static_cast<std::size_t>(cur.x) * h + cur.y] = 1;
                    cyc.push_back(cur);
                    std::array<TorusCoord, 4> nbrs = {
                        TorusCoord{(cur.x + 1) % w, cur.y}, TorusCoord{(cur.x + w - 1) % w, cur.y},
                        TorusCoord{cur.x, (cur.y + 1) % h}, TorusCoord{cur.x, (cur.y + 3) % h}};
                    std::sort(nbrs.begin(), nbrs.end());
                    TorusCoord next{-1, -1};
                    for (TorusCoord nb : nbrs) {
                        if (nb == prev) continue;
                        if (edge_color(cur, nb) == color) { next = nb; break; }
                    }
                    if (next == TorusCoord{-1, -1})
                        throw std::logic_error("color class is not 2-regular");
                    prev = cur;
                    cur = next;
                } while (!(cur == TorusCoord{sx, sy}));
                out.push_back(std::move(cyc));
            }
        }
        return out;
    }

    std::vector<TorusCycle> red_cycles() const { return cycles(TorusColor::Red); }
    std::vector<TorusCycle> blue_cycles() const { return cycles(TorusColor::Blue); }
};

// The four vertices of the k-th recoloring square, k in [1, 4l]:
// S_1 = ((0,1),(0,2),(1,2),(1,1)), and S_k is S_{k-1} shifted by (+1,+1).
inline std::array<TorusCoord, 4> recolor_square(int k, int ell) {
    if (ell < 1 || k < 1 || k > 4 * ell) throw std::invalid_argument("recolor square out of range");
    int w = 4 * ell, s = k - 1;
    auto sh = [&](int x, int y) { return TorusCoord{(x + s) % w, (y + s) % 4}; };
    return {sh(0, 1), sh(0, 2), sh(1, 2), sh(1, 1)};
}

namespace torus_detail {

// Seed cycles R^0..R^{4l-1}, B^0..B^{4l-1}: explicit first two of each color,
// then C^k = C^{k-2} shifted by (+2,+2).
inline std::pair<std::vector<TorusCycle>, std::vector<TorusCycle>> seed_cycles(int ell) {
    int w = 4 * ell;
    auto shifted = [&](const TorusCycle& c, int dx, int dy) {
        TorusCycle out;
        out.reserve(c.size());
        for (TorusCoord p : c) out.push_back({(p.x + dx) % w, (p.y + dy) % 4});
        return out;
    };
    std::vector<TorusCycle> reds = {
        {{0, 0}, {0, 1}, {1, 1}, {1, 0}},
        {{0, 2}, {0, 3}, {1, 3}, {1, 2}},
    };
    std::vector<TorusCycle> blues = {
        {{w - 1, 1}, {w - 1, 2}, {0, 2}, {0, 1}},
        {{1, 1}, {1, 2}, {2, 2}, {2, 1}},
    };
    for (int k = 2; k < 4 * ell; ++k) {
        reds.push_back(shifted(reds[static_cast<std::size_t>(k - 2)], 2, 2));
        blues.push_back(shifted(blues[static_cast<std::size_t>(k - 2)], 2, 2));
    }
    return {std::move(reds), std::move(blues)};
}

}  // namespace torus_detail

// The 8l four-cycles painted onto C_{4l} x C_4; every vertex lies in exactly
// one red and one blue cycle.
inline TorusColoring seed_four_cycles(int ell) {
    if (ell < 1) throw std::invalid_argument("seed_four_cycles: ell must be >= 1");
    TorusColoring col;
    col.ell = ell;
    std::size_t cells = static_cast<std::size_t>(16) * ell;
    col.cx.assign(cells, TorusColor::Red);
    col.cy.assign(cells, TorusColor::Red);
    auto [reds, blues] = torus_detail::seed_cycles(ell);
    auto paint = [&](const std::vector<TorusCycle>& cycles, TorusColor c) {
        for (const auto& cyc : cycles)
            for (std::size_t i = 0; i < cyc.size(); ++i)
                col.set_edge_color(cyc[i], cyc[(i + 1) % cyc.size()], c);
    };
    paint(blues, TorusColor::Blue);
    paint(reds, TorusColor::Red);
    return col;
}

// The cycle combination operation: the square's four edges alternate between
// one color (in two distinct cycles) and the other (in two distinct cycles);
// swapping the colors merges both pairs.
inline TorusColoring cycle_combine(TorusColoring state, const std::array<TorusCoord, 4>& sq) {
    int w = state.width(), h = state.height();
    for (int i = 0; i < 4; ++i)
        if (!torus_detail::coords_adjacent(w, h, sq[static_cast<std::size_t>(i)],
                                           sq[static_cast<std::size_t>((i + 1) % 4)]))
            throw std::invalid_argument("cycle_combine: not a 4-cycle");

    TorusColor c0 = state.edge_color(sq[0], sq[1]);
    TorusColor c1 = state.edge_color(sq[1], sq[2]);
    TorusColor c2 = state.edge_color(sq[2], sq[3]);
    TorusColor c3 = state.edge_color(sq[3], sq[0]);
    if (c0 != c2 || c1 != c3 || c0 == c1)
        throw invalid_recolor("cycle_combine: square edges are not alternating colors");

    // Opposite edges must lie in distinct cycles of their color.
    auto cycle_id_of = [&](TorusColor color, TorusCoord p) {
        auto cycles = state.cycles(color);
        for (std::size_t i = 0; i < cycles.size(); ++i)
            for (TorusCoord q : cycles[i])
                if (q == p) return i;
        throw std::logic_error("cycle_combine: vertex not on any cycle");
    };
    if (cycle_id_of(c0, sq[0]) == cycle_id_of(c0, sq[2]))
        throw invalid_recolor("cycle_combine: opposite edges lie in the same cycle");
    if (cycle_id_of(c1, sq[1]) == cycle_id_of(c1, sq[3]))
        throw invalid_recolor("cycle_combine: opposite edges lie in the same cycle");

    state.set_edge_color(sq[0], sq[1], c1);
    state.set_edge_color(sq[2], sq[3], c1);
    state.set_edge_color(sq[1], sq[2], c0);
    state.set_edge_color(sq[3], sq[0], c0);
    return state;
}

// Partitionable decomposition of C_{4l} x C_4 into cycles of length 4n:
// recolor exactly the squares S_i with n not dividing i, in increasing i.
// Red cycles form set 0, blue cycles set 1.
inline TorusDecomposition torus_4n_decomposition(int ell, int n) {
    if (ell < 1 || n < 1 || (4 * ell) % n != 0)
        throw std::invalid_argument("torus_4n_decomposition: need n dividing 4*ell");
    TorusColoring state = seed_four_cycles(ell);
    TorusDecomposition out;
    out.width = 4 * ell;
    out.height = 4;
    for (int i = 1; i <= 4 * ell; ++i) {
        if (i % n == 0) continue;
        state = cycle_combine(std::move(state), recolor_square(i, ell));
        out.recolored.push_back(i);
    }
    for (auto& c : state.red_cycles()) {
        out.cycles.push_back(std::move(c));
        out.set_of.push_back(0);
    }
    for (auto& c : state.blue_cycles()) {
        out.cycles.push_back(std::move(c));
        out.set_of.push_back(1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Two-cycle Hamiltonian decomposition of C_a x C_b.

namespace torus_detail {

// Staircase Hamiltonian cycle for even a, b: rows are taken in pairs
// (2p+1, 2p) from the top down, zigzagged left to right, chained down the
// last column. Shifting all rows by +1 gives the complementary cycle.
inline TorusCycle staircase(int a, int b, int shift) {
    TorusCycle cyc;
    cyc.reserve(static_cast<std::size_t>(a) * b);
    for (int p = b / 2 - 1; p >= 0; --p) {
        int hi = 2 * p + 1, lo = 2 * p;
        cyc.push_back({a - 1, hi});
        for (int x = 0; x <= a - 2; ++x) {
            if (x % 2 == 0) {
                cyc.push_back({x, hi});
                cyc.push_back({x, lo});
            } else {
                cyc.push_back({x, lo});
                cyc.push_back({x, hi});
            }
        }
        cyc.push_back({a - 1, lo});
    }
    if (shift)
        for (auto& p : cyc) p.y = (p.y + shift) % b;
    return cyc;
}

// Deterministic exhaustive fallback for small sizes: enumerate Hamiltonian
// cycles until one has a Hamiltonian complement.
inline std::optional<std::pair<TorusCycle, TorusCycle>> small_torus_search(int a, int b) {
    int cells = a * b;
    auto id = [&](TorusCoord p) { return p.x * b + p.y; };
    auto coord = [&](int i) { return TorusCoord{i / b, i % b}; };
    std::vector<std::array<int, 4>> adj(static_cast<std::size_t>(cells));
    for (int i = 0; i < cells; ++i) {
        TorusCoord p = coord(i);
        adj[static_cast<std::size_t>(i)] = {id({(p.x + 1) % a, p.y}), id({(p.x + a - 1) % a, p.y}),
                                            id({p.x, (p.y + 1) % b}), id({p.x, (p.y + b - 1) % b})};
        std::sort(adj[static_cast<std::size_t>(i)].begin(), adj[static_cast<std::size_t>(i)].end());
    }
    std::vector<int> path{0};
    std::vector<char> in_path(static_cast<std::size_t>(cells), 0);
    in_path[0] = 1;
    std::optional<std::pair<TorusCycle, TorusCycle>> found;
    long long budget = 20'000'000;

    auto complement_is_cycle = [&](const std::vector<int>& cyc) {
        std::vector<char> on(static_cast<std::size_t>(cells) * cells, 0);
        auto mark = [&](int u, int v) { on[static_cast<std::size_t>(u) * cells + v] = 1; on[static_cast<std::size_t>(v) * cells + u] = 1; };
        for (std::size_t i = 0; i < cyc.size(); ++i) mark(cyc[i], cyc[(i + 1) % cyc.size()]);
        int prev = -1, cur = 0, steps = 0;
        do {
            int next = -1;
            for (int nb : adj[static_cast<std::size_t>(cur)])
                if (nb != prev && !on[static_cast<std::size_t>(cur) * cells + nb]) { next = nb; break; }
            if (next < 0) return false;
            prev = cur;
            cur = next;
            if (++steps > cells) return false;
        } while (cur != 0);
        return steps == cells;
    };

    auto dfs = [&](auto&& self) -> bool {
        if (--budget < 0) return true;  // give up deterministically
        if (static_cast<int>(path.size()) == cells) {
            bool closes = false;
            for (int nb : adj[static_cast<std::size_t>(path.back())]) closes |= (nb == 0);
            if (closes && complement_is_cycle(path)) {
                TorusCycle c1, c2;
                for (int i : path) c1.push_back(coord(i));
                std::vector<char> on(static_cast<std::size_t>(cells) * cells, 0);
                for (std::size_t i = 0; i < path.size(); ++i) {
                    int u = path[i], v = path[(i + 1) % path.size()];
                    on[static_cast<std::size_t>(u) * cells + v] = 1;
                    on[static_cast<std::size_t>(v) * cells + u] = 1;
                }
                int prev = -1, cur = 0;
                do {
                    c2.push_back(coord(cur));
                    int next = -1;
                    for (int nb : adj[static_cast<std::size_t>(cur)])
                        if (nb != prev && !on[static_cast<std::size_t>(cur) * cells + nb]) { next = nb; break; }
                    prev = cur;
                    cur = next;
                } while (cur != 0);
                found = {std::move(c1), std::move(c2)};
                return true;
            }
            return false;
        }
        for (int nb : adj[static_cast<std::size_t>(path.back())]) {
            if (in_path[static_cast<std::size_t>(nb)]) continue;
            path.push_back(nb);
            in_path[static_cast<std::size_t>(nb)] = 1;
            if (self(self)) return true;
            in_path[static_cast<std::size_t>(nb)] = 0;
            path.pop_back();
        }
        return false;
    };
    dfs(dfs);
    return found;
}

}  // namespace torus_detail

// Two edge-disjoint Hamiltonian cycles whose union is all 2ab edges of
// C_a x C_b. Verified before returning; sizes without a construction raise
// unsupported_instance rather than guessing.
inline std::pair<TorusCycle, TorusCycle> kotzig_torus(int a, int b) {
    if (a < 3 || b < 3) throw std::invalid_argument("kotzig_torus: need a, b >= 3");
    std::pair<TorusCycle, TorusCycle> out;
    if (a % 2 == 0 && b % 2 == 0) {
        out = {torus_detail::staircase(a, b, 0), torus_detail::staircase(a, b, 1)};
    } else if (a * b <= 64) {
        auto found = torus_detail::small_torus_search(a, b);
        if (!found) throw unsupported_instance("kotzig_torus: no decomposition found within bounds");
        out = *found;
    } else {
        throw unsupported_instance("kotzig_torus: odd sizes above the search cap");
    }
    TorusDecomposition d;
    d.width = a;
    d.height = b;
    d.cycles = {out.first, out.second};
    d.set_of = {0, 1};
    VerificationReport r = check_torus_decomposition(d);
    if (!r.ok() || out.first.size() != static_cast<std::size_t>(a) * b ||
        out.second.size() != static_cast<std::size_t>(a) * b)
        throw unsupported_instance("kotzig_torus: construction failed self-verification");
    return out;
}

}  // namespace hqd
