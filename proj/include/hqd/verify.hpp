// Independent certificate checker. Consumes only the certificate and n,
// never intermediate construction state; reports every failure instead of
// stopping at the first.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hqd/cycles.hpp"
#include "hqd/hypercube.hpp"

namespace hqd {

struct VerificationReport {
    struct Failure {
        std::string check;   // stable category, e.g. "decomposition.coverage"
        std::string detail;  // offending cycle/edge/vertex
    };
    std::vector<Failure> failures;

    bool ok() const { return failures.empty(); }
    void fail(std::string check, std::string detail) {
        failures.push_back({std::move(check), std::move(detail)});
    }
    void merge(const VerificationReport& other) {
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
};

namespace check {
inline constexpr const char* cycle_range = "cycle.range";
inline constexpr const char* cycle_distinctness = "cycle.distinctness";
inline constexpr const char* cycle_length = "cycle.length";
inline constexpr const char* cycle_adjacency = "cycle.adjacency";
inline constexpr const char* decomposition_length = "decomposition.cycle-length";
inline constexpr const char* decomposition_coverage = "decomposition.coverage";
inline constexpr const char* decomposition_disjointness = "decomposition.disjointness";
inline constexpr const char* partition_set_ids = "partition.set-ids";
inline constexpr const char* partition_overlap = "partition.overlap";
inline constexpr const char* partition_coverage = "partition.coverage";
}  // namespace check

inline VerificationReport check_cycle(const CycleSeq& c) {
    VerificationReport r;
    const auto& v = c.vertices;
    if (c.host_n < 1 || c.host_n > kMaxDim) {
        r.fail(check::cycle_range, "host dimension " + std::to_string(c.host_n));
        return r;
    }
    for (Vertex x : v)
        if (x >= vertex_count(c.host_n))
            r.fail(check::cycle_range, "vertex " + std::to_string(x));
    if (!r.ok()) return r;

    if (v.size() < 4 || v.size() % 2 != 0)
        r.fail(check::cycle_length, "length " + std::to_string(v.size()));
    std::vector<Vertex> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            r.fail(check::cycle_distinctness, "vertex " + std::to_string(sorted[i]) + " repeated");
    for (std::size_t i = 0; i < v.size(); ++i) {
        Vertex a = v[i], b = v[(i + 1) % v.size()];
        if (std::popcount(a ^ b) != 1)
            r.fail(check::cycle_adjacency,
                   std::to_string(a) + "-" + std::to_string(b) + " differ in " +
                       std::to_string(std::popcount(a ^ b)) + " coordinates");
    }
    return r;
}

// All cycles valid, uniform power-of-two length, and the edge multiset equals
// hypercube_edges(n) exactly.
inline VerificationReport check_decomposition(const PartitionedDecomposition& d) {
    VerificationReport r;
    if (d.host_n < 1 || d.host_n > kMaxDim) {
        r.fail(check::cycle_range, "host dimension " + std::to_string(d.host_n));
        return r;
    }
    for (std::size_t i = 0; i < d.cycles.size(); ++i) {
        VerificationReport rc = check_cycle(d.cycles[i]);
        for (auto& f : rc.failures) f.detail = "cycle " + std::to_string(i) + ": " + f.detail;
        r.merge(rc);
        if (d.cycles[i].host_n != d.host_n)
            r.fail(check::cycle_range, "cycle " + std::to_string(i) + ": host mismatch");
    }
    if (d.cycle_length < 4 || (d.cycle_length & (d.cycle_length - 1)) != 0)
        r.fail(check::decomposition_length,
               "cycle_length " + std::to_string(d.cycle_length) + " is not a power of two >= 4");
    for (std::size_t i = 0; i < d.cycles.size(); ++i)
        if (d.cycles[i].length() != d.cycle_length)
            r.fail(check::decomposition_length,
                   "cycle " + std::to_string(i) + " has length " +
                       std::to_string(d.cycles[i].length()));

    std::map<std::uint64_t, int> count;
    for (const auto& c : d.cycles)
        for (std::uint64_t k : cycle_edge_keys(c)) ++count[k];
    std::size_t missing = 0, duplicated = 0;
    for (const Edge& e : hypercube_edges(d.host_n)) {
        auto it = count.find(edge_key(e.a, e.b));
        if (it == count.end()) {
            ++missing;
        } else {
            if (it->second > 1) ++duplicated;
            count.erase(it);
        }
    }
    if (missing)
        r.fail(check::decomposition_coverage, std::to_string(missing) + " missing edges");
    if (duplicated)
        r.fail(check::decomposition_disjointness,
               std::to_string(duplicated) + " edges covered more than once");
    if (!count.empty())
        r.fail(check::decomposition_coverage,
               std::to_string(count.size()) + " edges outside the host edge set");
    return r;
}

// Within each partition set, member cycles' vertex sets are pairwise disjoint
// and union to all 2^n vertices.
inline VerificationReport check_partitionable(const PartitionedDecomposition& d) {
    VerificationReport r;
    if (d.host_n < 1 || d.host_n > kMaxDim) {
        r.fail(check::cycle_range, "host dimension " + std::to_string(d.host_n));
        return r;
    }
    if (d.set_of.size() != d.cycles.size()) {
        r.fail(check::partition_set_ids, "set_of size mismatch");
        return r;
    }
    int sets = d.num_sets();
    for (std::size_t i = 0; i < d.set_of.size(); ++i)
        if (d.set_of[i] < 0)
            r.fail(check::partition_set_ids, "cycle " + std::to_string(i) + " has negative set id");
    if (!r.ok()) return r;

    std::vector<std::vector<int>> seen(static_cast<std::size_t>(sets),
                                       std::vector<int>(vertex_count(d.host_n), 0));
    for (std::size_t i = 0; i < d.cycles.size(); ++i)
        for (Vertex v : d.cycles[i].vertices)
            if (v < vertex_count(d.host_n)) ++seen[static_cast<std::size_t>(d.set_of[i])][v];
    for (int s = 0; s < sets; ++s) {
        std::size_t over = 0, under = 0;
        for (int c : seen[static_cast<std::size_t>(s)]) {
            if (c > 1) ++over;
            if (c == 0) ++under;
        }
        if (over)
            r.fail(check::partition_overlap, "set " + std::to_string(s) + ": " +
                                                 std::to_string(over) + " vertices repeated");
        if (under)
            r.fail(check::partition_coverage, "set " + std::to_string(s) + ": " +
                                                  std::to_string(under) + " vertices uncovered");
    }
    return r;
}

// The acceptance gate: a certificate passing all three checks satisfies the
// partitionable-decomposition statement for its (n, 2^i).
inline VerificationReport check_certificate(const PartitionedDecomposition& d) {
    VerificationReport r = check_decomposition(d);
    r.merge(check_partitionable(d));
    return r;
}

}  // namespace hqd
