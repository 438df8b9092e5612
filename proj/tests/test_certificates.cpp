#include <doctest.h>

#include <map>
#include <set>

#include "hqd/certificates.hpp"
#include "hqd/verify.hpp"

using namespace hqd;

TEST_CASE("q4 certificate matches the shipped listing") {
    PartitionedDecomposition q4 = q4_certificate();
    CHECK(q4.host_n == 4);
    CHECK(q4.cycle_length == 8);
    CHECK(q4.cycles.size() == 4);
    CHECK(q4.num_sets() == 2);
    CHECK(q4.set_of == std::vector<int>{0, 0, 1, 1});

    std::vector<Vertex> r0 = {0, 2, 10, 11, 3, 1, 9, 8};
    CHECK(q4.cycles[0].vertices == r0);

    std::size_t edges = 0;
    for (const auto& c : q4.cycles) edges += c.length();
    CHECK(edges == 32);
}

TEST_CASE("q4 certificate passes the verifier") {
    PartitionedDecomposition q4 = q4_certificate();
    CHECK(check_decomposition(q4).ok());
    CHECK(check_partitionable(q4).ok());
    for (const auto& c : q4.cycles) CHECK(check_cycle(c).ok());
}

TEST_CASE("q6 certificate shape and verifier pass") {
    PartitionedDecomposition q6 = q6_certificate();
    CHECK(q6.host_n == 6);
    CHECK(q6.cycle_length == 32);
    CHECK(q6.cycles.size() == 6);
    CHECK(q6.num_sets() == 3);

    // C1 starts 011000, 011010, 011110
    CHECK(q6.cycles[0].vertices[0] == 6);
    CHECK(q6.cycles[0].vertices[1] == 22);
    CHECK(q6.cycles[0].vertices[2] == 30);

    CHECK(check_decomposition(q6).ok());
    CHECK(check_partitionable(q6).ok());
}

TEST_CASE("q6: every vertex lies in exactly three cycles, one per set") {
    PartitionedDecomposition q6 = q6_certificate();
    std::map<Vertex, std::set<int>> sets_of_vertex;
    std::map<Vertex, int> cycle_count;
    for (std::size_t i = 0; i < q6.cycles.size(); ++i)
        for (Vertex v : q6.cycles[i].vertices) {
            sets_of_vertex[v].insert(q6.set_of[i]);
            ++cycle_count[v];
        }
    CHECK(sets_of_vertex.size() == 64);
    for (auto& [v, sets] : sets_of_vertex) {
        CHECK(cycle_count[v] == 3);
        CHECK(sets == std::set<int>{0, 1, 2});
    }
}

TEST_CASE("cycle comparison is invariant under rotation and reversal") {
    // deterministic LCG; no external randomness
    std::uint64_t state = 0x2545f4914f6cdd1dULL;
    auto next = [&state](std::uint64_t bound) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::size_t>((state >> 33) % bound);
    };
    PartitionedDecomposition q6 = q6_certificate();
    for (int trial = 0; trial < 200; ++trial) {
        const CycleSeq& base = q6.cycles[next(q6.cycles.size())];
        CycleSeq tweaked = base;
        std::rotate(tweaked.vertices.begin(),
                    tweaked.vertices.begin() + static_cast<long>(next(base.length())),
                    tweaked.vertices.end());
        if (next(2)) std::reverse(tweaked.vertices.begin(), tweaked.vertices.end());
        CHECK(same_cycle(base, tweaked));
        CHECK(canonical_rotation(tweaked) == canonical_rotation(base));
    }
    CHECK_FALSE(same_cycle(q6.cycles[0], q6.cycles[1]));
}

TEST_CASE("q6: the B and Y pairs re-cover edges disjoint from C1 u C2") {
    PartitionedDecomposition q6 = q6_certificate();
    auto keys_of = [&](std::initializer_list<int> idx) {
        std::set<std::uint64_t> s;
        for (int i : idx)
            for (auto k : cycle_edge_keys(q6.cycles[static_cast<std::size_t>(i)])) s.insert(k);
        return s;
    };
    std::set<std::uint64_t> c = keys_of({0, 1}), b = keys_of({2, 3}), y = keys_of({4, 5});
    CHECK(c.size() == 64);
    CHECK(b.size() == 64);
    CHECK(y.size() == 64);
    for (auto k : b) {
        CHECK(c.count(k) == 0);
        CHECK(y.count(k) == 0);
    }
    for (auto k : y) CHECK(c.count(k) == 0);
}
