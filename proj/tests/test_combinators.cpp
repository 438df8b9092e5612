#include <doctest.h>

#include <set>

#include "hqd/certificates.hpp"
#include "hqd/combinators.hpp"
#include "hqd/drivers.hpp"

using namespace hqd;

namespace {

EdgeSet full_edge_set(int n) {
    EdgeSet s;
    for (const Edge& e : hypercube_edges(n)) s.push_back(edge_key(e.a, e.b));
    std::sort(s.begin(), s.end());
    return s;
}

SpanningPart part_of_cycles(int n, std::initializer_list<const CycleSeq*> cycles) {
    SpanningPart p;
    p.host_n = n;
    for (const CycleSeq* c : cycles) {
        auto keys = cycle_edge_keys(*c);
        p.edges.insert(p.edges.end(), keys.begin(), keys.end());
    }
    std::sort(p.edges.begin(), p.edges.end());
    return p;
}

bool partitions(const std::vector<EdgeSet>& parts, const EdgeSet& whole) {
    EdgeSet all;
    for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end());
    return all == whole;
}

}  // namespace

TEST_CASE("spanning_product with one part gives the whole product") {
    CycleSeq c4{2, gray_cycle(2)};
    SpanningPart g = part_of_cycles(2, {&c4});
    auto parts = spanning_product({g}, {g}, ProductEmbedding{2, 2});
    CHECK(parts.size() == 1);
    CHECK(parts[0].size() == 32);
    CHECK(parts[0] == full_edge_set(4));
}

TEST_CASE("spanning_product splits Q8 into two torus edge sets") {
    PartitionedDecomposition ham4 = ham_decompose(4);
    SpanningPart a1 = part_of_cycles(4, {&ham4.cycles[0]});
    SpanningPart a2 = part_of_cycles(4, {&ham4.cycles[1]});
    auto parts = spanning_product({a1, a2}, {a1, a2}, ProductEmbedding{4, 4});
    CHECK(parts.size() == 2);
    CHECK(parts[0].size() == 512);
    CHECK(parts[1].size() == 512);
    CHECK(partitions(parts, full_edge_set(8)));
    CHECK_THROWS_AS(spanning_product({a1}, {a1, a2}, ProductEmbedding{4, 4}),
                    std::invalid_argument);
}

TEST_CASE("one_set_product splits by cycle ownership") {
    PartitionedDecomposition q4 = q4_certificate();
    EdgeSet c4_edges;
    for (int j = 0; j < 4; ++j) c4_edges.push_back(edge_key(gray2(j), gray2((j + 1) % 4)));
    std::sort(c4_edges.begin(), c4_edges.end());

    SUBCASE("single Hamiltonian cycle takes all of E(C [] C4)") {
        PartitionedDecomposition ham4 = ham_decompose(4);
        auto parts = one_set_product({ham4.cycles[0]}, c4_edges, ProductEmbedding{4, 2});
        CHECK(parts.size() == 1);
        // a 16-cycle times C4 is 4-regular on 64 vertices: 128 edges
        CHECK(parts[0].size() == 128);
        ProductEmbedding e{4, 2};
        EdgeSet expected;
        for (auto k : cycle_edge_keys(ham4.cycles[0])) {
            Vertex u = static_cast<Vertex>(k & 0xffffffffu), v = static_cast<Vertex>(k >> 32);
            for (int j = 0; j < 4; ++j)
                expected.push_back(edge_key(e.map(u, gray2(j)), e.map(v, gray2(j))));
        }
        for (Vertex u = 0; u < 16; ++u)
            for (int j = 0; j < 4; ++j)
                expected.push_back(edge_key(e.map(u, gray2(j)), e.map(u, gray2((j + 1) % 4))));
        std::sort(expected.begin(), expected.end());
        CHECK(parts[0] == expected);
    }

    SUBCASE("the red set of q4 yields two parts, each a C8 x C4 edge set") {
        auto parts = one_set_product({q4.cycles[0], q4.cycles[1]}, c4_edges,
                                     ProductEmbedding{4, 2});
        CHECK(parts.size() == 2);
        // each R^j [] C4 is the 4-regular torus C8 x C4: 64 edges
        CHECK(parts[0].size() == 64);
        CHECK(parts[1].size() == 64);

        // horizontal edge uu' at level v belongs to the part owning uu';
        // vertical edges follow the cycle containing u
        ProductEmbedding e{4, 2};
        Vertex u = q4.cycles[0].vertices[0], u2 = q4.cycles[0].vertices[1];
        std::uint64_t horiz = edge_key(e.map(u, gray2(2)), e.map(u2, gray2(2)));
        CHECK(std::binary_search(parts[0].begin(), parts[0].end(), horiz));
        std::uint64_t vert = edge_key(e.map(u, gray2(0)), e.map(u, gray2(1)));
        CHECK(std::binary_search(parts[0].begin(), parts[0].end(), vert));
        CHECK_FALSE(std::binary_search(parts[1].begin(), parts[1].end(), horiz));
    }

    SUBCASE("non-partitioning family is rejected") {
        CHECK_THROWS_AS(one_set_product({q4.cycles[0]}, c4_edges, ProductEmbedding{4, 2}),
                        std::invalid_argument);
    }
}

TEST_CASE("compose_partitionable is the identity on a single part") {
    PartitionedDecomposition q4 = q4_certificate();
    PartitionedDecomposition composed = compose_partitionable({q4});
    CHECK(composed == q4);
}

TEST_CASE("compose_partitionable sums partition sets") {
    PartitionedDecomposition q4 = q4_certificate();
    PartitionedDecomposition red, blue;
    red.host_n = blue.host_n = 4;
    red.cycle_length = blue.cycle_length = 8;
    red.cycles = {q4.cycles[0], q4.cycles[1]};
    red.set_of = {0, 0};
    blue.cycles = {q4.cycles[2], q4.cycles[3]};
    blue.set_of = {0, 0};
    PartitionedDecomposition composed = compose_partitionable({red, blue});
    CHECK(composed.num_sets() == 2);
    CHECK(check_certificate(composed).ok());
}

TEST_CASE("ham_pair_product turns the Q4 pair and C4 into three Hamiltonian cycles of Q6") {
    PartitionedDecomposition ham4 = ham_decompose(4);
    HamPair pair{ham4.cycles[0], ham4.cycles[1]};
    auto three = ham_pair_product(pair, 4, ProductEmbedding{4, 2});

    std::set<std::uint64_t> all;
    for (const auto& c : three) {
        CHECK(c.vertices.size() == 64);
        CHECK(check_cycle(c).ok());
        std::set<Vertex> verts(c.vertices.begin(), c.vertices.end());
        CHECK(verts.size() == 64);
        for (auto k : cycle_edge_keys(c)) CHECK(all.insert(k).second);
    }
    CHECK(all.size() == 192);  // exactly E(Q6): the pair decomposes Q4

    EdgeSet whole = full_edge_set(6);
    CHECK(std::equal(all.begin(), all.end(), whole.begin(), whole.end()));
}

TEST_CASE("ham_pair_product handles a torus pair: C8 x C8 times C4") {
    // embed C8 x C8 into Q6 through Gray labels on each factor
    auto g3 = gray_cycle(3);
    auto [t1, t2] = kotzig_torus(8, 8);
    auto to_cycle = [&](const TorusCycle& tc) {
        CycleSeq c;
        c.host_n = 6;
        for (TorusCoord p : tc)
            c.vertices.push_back(g3[static_cast<std::size_t>(p.x)] |
                                 (g3[static_cast<std::size_t>(p.y)] << 3));
        return c;
    };
    HamPair pair{to_cycle(t1), to_cycle(t2)};
    auto three = ham_pair_product(pair, 4, ProductEmbedding{6, 2});

    // expected edge set: the torus edges at all four levels plus all verticals
    ProductEmbedding e{6, 2};
    std::set<std::uint64_t> expected;
    for (const CycleSeq* c : {&pair.first, &pair.second})
        for (std::size_t i = 0; i < c->vertices.size(); ++i)
            for (int j = 0; j < 4; ++j)
                expected.insert(edge_key(e.map(c->vertices[i], gray2(j)),
                                         e.map(c->vertices[(i + 1) % 64], gray2(j))));
    for (Vertex u = 0; u < 64; ++u)
        for (int j = 0; j < 4; ++j)
            expected.insert(edge_key(e.map(u, gray2(j)), e.map(u, gray2((j + 1) % 4))));
    CHECK(expected.size() == 3 * 64 * 4);

    std::set<std::uint64_t> got;
    for (const auto& c : three) {
        CHECK(c.vertices.size() == 256);
        for (auto k : cycle_edge_keys(c)) CHECK(got.insert(k).second);
    }
    CHECK(got == expected);
}

TEST_CASE("hh_product on q4 and the Q4 Hamiltonian pair decomposes Q8") {
    PartitionedDecomposition g = q4_certificate();
    std::vector<CycleSeq> h = ham_decompose(4).cycles;
    PartitionedDecomposition d = hh_product(g, h, ProductEmbedding{4, 4});
    CHECK(d.host_n == 8);
    CHECK(d.cycle_length == 128);
    CHECK(d.cycles.size() == 8);
    CHECK(d.num_sets() == 4);
    CHECK(check_certificate(d).ok());
}

TEST_CASE("hh_product builds a Hamiltonian decomposition of Q8 from two Q4 pairs") {
    PartitionedDecomposition ham4 = ham_decompose(4);
    PartitionedDecomposition g;
    g.host_n = 4;
    g.cycle_length = 16;
    g.cycles = ham4.cycles;
    g.set_of = {0, 1};  // two one-cycle sets
    PartitionedDecomposition d = hh_product(g, ham4.cycles, ProductEmbedding{4, 4});
    CHECK(d.cycles.size() == 4);
    CHECK(d.cycle_length == 256);
    CHECK(d.num_sets() == 4);
    CHECK(check_certificate(d).ok());
}

TEST_CASE("hh_product rejects arity violations") {
    PartitionedDecomposition g = q4_certificate();  // m = 2
    std::vector<CycleSeq> h1 = {ham_decompose(4).cycles[0]};
    CHECK_THROWS_AS(hh_product(g, h1, ProductEmbedding{4, 4}), std::invalid_argument);
}

TEST_CASE("ham_pair_product rejects a pair sharing an edge") {
    PartitionedDecomposition ham4 = ham_decompose(4);
    HamPair bad{ham4.cycles[0], ham4.cycles[0]};
    CHECK_THROWS_AS(ham_pair_product(bad, 4, ProductEmbedding{4, 2}), std::invalid_argument);
}

TEST_CASE("cart_times_c4 rejects malformed inputs") {
    PartitionedDecomposition g = q4_certificate();
    CHECK_THROWS_AS(cart_times_c4(g, ProductEmbedding{4, 3}), std::invalid_argument);
    CHECK_THROWS_AS(cart_times_c4(g, ProductEmbedding{6, 2}), std::invalid_argument);
}

TEST_CASE("cart_times_c4 grows Q2 into eight 4-cycles of Q4") {
    PartitionedDecomposition g = ham_decompose(2);  // one 4-cycle, one set
    PartitionedDecomposition d = cart_times_c4(g, ProductEmbedding{2, 2});
    CHECK(d.host_n == 4);
    CHECK(d.cycle_length == 4);
    CHECK(d.cycles.size() == 8);
    CHECK(d.num_sets() == 2);
    CHECK(check_certificate(d).ok());
}

TEST_CASE("cart_times_c4 grows q4 into 24 length-8 cycles of Q6") {
    PartitionedDecomposition d = cart_times_c4(q4_certificate(), ProductEmbedding{4, 2});
    CHECK(d.host_n == 6);
    CHECK(d.cycle_length == 8);
    CHECK(d.cycles.size() == 24);
    CHECK(d.num_sets() == 3);
    CHECK(check_certificate(d).ok());
}

TEST_CASE("combinator outputs satisfy the edge-count scaling identity") {
    PartitionedDecomposition d = cart_times_c4(q4_certificate(), ProductEmbedding{4, 2});
    CHECK(d.cycles.size() * d.cycle_length ==
          hypercube_edges(d.host_n).size());
}
