// Top-level decomposition engines: Hamiltonian decomposition of Q_n, cycles
// of length 2^(n-1), and the main decompose(n, i) entry point.
#pragma once

#include "hqd/certificates.hpp"
#include "hqd/combinators.hpp"

namespace hqd {

struct DecompositionRequest {
    int n = 0;  // even, >= 2
    int i = 0;  // 2 <= i <= n, cycle length 2^i

    void validate() const {
        if (n < 2 || n % 2 != 0)
            throw std::invalid_argument("decompose: n must be even and >= 2");
        if (i < 2 || i > n) throw std::invalid_argument("decompose: need 2 <= i <= n");
        check_dim(n);
    }
};

// n/2 edge-disjoint Hamiltonian cycles of Q_n, one partition set each.
// n = 2 is the single 4-cycle, n = 4 the C_4 x C_4 torus pair; larger n
// splits Q_n = Q_2a [] Q_2b with a = floor(n/4), b = n/2 - a, so the
// one-cycle sets of Q_2a meet the arity condition a <= b <= 2a.
inline PartitionedDecomposition ham_decompose(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("ham_decompose: n must be even and >= 2");
    check_dim(n);
    PartitionedDecomposition out;
    out.host_n = n;
    out.cycle_length = vertex_count(n);
    if (n == 2) {
        CycleSeq c;
        c.host_n = 2;
        c.vertices = gray_cycle(2);
        out.cycles = {std::move(c)};
        out.set_of = {0};
    } else if (n == 4) {
        ProductEmbedding e{2, 2};
        auto [red, blue] = kotzig_torus(4, 4);
        for (const TorusCycle* tc : {&red, &blue}) {
            CycleSeq c;
            c.host_n = 4;
            for (TorusCoord p : *tc) c.vertices.push_back(e.map(gray2(p.x), gray2(p.y)));
            out.cycles.push_back(std::move(c));
        }
        out.set_of = {0, 1};
    } else {
        int a = n / 4, b = n / 2 - a;
        PartitionedDecomposition g = ham_decompose(2 * a);
        std::vector<CycleSeq> h = ham_decompose(2 * b).cycles;
        out = hh_product(g, h, ProductEmbedding{2 * a, 2 * b});
    }
    canonicalize_cycles(out);
    return out;
}

// Partitionable decomposition of Q_n into cycles of length 2^(n-1). Base
// cases are the shipped Q4 and Q6 certificates; for n >= 8 write
// n = 4m + 2i' and combine Q_2m (cycles of length 2^(2m-1), m sets of two)
// with the m + i' Hamiltonian cycles of Q_{2m+2i'}.
inline PartitionedDecomposition halfham_decompose(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("halfham_decompose: n must be even and >= 4");
    check_dim(n);
    if (n == 4) {
        PartitionedDecomposition d = q4_certificate();
        canonicalize_cycles(d);
        return d;
    }
    if (n == 6) {
        PartitionedDecomposition d = q6_certificate();
        canonicalize_cycles(d);
        return d;
    }
    int m = n / 4, iprime = (n % 4) / 2;
    PartitionedDecomposition g = halfham_decompose(2 * m);
    std::vector<CycleSeq> h = ham_decompose(2 * m + 2 * iprime).cycles;
    PartitionedDecomposition out = hh_product(g, h, ProductEmbedding{2 * m, 2 * m + 2 * iprime});
    canonicalize_cycles(out);
    return out;
}

// Partitionable decomposition of Q_n into cycles of length 2^i. The base is
// ham_decompose at n = i (i even) or halfham_decompose at n = i+1 (i odd);
// each further step appends a C_4 factor keeping the cycle length.
inline PartitionedDecomposition decompose(const DecompositionRequest& req) {
    req.validate();
    int base = req.i % 2 == 0 ? req.i : req.i + 1;
    PartitionedDecomposition d =
        req.i % 2 == 0 ? ham_decompose(base) : halfham_decompose(base);
    for (int n = base; n < req.n; n += 2) {
        d = cart_times_c4(d, ProductEmbedding{n, 2});
        canonicalize_cycles(d);
    }
    return d;
}

inline PartitionedDecomposition decompose(int n, int i) { return decompose(DecompositionRequest{n, i}); }

}  // namespace hqd
