// The two explicit base-case decompositions, shipped verbatim: Q4 into four
// 8-cycles and Q6 into six 32-cycles. Cycles are stored in the listed vertex
// order (first vertex not repeated); rotation/reversal equivalence is handled
// only by comparison helpers.
#pragma once

#include <array>
#include <sstream>
#include <string>

#include "hqd/cycles.hpp"

namespace hqd {

namespace detail {

inline CycleSeq cycle_from_strings(int n, const char* listing) {
    CycleSeq c;
    c.host_n = n;
    std::istringstream in(listing);
    std::string tok;
    while (in >> tok) c.vertices.push_back(label_from_string(tok));
    return c;
}

}  // namespace detail

// Q4 = four cycles of length 8; partition sets {R0, R1} and {B0, B1}.
inline PartitionedDecomposition q4_certificate() {
    static const PartitionedDecomposition d = [] {
        PartitionedDecomposition q4;
        q4.host_n = 4;
        q4.cycle_length = 8;
        q4.cycles = {
            detail::cycle_from_strings(4, "0000 0100 0101 1101 1100 1000 1001 0001"),  // R0
            detail::cycle_from_strings(4, "0011 0111 0110 1110 1111 1011 1010 0010"),  // R1
            detail::cycle_from_strings(4, "0000 0010 0110 0100 1100 1110 1010 1000"),  // B0
            detail::cycle_from_strings(4, "0011 0001 0101 0111 1111 1101 1001 1011"),  // B1
        };
        q4.set_of = {0, 0, 1, 1};
        return q4;
    }();
    return d;
}

// Q6 = six cycles of length 32; partition sets {C1, C2}, {B1, Y1}, {B2, Y2}.
inline PartitionedDecomposition q6_certificate() {
    static const PartitionedDecomposition d = [] {
        const char* c1 =
            "011000 011010 011110 001110 001010 101010 101110 111110 "
            "111010 111011 111111 101111 101011 001011 001111 011111 "
            "011011 011001 011101 001101 001001 101001 101101 111101 "
            "111001 111000 111100 101100 101000 001000 001100 011100";
        const char* c2 =
            "010100 010110 010010 000010 000110 100110 100010 110010 "
            "110110 110111 110011 100011 100111 000111 000011 010011 "
            "010111 010101 010001 000001 000101 100101 100001 110001 "
            "110101 110100 110000 100000 100100 000100 000000 010000";
        const char* b1 =
            "010110 010111 011111 011101 011100 111100 111101 111111 "
            "110111 110101 010101 000101 000111 001111 001101 001100 "
            "101100 101101 101111 100111 100101 100100 110100 010100 "
            "000100 000110 001110 101110 100110 110110 111110 011110";
        const char* b2 =
            "010110 110110 110100 111100 111110 111111 011111 011110 "
            "011100 010100 010101 011101 111101 110101 100101 101101 "
            "001101 000101 000100 001100 001110 001111 101111 101110 "
            "101100 100100 100110 100111 110111 010111 000111 000110";
        const char* y1 =
            "011010 011011 010011 010001 010000 110000 110001 110011 "
            "111011 111001 011001 001001 001011 000011 000001 000000 "
            "100000 100001 100011 101011 101001 101000 111000 011000 "
            "001000 001010 000010 100010 101010 111010 110010 010010";
        const char* y2 =
            "011010 111010 111000 110000 110010 110011 010011 010010 "
            "010000 011000 011001 010001 110001 111001 101001 100001 "
            "000001 001001 001000 000000 000010 000011 100011 100010 "
            "100000 101000 101010 101011 111011 011011 001011 001010";
        PartitionedDecomposition q6;
        q6.host_n = 6;
        q6.cycle_length = 32;
        q6.cycles = {
            detail::cycle_from_strings(6, c1), detail::cycle_from_strings(6, c2),
            detail::cycle_from_strings(6, b1), detail::cycle_from_strings(6, b2),
            detail::cycle_from_strings(6, y1), detail::cycle_from_strings(6, y2),
        };
        q6.set_of = {0, 0, 1, 2, 1, 2};
        return q6;
    }();
    return d;
}

}  // namespace hqd
