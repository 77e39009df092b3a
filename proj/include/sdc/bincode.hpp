#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace sdc {

// Bit-packed binary generator matrix, kept in reduced (canonical) form:
// rank = k, pivot columns recorded as the first information set.
struct BinaryCode {
    size_t n = 0;    // length
    size_t k = 0;    // dimension
    size_t wpr = 0;  // 64-bit words per row
    std::vector<uint64_t> words;    // k * wpr
    std::vector<uint32_t> pivots;   // k pivot columns, increasing

    const uint64_t* row(size_t i) const { return words.data() + i * wpr; }
    uint64_t* row(size_t i) { return words.data() + i * wpr; }
    bool get(size_t r, size_t c) const { return row(r)[c >> 6] >> (c & 63) & 1; }
};

// Gaussian elimination over GF(2); rejects an all-zero row set.
BinaryCode rank_and_systematize(size_t n, const std::vector<uint64_t>& raw_rows,
                                size_t nrows, size_t wpr);

// One row per line of '0'/'1' characters.
BinaryCode load_matrix_text(std::istream& in);
std::string save_matrix_text(const BinaryCode& c);

int row_weight(const uint64_t* row, size_t wpr);

// G G^T = 0 and k = n/2.
bool is_self_dual_binary(const BinaryCode& c);

}  // namespace sdc
