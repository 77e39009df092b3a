#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

// Data-parallel inner loops behind the analyzer. Each kernel has a scalar
// reference implementation and, where the build targets support them, SIMD
// variants selected at runtime. All variants produce bit-identical results;
// the equivalence is exercised by the test suite.
namespace sdc::kernels {

// Weight histogram of every codeword in a set of scan blocks. A block is a
// coset seed plus the full Gray-code walk over the k_low low rows; the row
// XOR'd at step s is low_rows[countr_zero(s)]. hist must hold n+1 entries
// and is accumulated into.
//
// 64-bit codewords: rows/seeds are one word each.
using ScanHist64Fn = void (*)(const uint64_t* low_rows, int k_low,
                              const uint64_t* seeds, size_t nseeds, uint64_t* hist);
// 128-bit codewords: rows/seeds are word pairs.
using ScanHist128Fn = void (*)(const uint64_t* low_rows, int k_low,
                               const uint64_t* seeds, size_t nseeds, uint64_t* hist);

// Number of pairs (i, j), begin <= i < end, i < j < total, with
// popcount((w0[i]^w0[j])) + popcount((w1[i]^w1[j])) == target.
using PairCountFn = uint64_t (*)(const uint64_t* w0, const uint64_t* w1,
                                 size_t begin, size_t end, size_t total,
                                 unsigned target);

struct Dispatch {
    const char* name;
    ScanHist64Fn scan_hist64;
    ScanHist128Fn scan_hist128;
    PairCountFn pair_count;
};

const Dispatch& scalar();
const Dispatch& active();

// "auto" (default), "scalar", or a SIMD variant name from available().
// Unknown names throw. The SDF_KERNEL environment variable, when set,
// provides the initial selection.
void force(const std::string& name);
std::vector<std::string> available();

}  // namespace sdc::kernels
