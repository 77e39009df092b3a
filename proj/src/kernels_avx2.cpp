// AVX2 variants. Four scan blocks (or four pair candidates) ride in the
// four 64-bit lanes of a ymm register; popcounts use the nibble-LUT pshufb
// trick folded to per-lane byte sums with vpsadbw.

#include <immintrin.h>

#include <bit>

#include "sdc/kernels.hpp"

namespace sdc::kernels {

namespace {

inline __m256i popcnt_epi64(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

void scan_hist64_scalar_tail(const uint64_t* low_rows, int k_low, const uint64_t* seeds,
                             size_t nseeds, uint64_t* hist) {
    const uint64_t steps = uint64_t(1) << k_low;
    for (size_t b = 0; b < nseeds; ++b) {
        uint64_t cur = seeds[b];
        ++hist[std::popcount(cur)];
        for (uint64_t s = 1; s < steps; ++s) {
            cur ^= low_rows[std::countr_zero(s)];
            ++hist[std::popcount(cur)];
        }
    }
}

void scan_hist128_scalar_tail(const uint64_t* low_rows, int k_low, const uint64_t* seeds,
                              size_t nseeds, uint64_t* hist) {
    const uint64_t steps = uint64_t(1) << k_low;
    for (size_t b = 0; b < nseeds; ++b) {
        uint64_t lo = seeds[2 * b], hi = seeds[2 * b + 1];
        ++hist[std::popcount(lo) + std::popcount(hi)];
        for (uint64_t s = 1; s < steps; ++s) {
            int r = std::countr_zero(s);
            lo ^= low_rows[2 * r];
            hi ^= low_rows[2 * r + 1];
            ++hist[std::popcount(lo) + std::popcount(hi)];
        }
    }
}

}  // namespace

void scan_hist64_avx2(const uint64_t* low_rows, int k_low, const uint64_t* seeds,
                      size_t nseeds, uint64_t* hist) {
    const uint64_t steps = uint64_t(1) << k_low;
    size_t b = 0;
    alignas(32) uint64_t w[4];
    for (; b + 4 <= nseeds; b += 4) {
        __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(seeds + b));
        _mm256_store_si256(reinterpret_cast<__m256i*>(w), popcnt_epi64(cur));
        ++hist[w[0]]; ++hist[w[1]]; ++hist[w[2]]; ++hist[w[3]];
        for (uint64_t s = 1; s < steps; ++s) {
            __m256i row = _mm256_set1_epi64x(int64_t(low_rows[std::countr_zero(s)]));
            cur = _mm256_xor_si256(cur, row);
            _mm256_store_si256(reinterpret_cast<__m256i*>(w), popcnt_epi64(cur));
            ++hist[w[0]]; ++hist[w[1]]; ++hist[w[2]]; ++hist[w[3]];
        }
    }
    scan_hist64_scalar_tail(low_rows, k_low, seeds + b, nseeds - b, hist);
}

void scan_hist128_avx2(const uint64_t* low_rows, int k_low, const uint64_t* seeds,
                       size_t nseeds, uint64_t* hist) {
    const uint64_t steps = uint64_t(1) << k_low;
    size_t b = 0;
    alignas(32) uint64_t w[4];
    for (; b + 4 <= nseeds; b += 4) {
        // lane i of lo/hi = block b+i
        __m256i lo = _mm256_setr_epi64x(int64_t(seeds[2 * b]), int64_t(seeds[2 * b + 2]),
                                        int64_t(seeds[2 * b + 4]), int64_t(seeds[2 * b + 6]));
        __m256i hi = _mm256_setr_epi64x(int64_t(seeds[2 * b + 1]), int64_t(seeds[2 * b + 3]),
                                        int64_t(seeds[2 * b + 5]), int64_t(seeds[2 * b + 7]));
        __m256i wt = _mm256_add_epi64(popcnt_epi64(lo), popcnt_epi64(hi));
        _mm256_store_si256(reinterpret_cast<__m256i*>(w), wt);
        ++hist[w[0]]; ++hist[w[1]]; ++hist[w[2]]; ++hist[w[3]];
        for (uint64_t s = 1; s < steps; ++s) {
            int r = std::countr_zero(s);
            lo = _mm256_xor_si256(lo, _mm256_set1_epi64x(int64_t(low_rows[2 * r])));
            hi = _mm256_xor_si256(hi, _mm256_set1_epi64x(int64_t(low_rows[2 * r + 1])));
            wt = _mm256_add_epi64(popcnt_epi64(lo), popcnt_epi64(hi));
            _mm256_store_si256(reinterpret_cast<__m256i*>(w), wt);
            ++hist[w[0]]; ++hist[w[1]]; ++hist[w[2]]; ++hist[w[3]];
        }
    }
    scan_hist128_scalar_tail(low_rows, k_low, seeds + 2 * b, nseeds - b, hist);
}

uint64_t pair_count_avx2(const uint64_t* w0, const uint64_t* w1, size_t begin,
                         size_t end, size_t total, unsigned target) {
    uint64_t count = 0;
    const __m256i tgt = _mm256_set1_epi64x(int64_t(target));
    for (size_t i = begin; i < end; ++i) {
        const __m256i a0 = _mm256_set1_epi64x(int64_t(w0[i]));
        const __m256i a1 = _mm256_set1_epi64x(int64_t(w1[i]));
        size_t j = i + 1;
        for (; j + 4 <= total; j += 4) {
            __m256i x0 = _mm256_xor_si256(a0, _mm256_loadu_si256(
                                                  reinterpret_cast<const __m256i*>(w0 + j)));
            __m256i x1 = _mm256_xor_si256(a1, _mm256_loadu_si256(
                                                  reinterpret_cast<const __m256i*>(w1 + j)));
            __m256i d = _mm256_add_epi64(popcnt_epi64(x0), popcnt_epi64(x1));
            unsigned m = unsigned(_mm256_movemask_pd(
                _mm256_castsi256_pd(_mm256_cmpeq_epi64(d, tgt))));
            count += std::popcount(m);
        }
        for (; j < total; ++j) {
            unsigned d = unsigned(std::popcount(w0[i] ^ w0[j]) + std::popcount(w1[i] ^ w1[j]));
            count += (d == target);
        }
    }
    return count;
}

const Dispatch& avx2() {
    static const Dispatch d{"avx2", scan_hist64_avx2, scan_hist128_avx2, pair_count_avx2};
    return d;
}

}  // namespace sdc::kernels
