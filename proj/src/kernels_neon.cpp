// NEON variants: two 64-bit lanes per q register, popcounts via vcntq_u8
// folded with pairwise adds. Mirrors the scalar reference step for step.

#include <arm_neon.h>

#include <bit>

#include "sdc/kernels.hpp"

namespace sdc::kernels {

namespace {

inline uint64x2_t popcnt_u64x2(uint64x2_t v) {
    return vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u64(v)))));
}

}  // namespace

void scan_hist64_neon(const uint64_t* low_rows, int k_low, const uint64_t* seeds,
                      size_t nseeds, uint64_t* hist) {
    const uint64_t steps = uint64_t(1) << k_low;
    size_t b = 0;
    for (; b + 2 <= nseeds; b += 2) {
        uint64x2_t cur = vld1q_u64(seeds + b);
        uint64x2_t w = popcnt_u64x2(cur);
        ++hist[vgetq_lane_u64(w, 0)];
        ++hist[vgetq_lane_u64(w, 1)];
        for (uint64_t s = 1; s < steps; ++s) {
            cur = veorq_u64(cur, vdupq_n_u64(low_rows[std::countr_zero(s)]));
            w = popcnt_u64x2(cur);
            ++hist[vgetq_lane_u64(w, 0)];
            ++hist[vgetq_lane_u64(w, 1)];
        }
    }
    if (b < nseeds) scalar().scan_hist64(low_rows, k_low, seeds + b, nseeds - b, hist);
}

void scan_hist128_neon(const uint64_t* low_rows, int k_low, const uint64_t* seeds,
                       size_t nseeds, uint64_t* hist) {
    const uint64_t steps = uint64_t(1) << k_low;
    for (size_t b = 0; b < nseeds; ++b) {
        uint64x2_t cur = vld1q_u64(seeds + 2 * b);  // (lo, hi) of one block
        uint64x2_t w = popcnt_u64x2(cur);
        ++hist[vgetq_lane_u64(w, 0) + vgetq_lane_u64(w, 1)];
        for (uint64_t s = 1; s < steps; ++s) {
            cur = veorq_u64(cur, vld1q_u64(low_rows + 2 * std::countr_zero(s)));
            w = popcnt_u64x2(cur);
            ++hist[vgetq_lane_u64(w, 0) + vgetq_lane_u64(w, 1)];
        }
    }
}

uint64_t pair_count_neon(const uint64_t* w0, const uint64_t* w1, size_t begin,
                         size_t end, size_t total, unsigned target) {
    uint64_t count = 0;
    for (size_t i = begin; i < end; ++i) {
        const uint64x2_t a0 = vdupq_n_u64(w0[i]);
        const uint64x2_t a1 = vdupq_n_u64(w1[i]);
        size_t j = i + 1;
        for (; j + 2 <= total; j += 2) {
            uint64x2_t d = vaddq_u64(popcnt_u64x2(veorq_u64(a0, vld1q_u64(w0 + j))),
                                     popcnt_u64x2(veorq_u64(a1, vld1q_u64(w1 + j))));
            count += (vgetq_lane_u64(d, 0) == target);
            count += (vgetq_lane_u64(d, 1) == target);
        }
        for (; j < total; ++j) {
            unsigned d = unsigned(std::popcount(w0[i] ^ w0[j]) + std::popcount(w1[i] ^ w1[j]));
            count += (d == target);
        }
    }
    return count;
}

const Dispatch& neon() {
    static const Dispatch d{"neon", scan_hist64_neon, scan_hist128_neon, pair_count_neon};
    return d;
}

}  // namespace sdc::kernels
