#include <bit>

#include "sdc/kernels.hpp"

namespace sdc::kernels {

void scan_hist64_scalar(const uint64_t* low_rows, int k_low, const uint64_t* seeds,
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

void scan_hist128_scalar(const uint64_t* low_rows, int k_low, const uint64_t* seeds,
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

uint64_t pair_count_scalar(const uint64_t* w0, const uint64_t* w1, size_t begin,
                           size_t end, size_t total, unsigned target) {
    uint64_t count = 0;
    for (size_t i = begin; i < end; ++i) {
        const uint64_t a0 = w0[i], a1 = w1[i];
        for (size_t j = i + 1; j < total; ++j) {
            unsigned d = unsigned(std::popcount(a0 ^ w0[j]) + std::popcount(a1 ^ w1[j]));
            count += (d == target);
        }
    }
    return count;
}

const Dispatch& scalar() {
    static const Dispatch d{"scalar", scan_hist64_scalar, scan_hist128_scalar,
                            pair_count_scalar};
    return d;
}

}  // namespace sdc::kernels
