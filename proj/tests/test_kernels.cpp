#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <random>

#include "sdc/kernels.hpp"

using namespace sdc::kernels;

TEST_CASE("available always contains scalar") {
    auto names = available();
    CHECK(std::find(names.begin(), names.end(), "scalar") != names.end());
    CHECK_THROWS(force("no-such-kernel"));
    force("auto");
}

TEST_CASE("every variant matches the scalar scan kernels") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 8; ++trial) {
        int k_low = 1 + int(rng() % 14);
        size_t nseeds = 1 + rng() % 37;  // deliberately awkward tail sizes
        std::vector<uint64_t> rows(static_cast<size_t>(k_low), 0);
        std::vector<uint64_t> rows2(2 * static_cast<size_t>(k_low), 0);
        std::vector<uint64_t> seeds(nseeds), seeds2(2 * nseeds);
        for (auto& w : rows) w = rng();
        for (auto& w : rows2) w = rng();
        for (auto& w : seeds) w = rng();
        for (auto& w : seeds2) w = rng();

        std::vector<uint64_t> ref64(65, 0), ref128(129, 0);
        scalar().scan_hist64(rows.data(), k_low, seeds.data(), nseeds, ref64.data());
        scalar().scan_hist128(rows2.data(), k_low, seeds2.data(), nseeds, ref128.data());

        for (const auto& name : available()) {
            force(name);
            std::vector<uint64_t> h64(65, 0), h128(129, 0);
            active().scan_hist64(rows.data(), k_low, seeds.data(), nseeds, h64.data());
            active().scan_hist128(rows2.data(), k_low, seeds2.data(), nseeds,
                                  h128.data());
            INFO("kernel ", name);
            CHECK(h64 == ref64);
            CHECK(h128 == ref128);
        }
    }
    force("auto");
}

TEST_CASE("every variant matches the scalar pair counter") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 6; ++trial) {
        size_t total = 2 + rng() % 61;
        std::vector<uint64_t> w0(total), w1(total);
        for (auto& w : w0) w = rng();
        for (auto& w : w1) w = rng() & 0xF;  // keep the target reachable
        for (unsigned target : {8u, 16u, 20u}) {
            size_t mid = total / 2;
            uint64_t ref = scalar().pair_count(w0.data(), w1.data(), 0, mid, total,
                                               target) +
                           scalar().pair_count(w0.data(), w1.data(), mid, total, total,
                                               target);
            for (const auto& name : available()) {
                force(name);
                uint64_t got = active().pair_count(w0.data(), w1.data(), 0, total,
                                                   total, target);
                INFO("kernel ", name, " target ", target);
                CHECK(got == ref);
            }
        }
    }
    force("auto");
}
