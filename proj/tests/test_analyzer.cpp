#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "sdc/analyzer.hpp"

using namespace sdc;

namespace {

BinaryCode random_code(size_t n, size_t nrows, std::mt19937_64& rng) {
    size_t wpr = (n + 63) / 64;
    std::vector<uint64_t> raw(nrows * wpr);
    for (auto& w : raw) w = rng();
    uint64_t mask = n % 64 ? (uint64_t(1) << (n % 64)) - 1 : ~uint64_t(0);
    for (size_t r = 0; r < nrows; ++r) raw[r * wpr + wpr - 1] &= mask;
    return rank_and_systematize(n, raw, nrows, wpr);
}

// Sparse rows so weights below 14 actually occur.
BinaryCode random_sparse_code(size_t n, size_t nrows, std::mt19937_64& rng) {
    size_t wpr = (n + 63) / 64;
    std::vector<uint64_t> raw(nrows * wpr, 0);
    for (size_t r = 0; r < nrows; ++r)
        for (int b = 0; b < 6; ++b) {
            size_t c = rng() % n;
            raw[r * wpr + c / 64] |= uint64_t(1) << (c % 64);
        }
    return rank_and_systematize(n, raw, nrows, wpr);
}

// Message-by-message enumeration, the slow oracle.
std::vector<uint64_t> brute_histogram(const BinaryCode& c) {
    std::vector<uint64_t> hist(c.n + 1, 0);
    for (uint64_t m = 0; m < (uint64_t(1) << c.k); ++m) {
        int w = 0;
        for (size_t i = 0; i < c.wpr; ++i) {
            uint64_t acc = 0;
            for (size_t r = 0; r < c.k; ++r)
                if (m >> r & 1) acc ^= c.row(r)[i];
            w += std::popcount(acc);
        }
        ++hist[w];
    }
    return hist;
}

BinaryCode parse_rows(size_t n, const std::vector<std::string>& rows) {
    size_t wpr = (n + 63) / 64;
    std::vector<uint64_t> raw(rows.size() * wpr, 0);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < n; ++c)
            if (rows[r][c] == '1') raw[r * wpr + c / 64] |= uint64_t(1) << (c % 64);
    return rank_and_systematize(n, raw, rows.size(), wpr);
}

const std::vector<std::string> kRM13 = {  // extended Hamming [8,4,4]
    "11111111", "01010101", "00110011", "00001111"};

}  // namespace

TEST_CASE("full scan matches message-space enumeration") {
    std::mt19937_64 rng(99);
    for (size_t n : {17, 64, 100, 130, 200}) {  // wpr 1, 1, 2, 3, 4
        for (int trial = 0; trial < 3; ++trial) {
            BinaryCode c = random_code(n, 11, rng);
            CHECK(full_weight_histogram(c) == brute_histogram(c));
        }
    }
    // multi-threaded merge agrees too (exercised even on one core)
    BinaryCode c = random_code(96, 22, rng);
    CHECK(full_weight_histogram(c, 3) == full_weight_histogram(c, 1));
}

TEST_CASE("weight census full wraps the scan") {
    std::mt19937_64 rng(5);
    BinaryCode c = random_code(80, 18, rng);
    WeightCensus wc = weight_census_full(c);
    CHECK(wc.complete);
    CHECK(wc.wmax == int(c.n));
    CHECK(wc.counts == full_weight_histogram(c));
}

TEST_CASE("low-weight census is exact against the full scan") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 4; ++trial) {
        BinaryCode c = trial % 2 ? random_sparse_code(90 + 7 * trial, 24, rng)
                                 : random_code(90 + 7 * trial, 24, rng);
        auto full = full_weight_histogram(c);
        LowWeightResult lw = low_weight_census(c, 14);
        REQUIRE(lw.census.complete);
        for (int w = 0; w <= 14; ++w)
            CHECK(lw.census.counts[w] == full[size_t(w)]);
        // the word list itself matches the counts and is sorted unique
        uint64_t nonzero = 0;
        for (int w = 1; w <= 14; ++w) nonzero += lw.census.counts[w];
        CHECK(lw.words.size() / lw.wpr == nonzero);
    }
}

TEST_CASE("minimum distance") {
    CHECK(min_distance_full(parse_rows(8, kRM13)) == 4);
    std::mt19937_64 rng(8);
    BinaryCode c = random_code(60, 16, rng);
    auto full = full_weight_histogram(c);
    int d = 0;
    for (size_t w = 1; w < full.size(); ++w)
        if (full[w]) { d = int(w); break; }
    CHECK(min_distance_full(c) == d);
}

TEST_CASE("type classification") {
    CHECK(classify_type(parse_rows(8, kRM13)) == CodeType::TypeII);
    CHECK(classify_type(parse_rows(2, {"11"})) == CodeType::TypeI);
    CHECK(classify_type(parse_rows(4, {"1100", "0110"})) == CodeType::NotSelfDual);
}

TEST_CASE("extremal bound formula") {
    for (size_t n = 2; n <= 120; n += 2) {
        int base = 4 * int(n / 24) + 4;
        CHECK(extremal_bound(n, CodeType::TypeII) == base);
        CHECK(extremal_bound(n, CodeType::TypeI) == (n % 24 == 22 ? base + 2 : base));
    }
    CHECK(extremal_bound(64, CodeType::TypeI) == 12);
    CHECK(extremal_bound(68, CodeType::TypeI) == 12);
    CHECK(extremal_bound(80, CodeType::TypeII) == 16);
    CHECK(extremal_bound(88, CodeType::TypeII) == 16);
    CHECK(extremal_bound(96, CodeType::TypeII) == 20);
    CHECK(extremal_bound(22, CodeType::TypeI) == 6);
    CHECK(extremal_bound(118, CodeType::TypeI) == 22);
}

TEST_CASE("enumerator parameter extraction from synthetic censuses") {
    auto census = [](size_t n, std::initializer_list<std::pair<int, long long>> counts) {
        WeightCensus wc;
        wc.n = n;
        wc.wmax = 16;
        wc.complete = true;
        wc.counts.assign(n + 1, 0);
        wc.counts[0] = 1;
        for (auto [w, a] : counts) wc.counts[size_t(w)] = uint64_t(a);
        return wc;
    };
    auto r = extract_params(census(64, {{12, 1312 + 16 * 32}, {14, 23040 - 64 * 32}}), 64);
    CHECK(r.family == "W64_2");
    CHECK(r.matched);
    CHECK(*r.beta == 32);
    r = extract_params(census(64, {{12, 1312 + 16 * 14}, {14, 22016 - 64 * 14}}), 64);
    CHECK(r.family == "W64_1");
    CHECK(*r.beta == 14);
    r = extract_params(
        census(68, {{12, 442 + 4 * 100}, {14, 14960 - 8 * 100 - 256 * 2}}), 68);
    CHECK(r.family == "W68_2");
    CHECK(*r.beta == 100);
    CHECK(*r.gamma == 2);
    r = extract_params(census(80, {{16, 97565}}), 80);
    CHECK(r.family == "W80");
    CHECK(r.matched);
    r = extract_params(census(96, {{16, 36864 - 28086}, {20, 3666432 - 16 * 36864}}), 96);
    CHECK(r.family == "W96");
    CHECK(*r.alpha == 36864);
    // inconsistent pair -> not matched, residual note
    r = extract_params(census(64, {{12, 1312 + 16 * 32}, {14, 12345}}), 64);
    CHECK_FALSE(r.matched);
    CHECK_FALSE(r.note.empty());
}

TEST_CASE("pair invariant equals the quadratic brute force") {
    std::mt19937_64 rng(31);
    BinaryCode c = random_sparse_code(70, 20, rng);
    LowWeightResult lw = low_weight_census(c, 12);
    REQUIRE(lw.census.complete);
    for (int w : {8, 10, 12}) {
        for (int j : {w, w + 2}) {
            // collect the weight-w words, count pairs at distance j
            std::vector<const uint64_t*> ws;
            for (size_t i = 0; i * lw.wpr < lw.words.size(); ++i) {
                const uint64_t* p = lw.words.data() + i * lw.wpr;
                if (row_weight(p, lw.wpr) == w) ws.push_back(p);
            }
            uint64_t brute = 0;
            for (size_t i = 0; i < ws.size(); ++i)
                for (size_t jj = i + 1; jj < ws.size(); ++jj) {
                    int dist = 0;
                    for (size_t t = 0; t < lw.wpr; ++t)
                        dist += std::popcount(ws[i][t] ^ ws[jj][t]);
                    if (dist == j) ++brute;
                }
            CHECK(pair_invariant(lw, w, j) == brute);
        }
    }
}

TEST_CASE("design counting on the extended Hamming code") {
    BinaryCode c = parse_rows(8, kRM13);
    LowWeightResult lw = low_weight_census(c, 8);
    REQUIRE(lw.census.complete);
    CHECK(lw.census.counts[4] == 14);
    DesignCount dc = design_lambda(lw, 8, 4, 3);
    CHECK(dc.is_design);
    CHECK(dc.lambda == 1);
    CHECK(dc.lambda_min == 1);
    CHECK(dc.lambda_max == 1);
    // weight-4 words also form a 2-design: lambda = 14*C(4,2)/C(8,2) = 3
    dc = design_lambda(lw, 8, 4, 2);
    CHECK(dc.is_design);
    CHECK(dc.lambda == 3);
}

TEST_CASE("full scan refuses oversized dimensions") {
    BinaryCode c;
    c.n = 120;
    c.k = 60;
    c.wpr = 2;
    c.words.assign(c.k * c.wpr, 0);
    CHECK_THROWS_AS(full_weight_histogram(c), scan_bound_exceeded);
}
