#include "sdc/analyzer.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <thread>

#include "sdc/kernels.hpp"

namespace sdc {

namespace {

constexpr int kDefaultScanBound = 34;
constexpr int kScanLowRows = 20;  // Gray-walk size per block

std::vector<std::pair<size_t, size_t>> split_ranges(size_t total, int jobs) {
    std::vector<std::pair<size_t, size_t>> r;
    size_t parts = std::max(1, jobs);
    parts = std::min(parts, std::max<size_t>(total, 1));
    size_t chunk = (total + parts - 1) / parts;
    for (size_t lo = 0; lo < total; lo += chunk) r.emplace_back(lo, std::min(lo + chunk, total));
    if (r.empty()) r.emplace_back(0, 0);
    return r;
}

// Generic (any wpr) reference scan, used when codewords exceed 128 bits.
void scan_hist_generic(const std::vector<uint64_t>& rows, size_t wpr, int k,
                       uint64_t* hist) {
    std::vector<uint64_t> cur(wpr, 0);
    hist[0] += 1;
    const uint64_t steps = uint64_t(1) << k;
    for (uint64_t s = 1; s < steps; ++s) {
        const uint64_t* r = rows.data() + size_t(std::countr_zero(s)) * wpr;
        int w = 0;
        for (size_t i = 0; i < wpr; ++i) {
            cur[i] ^= r[i];
            w += std::popcount(cur[i]);
        }
        ++hist[w];
    }
}

}  // namespace

int scan_bound() {
    static int bound = [] {
        if (const char* env = std::getenv("SDF_SCAN_BOUND")) {
            int v = std::atoi(env);
            if (v >= 1 && v <= 62) return v;
        }
        return kDefaultScanBound;
    }();
    return bound;
}

std::vector<uint64_t> full_weight_histogram(const BinaryCode& c, int jobs) {
    if (int(c.k) > scan_bound()) throw scan_bound_exceeded(c.k, scan_bound());
    std::vector<uint64_t> hist(c.n + 1, 0);
    if (c.wpr > 2) {
        scan_hist_generic(c.words, c.wpr, int(c.k), hist.data());
        return hist;
    }
    const int k_low = std::min<int>(int(c.k), kScanLowRows);
    const int p = int(c.k) - k_low;
    const size_t nseeds = size_t(1) << p;
    // Seeds: Gray walk over the top p rows, one coset per seed.
    std::vector<uint64_t> seeds(nseeds * c.wpr, 0);
    for (size_t b = 1; b < nseeds; ++b) {
        const uint64_t* top = c.row(size_t(k_low) + size_t(std::countr_zero(b)));
        for (size_t w = 0; w < c.wpr; ++w)
            seeds[b * c.wpr + w] = seeds[(b - 1) * c.wpr + w] ^ top[w];
    }
    const auto& kern = kernels::active();
    auto run = [&](size_t lo, size_t hi, uint64_t* h) {
        if (lo >= hi) return;
        if (c.wpr == 1)
            kern.scan_hist64(c.words.data(), k_low, seeds.data() + lo, hi - lo, h);
        else
            kern.scan_hist128(c.words.data(), k_low, seeds.data() + 2 * lo, hi - lo, h);
    };
    auto ranges = split_ranges(nseeds, jobs);
    if (ranges.size() == 1) {
        run(ranges[0].first, ranges[0].second, hist.data());
    } else {
        std::vector<std::vector<uint64_t>> partial(ranges.size(),
                                                   std::vector<uint64_t>(c.n + 1, 0));
        std::vector<std::thread> pool;
        for (size_t t = 0; t < ranges.size(); ++t)
            pool.emplace_back([&, t] { run(ranges[t].first, ranges[t].second, partial[t].data()); });
        for (auto& th : pool) th.join();
        for (auto& ph : partial)
            for (size_t i = 0; i <= c.n; ++i) hist[i] += ph[i];
    }
    return hist;
}

int min_distance_full(const BinaryCode& c, int jobs) {
    auto hist = full_weight_histogram(c, jobs);
    for (size_t w = 1; w <= c.n; ++w)
        if (hist[w]) return int(w);
    throw std::logic_error("min_distance_full: no nonzero codeword");
}

WeightCensus weight_census_full(const BinaryCode& c, int jobs) {
    WeightCensus wc;
    wc.n = c.n;
    wc.wmax = int(c.n);
    wc.complete = true;
    wc.counts = full_weight_histogram(c, jobs);
    uint64_t total = std::accumulate(wc.counts.begin(), wc.counts.end(), uint64_t(0));
    if (total != uint64_t(1) << c.k)
        throw std::logic_error("weight_census_full: histogram mass != 2^k");
    return wc;
}

namespace {

// Gaussian elimination trying pivot columns in the given order; returns the
// reduced rows and the pivot columns (ascending).
std::pair<std::vector<uint64_t>, std::vector<uint32_t>> ge_prefer(
    const BinaryCode& c, const std::vector<uint32_t>& col_order) {
    std::vector<uint64_t> work = c.words;
    std::vector<uint32_t> pivots;
    size_t rank = 0;
    for (uint32_t col : col_order) {
        if (rank == c.k) break;
        size_t word = col >> 6, bit = col & 63;
        size_t pivot = rank;
        while (pivot < c.k && !(work[pivot * c.wpr + word] >> bit & 1)) ++pivot;
        if (pivot == c.k) continue;
        if (pivot != rank)
            for (size_t w = 0; w < c.wpr; ++w)
                std::swap(work[pivot * c.wpr + w], work[rank * c.wpr + w]);
        for (size_t r = 0; r < c.k; ++r) {
            if (r == rank) continue;
            if (work[r * c.wpr + word] >> bit & 1)
                for (size_t w = 0; w < c.wpr; ++w) work[r * c.wpr + w] ^= work[rank * c.wpr + w];
        }
        pivots.push_back(col);
        ++rank;
    }
    if (rank != c.k) throw std::logic_error("ge_prefer: rank drop");
    std::sort(pivots.begin(), pivots.end());
    return {std::move(work), std::move(pivots)};
}

double enum_cost(size_t k, int t) {
    double total = 0, c = 1;
    for (int s = 1; s <= t; ++s) {
        c = c * double(k - s + 1) / double(s);
        total += c;
    }
    return total;
}

// Enumerate XOR combinations of 1..t rows whose full weight is <= wmax,
// restricted to combinations whose smallest row index lies in [first_lo,
// first_hi). Found codewords are appended to out (wpr words each).
void enumerate_combos(const std::vector<uint64_t>& rows, size_t k, size_t wpr, int t,
                      int wmax, size_t first_lo, size_t first_hi,
                      std::vector<uint64_t>& out) {
    std::vector<uint64_t> cur(wpr, 0);
    std::function<void(size_t, int)> rec = [&](size_t start, int depth) {
        for (size_t r = start; r < k; ++r) {
            const uint64_t* row = rows.data() + r * wpr;
            int w = 0;
            for (size_t i = 0; i < wpr; ++i) {
                cur[i] ^= row[i];
                w += std::popcount(cur[i]);
            }
            if (w <= wmax) out.insert(out.end(), cur.begin(), cur.end());
            if (depth < t) rec(r + 1, depth + 1);
            for (size_t i = 0; i < wpr; ++i) cur[i] ^= row[i];
        }
    };
    for (size_t r0 = first_lo; r0 < first_hi; ++r0) {
        const uint64_t* row = rows.data() + r0 * wpr;
        int w = 0;
        for (size_t i = 0; i < wpr; ++i) {
            cur[i] ^= row[i];
            w += std::popcount(cur[i]);
        }
        if (w <= wmax) out.insert(out.end(), cur.begin(), cur.end());
        if (t > 1) rec(r0 + 1, 2);
        for (size_t i = 0; i < wpr; ++i) cur[i] ^= row[i];
    }
}

}  // namespace

LowWeightResult low_weight_census(const BinaryCode& c, int wmax, int jobs) {
    if (wmax < 2) throw std::invalid_argument("low_weight_census: wmax must be >= 2");
    LowWeightResult res;
    res.wpr = c.wpr;
    res.census.n = c.n;
    res.census.wmax = wmax;
    res.census.counts.assign(c.n + 1, 0);

    // Discover information sets, preferring unused columns each round.
    std::vector<char> used(c.n, 0);
    std::vector<std::pair<std::vector<uint64_t>, InfoSet>> sets;
    for (int round = 0; round < 8; ++round) {
        std::vector<uint32_t> order;
        order.reserve(c.n);
        for (uint32_t col = 0; col < c.n; ++col)
            if (!used[col]) order.push_back(col);
        for (uint32_t col = 0; col < c.n; ++col)
            if (used[col]) order.push_back(col);
        auto [rows, pivots] = ge_prefer(c, order);
        InfoSet info;
        info.cols = pivots;
        for (uint32_t col : pivots) info.overlap += used[col] ? 1 : 0;
        if (size_t(info.overlap) == c.k && round > 0) break;  // nothing new
        for (uint32_t col : pivots) used[col] = 1;
        sets.emplace_back(std::move(rows), std::move(info));
        // Enough sets once a fully-fresh guarantee can exceed any wmax <= n.
        if (sets.size() >= 2 && sets.back().second.overlap == 0 &&
            sets.size() * (size_t(wmax) / sets.size() + 1) > size_t(wmax))
            if (sets.size() >= (c.n + c.k - 1) / c.k) break;
    }

    auto guarantee_at = [&](int t) {
        long long g = 0;
        for (auto& s : sets) g += std::max(0, t + 1 - s.second.overlap);
        return g;
    };
    constexpr double kCostCap = 6e9;
    int t = 0;
    for (int cand = 1; cand <= int(c.k); ++cand) {
        if (double(sets.size()) * enum_cost(c.k, cand) > kCostCap) break;
        t = cand;
        if (guarantee_at(cand) > wmax) break;
    }
    if (t == 0) throw std::runtime_error("low_weight_census: no feasible enumeration");
    res.message_weight = t;
    res.guarantee = int(guarantee_at(t));
    res.census.complete = res.guarantee > wmax;
    for (auto& s : sets) res.sets.push_back(s.second);

    // Enumerate per set, parallel over the first row index.
    std::vector<std::vector<uint64_t>> found;
    for (auto& [rows, info] : sets) {
        auto ranges = split_ranges(c.k, jobs);
        std::vector<std::vector<uint64_t>> partial(ranges.size());
        if (ranges.size() == 1) {
            enumerate_combos(rows, c.k, c.wpr, t, wmax, 0, c.k, partial[0]);
        } else {
            std::vector<std::thread> pool;
            for (size_t i = 0; i < ranges.size(); ++i)
                pool.emplace_back([&, i] {
                    enumerate_combos(rows, c.k, c.wpr, t, wmax, ranges[i].first,
                                     ranges[i].second, partial[i]);
                });
            for (auto& th : pool) th.join();
        }
        for (auto& p : partial) found.push_back(std::move(p));
    }
    size_t total_words = 0;
    for (auto& f : found) total_words += f.size();
    std::vector<uint64_t> flat;
    flat.reserve(total_words);
    for (auto& f : found) flat.insert(flat.end(), f.begin(), f.end());

    // Sort + dedup codewords (each wpr words).
    size_t count = flat.size() / c.wpr;
    std::vector<uint32_t> idx(count);
    std::iota(idx.begin(), idx.end(), 0);
    auto less = [&](uint32_t a, uint32_t b) {
        return std::lexicographical_compare(flat.begin() + size_t(a) * c.wpr,
                                            flat.begin() + size_t(a + 1) * c.wpr,
                                            flat.begin() + size_t(b) * c.wpr,
                                            flat.begin() + size_t(b + 1) * c.wpr);
    };
    auto equal = [&](uint32_t a, uint32_t b) {
        return std::equal(flat.begin() + size_t(a) * c.wpr,
                          flat.begin() + size_t(a + 1) * c.wpr,
                          flat.begin() + size_t(b) * c.wpr);
    };
    std::sort(idx.begin(), idx.end(), less);
    idx.erase(std::unique(idx.begin(), idx.end(), equal), idx.end());

    res.words.reserve(idx.size() * c.wpr);
    res.census.counts[0] = 1;
    for (uint32_t i : idx) {
        const uint64_t* w = flat.data() + size_t(i) * c.wpr;
        res.words.insert(res.words.end(), w, w + c.wpr);
        ++res.census.counts[row_weight(w, c.wpr)];
    }
    return res;
}

const char* code_type_name(CodeType t) {
    switch (t) {
        case CodeType::TypeI: return "TypeI";
        case CodeType::TypeII: return "TypeII";
        case CodeType::NotSelfDual: return "NotSelfDual";
    }
    return "?";
}

CodeType classify_type(const BinaryCode& c) {
    if (!is_self_dual_binary(c)) return CodeType::NotSelfDual;
    // Self-orthogonality makes doubly-evenness checkable on generators:
    // wt(x+y) = wt(x)+wt(y)-2 wt(x&y) and wt(x&y) is even when <x,y> = 0.
    for (size_t r = 0; r < c.k; ++r)
        if (row_weight(c.row(r), c.wpr) % 4) return CodeType::TypeI;
    return CodeType::TypeII;
}

int extremal_bound(size_t n, CodeType t) {
    if (n % 2) throw std::invalid_argument("extremal_bound: odd length");
    if (t == CodeType::NotSelfDual)
        throw std::invalid_argument("extremal_bound: code type required");
    int base = 4 * int(n / 24) + 4;
    if (t == CodeType::TypeI && n % 24 == 22) return base + 2;
    return base;
}

EnumeratorReport extract_params(const WeightCensus& census, size_t n) {
    if (census.n != n) throw std::invalid_argument("extract_params: length mismatch");
    EnumeratorReport rep;
    auto need = [&](int w) {
        if (census.wmax < w || (!census.complete && census.wmax < w))
            throw std::invalid_argument("extract_params: census does not cover weight " +
                                        std::to_string(w));
        return static_cast<long long>(census.counts[w]);
    };
    if (n == 64) {
        long long a12 = need(12), a14 = need(14);
        long long num = a12 - 1312;
        if (num % 16) {
            rep.note = "A12 residual " + std::to_string(num % 16);
            return rep;
        }
        long long beta = num / 16;
        rep.beta = beta;
        if (a14 == 22016 - 64 * beta) {
            rep.family = "W64_1";
            rep.matched = true;
        } else if (a14 == 23040 - 64 * beta) {
            rep.family = "W64_2";
            rep.matched = true;
        } else {
            rep.note = "A14=" + std::to_string(a14) + " fits neither W64 family";
        }
    } else if (n == 68) {
        long long a12 = need(12), a14 = need(14);
        long long num = a12 - 442;
        if (num % 4) {
            rep.note = "A12 residual " + std::to_string(num % 4);
            return rep;
        }
        long long beta = num / 4;
        rep.beta = beta;
        if (a14 == 10864 - 8 * beta) {
            rep.family = "W68_1";
            rep.matched = true;
        } else {
            long long gnum = 14960 - 8 * beta - a14;
            if (gnum % 256 == 0) {
                rep.family = "W68_2";
                rep.gamma = gnum / 256;
                rep.matched = true;
            } else {
                rep.note = "A14 residual " + std::to_string(gnum % 256) + " in W68_2";
            }
        }
    } else if (n == 80) {
        long long a16 = need(16);
        rep.family = "W80";
        rep.matched = a16 == 97565;
        if (!rep.matched) rep.note = "A16=" + std::to_string(a16) + " != 97565";
    } else if (n == 88) {
        // No printed enumerator for length 88; nothing to fit.
        rep.family = "W88";
        rep.matched = true;
    } else if (n == 96) {
        long long a16 = need(16);
        rep.family = "W96";
        rep.alpha = a16 + 28086;
        rep.matched = true;
        if (census.complete && census.wmax >= 20) {
            long long a20 = static_cast<long long>(census.counts[20]);
            if (a20 != 3666432 - 16 * *rep.alpha) {
                rep.matched = false;
                rep.note = "A20 inconsistent with alpha";
            }
        }
    } else {
        throw std::invalid_argument("extract_params: no enumerator family for n=" +
                                    std::to_string(n));
    }
    return rep;
}

namespace {

std::vector<uint64_t> filter_weight(const LowWeightResult& lw, int w, size_t& count) {
    count = 0;
    std::vector<uint64_t> sel;
    size_t total = lw.words.size() / lw.wpr;
    for (size_t i = 0; i < total; ++i) {
        const uint64_t* word = lw.words.data() + i * lw.wpr;
        if (row_weight(word, lw.wpr) == w) {
            sel.insert(sel.end(), word, word + lw.wpr);
            ++count;
        }
    }
    return sel;
}

}  // namespace

uint64_t pair_invariant(const LowWeightResult& lw, int w, int j, int jobs) {
    if (!lw.census.complete || lw.census.wmax < w)
        throw std::invalid_argument("pair_invariant: census incomplete at weight " +
                                    std::to_string(w));
    size_t count = 0;
    std::vector<uint64_t> sel = filter_weight(lw, w, count);
    if (count < 2) return 0;
    if (lw.wpr > 2) {  // generic path for very long codes
        uint64_t pairs = 0;
        for (size_t a = 0; a < count; ++a)
            for (size_t b = a + 1; b < count; ++b) {
                int d = 0;
                for (size_t i = 0; i < lw.wpr; ++i)
                    d += std::popcount(sel[a * lw.wpr + i] ^ sel[b * lw.wpr + i]);
                pairs += (d == j);
            }
        return pairs;
    }
    // Split words into per-position arrays for the kernel.
    std::vector<uint64_t> w0(count), w1(count, 0);
    for (size_t i = 0; i < count; ++i) {
        w0[i] = sel[i * lw.wpr];
        if (lw.wpr == 2) w1[i] = sel[i * lw.wpr + 1];
    }
    const auto& kern = kernels::active();
    auto ranges = split_ranges(count, jobs);
    if (ranges.size() == 1)
        return kern.pair_count(w0.data(), w1.data(), 0, count, count, unsigned(j));
    std::vector<uint64_t> partial(ranges.size(), 0);
    std::vector<std::thread> pool;
    for (size_t t = 0; t < ranges.size(); ++t)
        pool.emplace_back([&, t] {
            partial[t] = kern.pair_count(w0.data(), w1.data(), ranges[t].first,
                                         ranges[t].second, count, unsigned(j));
        });
    for (auto& th : pool) th.join();
    return std::accumulate(partial.begin(), partial.end(), uint64_t(0));
}

DesignCount design_lambda(const LowWeightResult& lw, size_t n, int w, int t) {
    if (!lw.census.complete || lw.census.wmax < w)
        throw std::invalid_argument("design_lambda: census incomplete at weight " +
                                    std::to_string(w));
    if (t < 0 || t > w) throw std::invalid_argument("design_lambda: bad t");
    size_t count = 0;
    std::vector<uint64_t> sel = filter_weight(lw, w, count);
    DesignCount dc;
    if (t == 0) {
        dc.lambda = dc.lambda_min = dc.lambda_max = count;
        dc.is_design = true;
        return dc;
    }
    // Colex ranking of t-subsets: rank = sum C(c_j, j+1).
    std::vector<std::vector<uint64_t>> binom(n + 1, std::vector<uint64_t>(t + 1, 0));
    for (size_t i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (int j = 1; j <= t && size_t(j) <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (i > size_t(j) ? binom[i - 1][j] : 0);
    }
    uint64_t nsubsets = binom[n][t];
    if (nsubsets > 200000000ULL)
        throw std::invalid_argument("design_lambda: t too large for this length");
    std::vector<uint32_t> cover(nsubsets, 0);
    std::vector<uint32_t> support;
    std::vector<uint32_t> pick(t);
    for (size_t i = 0; i < count; ++i) {
        support.clear();
        for (size_t col = 0; col < n; ++col)
            if (sel[i * lw.wpr + (col >> 6)] >> (col & 63) & 1)
                support.push_back(uint32_t(col));
        // all t-subsets of the support
        std::function<void(size_t, int)> rec = [&](size_t start, int depth) {
            if (depth == t) {
                uint64_t rank = 0;
                for (int j = 0; j < t; ++j) rank += binom[pick[j]][j + 1];
                ++cover[rank];
                return;
            }
            for (size_t s = start; s < support.size(); ++s) {
                pick[depth] = support[s];
                rec(s + 1, depth + 1);
            }
        };
        rec(0, 0);
    }
    auto [mn, mx] = std::minmax_element(cover.begin(), cover.end());
    dc.lambda_min = *mn;
    dc.lambda_max = *mx;
    dc.is_design = *mn == *mx;
    dc.lambda = *mn;
    return dc;
}

}  // namespace sdc
