#include "sdc/harness.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "sdc/gray.hpp"

namespace sdc {

namespace {

int default_wmax(size_t n) {
    if (n == 64 || n == 68) return 14;
    if (n == 80 || n == 88 || n == 96) return 16;
    return int(std::min<size_t>(n, 16));
}

int census_distance(const WeightCensus& wc) {
    for (size_t w = 1; w < wc.counts.size(); ++w)
        if (wc.counts[w]) return int(w);
    return 0;
}

}  // namespace

ImageAnalysis analyze_image(const RingCode& c, int jobs, int wmax) {
    ImageAnalysis a;
    BinaryCode img = binary_image(c.gen);
    a.n = img.n;
    a.k = img.k;
    a.ring_self_dual = is_self_dual(c);
    a.type = classify_type(img);
    if (wmax <= 0) wmax = default_wmax(img.n);
    a.census = low_weight_census(img, wmax, jobs).census;
    a.d = census_distance(a.census);
    if (img.n == 64 || img.n == 68 || img.n == 80 || img.n == 88 || img.n == 96) {
        try {
            a.params = extract_params(a.census, img.n);
            a.has_params = true;
        } catch (const std::invalid_argument&) {
        }
    }
    return a;
}

std::vector<RingCode> classify_four_circulant_f4(size_t n, int min_image_d, int jobs) {
    if (n < 1 || n > 6)
        throw std::invalid_argument("classify_four_circulant_f4: n must be 1..6");
    const uint64_t side = uint64_t(1) << (2 * n);  // 4^n first rows
    auto nth_row = [&](uint64_t idx) {
        Vec v{Ring::F4, std::vector<uint8_t>(n)};
        for (size_t i = 0; i < n; ++i) v.e[i] = uint8_t(idx >> (2 * (n - 1 - i)) & 3);
        return v;
    };
    int nthreads = std::max(1, jobs);
    std::vector<std::vector<RingCode>> found{size_t(nthreads)};
    auto work = [&](int t) {
        for (uint64_t ia = uint64_t(t); ia < side; ia += uint64_t(nthreads)) {
            Vec rA = nth_row(ia);
            for (uint64_t ib = 0; ib < side; ++ib) {
                Vec rB = nth_row(ib);
                if (!check_four_circulant_condition(rA, rB)) continue;
                RingCode c = make_four_circulant_code(rA, rB);
                BinaryCode img = binary_image(c.gen);
                if (min_distance_full(img) < min_image_d) continue;
                found[size_t(t)].push_back(std::move(c));
            }
        }
    };
    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    // deterministic order: by (rA index, rB index) == lexicographic seeds
    std::vector<RingCode> out;
    for (auto& f : found)
        for (auto& c : f) out.push_back(std::move(c));
    std::sort(out.begin(), out.end(), [](const RingCode& a, const RingCode& b) {
        return std::tie(a.prov.rA, a.prov.rB) < std::tie(b.prov.rA, b.prov.rB);
    });
    return out;
}

namespace {

// Shared tail of both searches: analyze a candidate, append a hit when the
// image distance matches.
void search_examine(SearchReport& rep, RingCode&& cand, uint64_t index, int target_d,
                    int jobs) {
    ++rep.candidates_examined;
    if (!mat_is_zero(mat_mul(cand.gen, mat_transpose(cand.gen)))) return;
    if (!is_self_dual(cand)) return;
    ImageAnalysis a = analyze_image(cand, jobs);
    int want = target_d;
    if (want == 0) {  // extremal target
        if (a.type == CodeType::NotSelfDual) return;
        want = extremal_bound(a.n, a.type);
    }
    if (a.d != want) return;
    SearchHit hit;
    hit.index = index;
    hit.prov = cand.prov;
    hit.d = a.d;
    hit.params = a.params;
    rep.hits.push_back(std::move(hit));
}

}  // namespace

SearchReport lift_search(const RingCode& seed_code, int target_d, bool exhaustive,
                         uint64_t seed, uint64_t budget, int jobs) {
    SearchReport rep;
    rep.seed = seed;
    rep.seeded = !exhaustive;
    // projection bound: d(lift image) <= 2 d(seed image)
    int dprime = min_distance_full(binary_image(seed_code.gen), jobs);
    rep.filters_applied.push_back("projection_bound");
    if (2 * dprime < target_d) {
        rep.note = "infeasible: target " + std::to_string(target_d) +
                   " exceeds twice the projection distance " + std::to_string(dprime);
        return rep;
    }
    uint64_t total = lift_count(seed_code);
    std::mt19937_64 rng(seed);
    for (uint64_t i = 0; i < budget; ++i) {
        uint64_t idx;
        if (exhaustive) {
            if (i >= total) break;
            idx = i;
        } else {
            idx = std::uniform_int_distribution<uint64_t>(0, total - 1)(rng);
        }
        search_examine(rep, lift_at(seed_code, idx), idx, target_d, jobs);
    }
    return rep;
}

SearchReport extension_search(const RingCode& base, char theorem,
                              const std::vector<Elem>& c_set, uint64_t seed,
                              uint64_t budget, int jobs) {
    if (!is_self_dual(base))
        throw std::invalid_argument("extension_search: base is not self-dual");
    if (c_set.empty()) throw std::invalid_argument("extension_search: empty c set");
    SearchReport rep;
    rep.seed = seed;
    rep.seeded = true;
    size_t xlen = theorem == 'B' ? base.gens() : base.length();
    Elem target_ip = ring_one(base.ring);
    if (theorem == 'B' && xlen % 2)
        target_ip = ring_zero(base.ring);  // <X,X> = 1 + n
    std::mt19937_64 rng(seed);
    RingCode sd_base = base;
    sd_base.prov.self_dual_verified = true;
    for (uint64_t i = 0; i < budget; ++i) {
        ExtensionParams p;
        p.theorem = theorem;
        p.X = sample_extension_x(base.ring, xlen, target_ip, rng);
        p.c = c_set[size_t(std::uniform_int_distribution<size_t>(0, c_set.size() - 1)(rng))];
        RingCode ext = theorem == 'A' ? extend_A(sd_base, p) : extend_B(sd_base, p);
        ext.prov.seed = seed;
        search_examine(rep, std::move(ext), i, 0, jobs);
    }
    return rep;
}

namespace {

std::string mismatch(const std::string& what, long long got, long long want) {
    return what + "=" + std::to_string(got) + " (expected " + std::to_string(want) + ")";
}

RowResult check_row(const Table& t, const TableRow& row, bool deep, int jobs) {
    RowResult res;
    res.name = row.name;
    if (row.flagged()) {
        res.flagged = true;
        res.detail = row.flag;
        return res;
    }
    RingCode code;
    try {
        code = build_table_row(t, row);
    } catch (const std::exception& e) {
        res.detail = std::string("build failed: ") + e.what();
        return res;
    }
    std::vector<std::string> bad;
    BinaryCode img = binary_image(code.gen);
    if (!is_self_dual_binary(img)) bad.push_back("binary image not self-dual");
    LowWeightResult lw;
    WeightCensus wc;
    if (deep && int(img.k) <= scan_bound()) {
        wc = weight_census_full(img, jobs);
        lw = low_weight_census(img, default_wmax(img.n), jobs);
    } else {
        lw = low_weight_census(img, default_wmax(img.n), jobs);
        if (!lw.census.complete) bad.push_back("census incomplete");
        wc = lw.census;
    }
    int d = census_distance(wc);
    CodeType type = classify_type(img);

    if (t.id == 1) {
        if (img.n != 32 || img.k != 16) bad.push_back("image is not [32,16]");
        if (d != *row.d) bad.push_back(mismatch("d", d, *row.d));
        if (!is_self_dual(code)) bad.push_back("seed not self-dual");
    } else if (t.id == 2 || (t.kind == "extensions")) {
        size_t want_n = t.id == 2 ? 64 : 68;
        if (img.n != want_n || img.k != want_n / 2)
            bad.push_back("image is not [" + std::to_string(want_n) + "," +
                          std::to_string(want_n / 2) + "]");
        if (d != 12) bad.push_back(mismatch("d", d, 12));
        if (t.id == 2 && type != CodeType::TypeI) bad.push_back("not Type I");
        EnumeratorReport er = extract_params(wc, img.n);
        std::string family = t.id == 2 ? "W64_2" : "W68_2";
        if (er.family != family || !er.matched)
            bad.push_back("enumerator family " + (er.family.empty() ? "?" : er.family) +
                          " (expected " + family + (er.note.empty() ? "" : "; " + er.note) +
                          ")");
        if (er.beta && *er.beta != *row.beta) bad.push_back(mismatch("beta", *er.beta, *row.beta));
        if (t.id != 2) {
            long long got_gamma = er.gamma ? *er.gamma : 0;
            if (got_gamma != *row.gamma) bad.push_back(mismatch("gamma", got_gamma, *row.gamma));
        }
    } else if (t.id == 9) {
        size_t want_n = row.name.rfind("L80", 0) == 0 ? 80 : 88;
        if (img.n != want_n || img.k != want_n / 2) bad.push_back("wrong image length");
        if (type != CodeType::TypeII) bad.push_back("not Type II");
        if (d != 16) bad.push_back(mismatch("d", d, 16));
        uint64_t i16 = pair_invariant(lw, 16, 16, jobs);
        if (i16 != *row.I16) bad.push_back(mismatch("I16", (long long)i16, (long long)*row.I16));
        RingCode parent = builtin_code(row.base);
        if (!(project_mu(code).gen == parent.gen)) bad.push_back("mu(lift) != parent");
    } else if (t.id == 10) {
        if (img.n != 40 || img.k != 20) bad.push_back("image is not [40,20]");
        if (d != 8) bad.push_back(mismatch("d", d, 8));
        if (wc.counts[8] != *row.A8)
            bad.push_back(mismatch("A8", (long long)wc.counts[8], (long long)*row.A8));
        uint64_t i8 = pair_invariant(lw, 8, 8, jobs);
        if (i8 != *row.I8) bad.push_back(mismatch("I8", (long long)i8, (long long)*row.I8));
    } else if (t.id == 11) {
        if (img.n != 96 || img.k != 48) bad.push_back("image is not [96,48]");
        if (type != CodeType::TypeII) bad.push_back("not Type II");
        if (d != 16) bad.push_back(mismatch("d", d, 16));
        EnumeratorReport er = extract_params(wc, 96);
        if (!er.alpha || *er.alpha != *row.alpha)
            bad.push_back(mismatch("alpha", er.alpha ? *er.alpha : -1, *row.alpha));
        RingCode parent = builtin_code(row.base);
        if (!(project_mu(code).gen == parent.gen)) bad.push_back("mu(lift) != parent");
    }

    res.pass = bad.empty();
    if (!bad.empty()) {
        std::ostringstream ss;
        for (size_t i = 0; i < bad.size(); ++i) ss << (i ? "; " : "") << bad[i];
        res.detail = ss.str();
    }
    return res;
}

}  // namespace

TableReport reproduce_table(int id, bool deep, int jobs,
                            const std::vector<std::string>& row_subset) {
    const Table& t = table_data(id);
    TableReport rep;
    rep.id = id;
    for (const auto& row : t.rows) {
        if (!row_subset.empty() &&
            std::find(row_subset.begin(), row_subset.end(), row.name) == row_subset.end())
            continue;
        RowResult r = check_row(t, row, deep, jobs);
        if (r.flagged) {
            ++rep.flagged;
            rep.anomalies.push_back(r.name + ": " + r.detail);
        } else if (r.pass) {
            ++rep.passed;
        } else {
            ++rep.failed;
        }
        rep.rows.push_back(std::move(r));
    }
    return rep;
}

}  // namespace sdc
