#pragma once

#include <string>
#include <vector>

#include "sdc/analyzer.hpp"
#include "sdc/tables.hpp"

namespace sdc {

// End-to-end measurements of a ring code's binary image.
struct ImageAnalysis {
    size_t n = 0, k = 0;
    bool ring_self_dual = false;
    CodeType type = CodeType::NotSelfDual;
    int d = 0;
    WeightCensus census;
    EnumeratorReport params;  // only when a family exists for n
    bool has_params = false;
};

// Census-based analysis: exact counts through wmax (chosen to cover the
// distance bound and the enumerator coefficients for this length).
ImageAnalysis analyze_image(const RingCode& c, int jobs = 1, int wmax = 0);

struct SearchHit {
    uint64_t index = 0;  // candidate index within the run
    Provenance prov;
    int d = 0;
    EnumeratorReport params;
};

struct SearchReport {
    uint64_t candidates_examined = 0;
    std::vector<SearchHit> hits;
    uint64_t seed = 0;
    bool seeded = false;
    std::vector<std::string> filters_applied;
    std::string note;
};

// All (rA, rB) pairs over F4 of block size n satisfying the four-circulant
// condition whose psi-images have minimum distance >= min_image_d.
std::vector<RingCode> classify_four_circulant_f4(size_t n, int min_image_d, int jobs = 1);

// Streams lifts of an F4 four-circulant seed (exhaustive from index 0, or
// seeded random draws), keeping self-dual lifts whose binary images have
// minimum distance exactly target_d. Applies the projection bound filter
// (d <= 2 d' for every lift).
SearchReport lift_search(const RingCode& seed_code, int target_d, bool exhaustive,
                         uint64_t seed, uint64_t budget, int jobs = 1);

// Samples (X, c) extension parameters for the base code and keeps extensions
// whose binary images meet the extremal bound for their length and type.
SearchReport extension_search(const RingCode& base, char theorem,
                              const std::vector<Elem>& c_set, uint64_t seed,
                              uint64_t budget, int jobs = 1);

struct RowResult {
    std::string name;
    bool pass = false;
    bool flagged = false;
    std::string detail;  // measured-vs-expected summary or flag reason
};

struct TableReport {
    int id = 0;
    int passed = 0, failed = 0, flagged = 0;
    std::vector<RowResult> rows;
    std::vector<std::string> anomalies;
};

// Rebuild and re-measure each table row against the embedded expectations.
// deep switches the [64]/[68] verifications from censuses to full scans.
// row_subset (names) restricts which rows run; empty means all.
TableReport reproduce_table(int id, bool deep, int jobs,
                            const std::vector<std::string>& row_subset = {});

}  // namespace sdc
