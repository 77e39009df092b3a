#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "sdc/bincode.hpp"

namespace sdc {

struct WeightCensus {
    size_t n = 0;
    int wmax = 0;      // weights <= wmax are exact
    bool complete = false;  // true when derived from a full scan or a covered
                            // low-weight enumeration
    std::vector<uint64_t> counts;  // size n+1; entries above wmax are zero
};

struct scan_bound_exceeded : std::runtime_error {
    scan_bound_exceeded(size_t k, int bound)
        : std::runtime_error("full scan refused: k=" + std::to_string(k) +
                             " exceeds scan bound " + std::to_string(bound) +
                             "; use low_weight_census"),
          k(k), bound(bound) {}
    size_t k;
    int bound;
};

// Full-scan dimension bound; default 34, overridable via SDF_SCAN_BOUND.
int scan_bound();

// Exact weight histogram of all 2^k codewords (Gray-code scan).
std::vector<uint64_t> full_weight_histogram(const BinaryCode& c, int jobs = 1);
int min_distance_full(const BinaryCode& c, int jobs = 1);
WeightCensus weight_census_full(const BinaryCode& c, int jobs = 1);

struct InfoSet {
    std::vector<uint32_t> cols;  // k columns
    int overlap = 0;             // columns shared with earlier sets
};

struct LowWeightResult {
    WeightCensus census;
    size_t wpr = 0;
    // All nonzero codewords of weight <= wmax, each wpr words, sorted.
    std::vector<uint64_t> words;
    int message_weight = 0;  // enumerated restriction weight t
    int guarantee = 0;       // all codeword weights < guarantee are covered
    std::vector<InfoSet> sets;
};

// Exact counts for all weights <= wmax via enumeration over a family of
// information sets (disjoint when available, Brouwer-Zimmermann overlap
// bookkeeping otherwise). census.complete is set only when the guarantee
// covers wmax.
LowWeightResult low_weight_census(const BinaryCode& c, int wmax, int jobs = 1);

enum class CodeType { TypeI, TypeII, NotSelfDual };
const char* code_type_name(CodeType t);

CodeType classify_type(const BinaryCode& c);

// Rains bound on the minimum distance of self-dual codes.
int extremal_bound(size_t n, CodeType t);

struct EnumeratorReport {
    std::string family;  // W64_1, W64_2, W68_1, W68_2, W80, W88, W96
    std::optional<long long> beta, gamma, alpha;
    bool matched = false;
    std::string note;  // residuals on mismatch
};

EnumeratorReport extract_params(const WeightCensus& census, size_t n);

// Unordered pairs of weight-w codewords at Hamming distance exactly j.
uint64_t pair_invariant(const LowWeightResult& lw, int w, int j, int jobs = 1);

struct DesignCount {
    uint64_t lambda = 0;
    uint64_t lambda_min = 0, lambda_max = 0;
    bool is_design = false;
};

// Coverage counts of t-subsets of coordinates by weight-w codeword supports.
DesignCount design_lambda(const LowWeightResult& lw, size_t n, int w, int t);

}  // namespace sdc
