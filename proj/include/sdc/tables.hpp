#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdc/algebra.hpp"

namespace sdc {

// One transcribed row of an embedded expectation table. Construction fields
// on the left, expected measurements on the right; absent fields are empty /
// nullopt. flag marks transcription anomalies excluded from verification.
struct TableRow {
    std::string name;
    std::string base;
    char theorem = 0;
    std::string rA, rB, X, c;
    std::optional<int> d;
    std::optional<long long> beta, gamma, alpha;
    std::optional<uint64_t> A8, I8, I16;
    std::string flag;  // "-", "duplicate", "short_X"

    bool flagged() const { return !flag.empty() && flag != "-"; }
};

struct Table {
    int id = 0;
    std::string kind;  // seeds | lifts | extensions | four_circulant
    Ring ring = Ring::F2;
    std::vector<TableRow> rows;
};

// Directory holding the expectation data files; SDC_DATA_DIR overrides the
// build-time default.
std::string data_dir();

// Loads (and caches) table 1..11 from data_dir()/tables/tN.tsv.
const Table& table_data(int id);

// Named codes used throughout the tables: C1..C5, J1..N1, C64, C88, C96,
// D1..D7, L80_*, L88_*, L96_*.
RingCode builtin_code(const std::string& name);
std::vector<std::string> builtin_names();

// Rebuild the code a table row describes.
RingCode build_table_row(const Table& t, const TableRow& row);

}  // namespace sdc
