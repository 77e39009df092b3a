#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdc/analyzer.hpp"
#include "sdc/tables.hpp"

using namespace sdc;

TEST_CASE("table shapes and row counts") {
    struct Want {
        int id;
        const char* kind;
        Ring ring;
        size_t rows;
    } wants[] = {
        {1, "seeds", Ring::F4, 5},          {2, "lifts", Ring::F4uF4, 19},
        {3, "extensions", Ring::F2uF2, 16}, {4, "extensions", Ring::F2uF2, 30},
        {5, "extensions", Ring::F2uF2, 43}, {6, "extensions", Ring::F2uF2, 55},
        {7, "extensions", Ring::F2uF2, 22}, {8, "extensions", Ring::F2uF2, 13},
        {9, "four_circulant", Ring::F2uF2, 24}, {10, "four_circulant", Ring::F2, 7},
        {11, "four_circulant", Ring::F4uF4, 10},
    };
    for (const auto& w : wants) {
        const Table& t = table_data(w.id);
        CHECK(t.id == w.id);
        CHECK(t.kind == w.kind);
        CHECK(t.ring == w.ring);
        CHECK(t.rows.size() == w.rows);
    }
    CHECK_THROWS(table_data(12));
}

TEST_CASE("transcription anomalies are flagged") {
    int dup = 0, shortx = 0, basedup = 0;
    for (const auto& r : table_data(2).rows)
        if (r.flag == "duplicate") ++dup;
    for (const auto& r : table_data(5).rows)
        if (r.flag == "short_X") ++shortx;
    for (const auto& r : table_data(6).rows)
        if (r.flag == "base_duplicate") ++basedup;
    CHECK(dup == 1);
    CHECK(shortx == 1);
    CHECK(basedup == 1);
    // nothing else is flagged anywhere
    int other = 0;
    for (int id = 1; id <= 11; ++id)
        for (const auto& r : table_data(id).rows)
            if (r.flagged() && r.flag != "duplicate" && r.flag != "short_X" &&
                r.flag != "base_duplicate")
                ++other;
    CHECK(other == 0);
}

TEST_CASE("expected measurements are populated per table kind") {
    for (const auto& r : table_data(1).rows) CHECK(r.d.has_value());
    for (const auto& r : table_data(2).rows)
        if (!r.flagged()) CHECK(r.beta.has_value());
    for (int id = 3; id <= 8; ++id)
        for (const auto& r : table_data(id).rows)
            if (!r.flagged()) {
                CHECK(r.beta.has_value());
                CHECK(r.gamma.has_value());
                CHECK(r.theorem != 0);
            }
    for (const auto& r : table_data(9).rows) CHECK(r.I16.has_value());
    for (const auto& r : table_data(10).rows) {
        CHECK(r.A8.has_value());
        CHECK(r.I8.has_value());
    }
    for (const auto& r : table_data(11).rows) CHECK(r.alpha.has_value());
}

TEST_CASE("builtin codes resolve and have the right shapes") {
    auto names = builtin_names();
    CHECK(names.size() >= 5 + 19 + 3 + 7 + 24 + 10 - 1);
    for (const auto& n : names) {
        RingCode c = builtin_code(n);
        CHECK(c.gen.rows * 2 == c.gen.cols);  // all are rate-1/2 four-circulants
    }
    CHECK(builtin_code("C1").ring == Ring::F4);
    CHECK(builtin_code("C1").length() == 16);
    CHECK(builtin_code("C64").ring == Ring::F2uF2);
    CHECK(builtin_code("C64").length() == 32);
    CHECK(builtin_code("C88").ring == Ring::F2);
    CHECK(builtin_code("C88").length() == 44);  // [44,22] binary four-circulant
    CHECK(builtin_code("C96").ring == Ring::F4);
    CHECK(builtin_code("C96").length() == 24);
    CHECK(builtin_code("J1").ring == Ring::F4uF4);
    CHECK(builtin_code("D1").ring == Ring::F2);
    CHECK(builtin_code("D1").length() == 40);
    CHECK(builtin_code("L96_1").ring == Ring::F4uF4);
    CHECK_THROWS(builtin_code("nope"));
}

TEST_CASE("base codes are self-dual") {
    for (const char* n : {"C1", "C64", "C88", "C96", "D1"})
        CHECK(is_self_dual(builtin_code(n)));
}

TEST_CASE("build_table_row produces the advertised lengths") {
    const Table& t2 = table_data(2);
    for (const auto& r : t2.rows) {
        if (r.flagged()) continue;
        RingCode c = build_table_row(t2, r);
        CHECK(c.ring == Ring::F4uF4);
        CHECK(c.length() == 16);
        break;
    }
    const Table& t7 = table_data(7);
    RingCode e = build_table_row(t7, t7.rows[0]);
    CHECK(e.ring == Ring::F2uF2);
    CHECK(e.length() == 34);  // 32 + 2
}
