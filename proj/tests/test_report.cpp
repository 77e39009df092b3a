#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdc/report.hpp"

using namespace sdc;

TEST_CASE("code json round trip") {
    for (const char* name : {"C1", "C64", "J1", "C88"}) {
        RingCode c = builtin_code(name);
        nlohmann::json j = code_json(c);
        RingCode back = code_from_json(j);
        CHECK(back.ring == c.ring);
        CHECK(back.gen == c.gen);
        CHECK(back.prov.kind == c.prov.kind);
        CHECK(back.prov.rA == c.prov.rA);
    }
}

TEST_CASE("census json lists only the exact nonzero counts") {
    WeightCensus wc;
    wc.n = 16;
    wc.wmax = 8;
    wc.complete = true;
    wc.counts.assign(17, 0);
    wc.counts[0] = 1;
    wc.counts[4] = 12;
    wc.counts[6] = 3;
    wc.counts[16] = 99;  // beyond wmax: not serialized
    nlohmann::json j = census_json(wc);
    CHECK(j["wmax"] == 8);
    CHECK(j["complete"] == true);
    CHECK(j["counts"]["4"] == 12);
    CHECK(j["counts"]["6"] == 3);
    CHECK(!j["counts"].contains("16"));
}

TEST_CASE("report envelope shape") {
    nlohmann::json env = report_envelope("analyze", {{"code", "C1"}},
                                         {{"d", 8}}, nlohmann::json::array(), 1.5);
    CHECK(env["schema_version"] == kReportSchemaVersion);
    CHECK(env["command"] == "analyze");
    CHECK(env["inputs"]["code"] == "C1");
    CHECK(env["results"]["d"] == 8);
    CHECK(env["anomalies"].is_array());
    CHECK(env["timing"]["seconds"].is_number());
}

TEST_CASE("table report json counts statuses") {
    TableReport r;
    r.id = 2;
    r.passed = 1;
    r.failed = 0;
    r.flagged = 1;
    r.rows.push_back({"J1", true, false, ""});
    r.rows.push_back({"M3", false, true, "duplicate"});
    nlohmann::json j = table_report_json(r);
    CHECK(j["table"] == 2);
    CHECK(j["passed"] == 1);
    CHECK(j["flagged"] == 1);
    REQUIRE(j["rows"].size() == 2);
    CHECK(j["rows"][0]["status"] == "pass");
    CHECK(j["rows"][1]["status"] == "flagged");
}
