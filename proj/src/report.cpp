#include "sdc/report.hpp"

namespace sdc {

using nlohmann::json;

json provenance_json(const Provenance& p) {
    json j;
    j["kind"] = p.kind;
    if (!p.name.empty()) j["name"] = p.name;
    if (!p.base.empty()) j["base"] = p.base;
    if (!p.rA.empty()) j["rA"] = p.rA;
    if (!p.rB.empty()) j["rB"] = p.rB;
    if (!p.theorem.empty()) j["theorem"] = p.theorem;
    if (!p.X.empty()) j["X"] = p.X;
    if (!p.c.empty()) j["c"] = p.c;
    if (!p.map.empty()) j["map"] = p.map;
    if (p.lift_index) j["lift_index"] = *p.lift_index;
    if (p.seed) j["seed"] = *p.seed;
    if (p.self_dual_verified) j["self_dual_verified"] = true;
    return j;
}

json code_json(const RingCode& c) {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["ring"] = ring_name(c.ring);
    j["length"] = c.length();
    json rows = json::array();
    for (size_t r = 0; r < c.gen.rows; ++r) rows.push_back(format_vector(c.gen.row(r)));
    j["generator"] = rows;
    j["provenance"] = provenance_json(c.prov);
    return j;
}

RingCode code_from_json(const json& j) {
    Ring ring = ring_from_name(j.at("ring").get<std::string>());
    const json& rows = j.at("generator");
    if (!rows.is_array() || rows.empty())
        throw std::runtime_error("code JSON: generator must be a non-empty array");
    Mat g;
    for (size_t r = 0; r < rows.size(); ++r) {
        Vec v = parse_vector(rows[r].get<std::string>(), ring);
        if (r == 0) g = Mat(ring, rows.size(), v.size());
        if (v.size() != g.cols) throw std::runtime_error("code JSON: ragged generator");
        g.set_row(r, v);
    }
    RingCode c = make_matrix_code(g);
    if (j.contains("provenance")) {
        const json& p = j["provenance"];
        auto get = [&](const char* key) {
            return p.contains(key) ? p[key].get<std::string>() : std::string();
        };
        c.prov.kind = get("kind");
        c.prov.name = get("name");
        c.prov.base = get("base");
        c.prov.rA = get("rA");
        c.prov.rB = get("rB");
        c.prov.theorem = get("theorem");
        c.prov.X = get("X");
        c.prov.c = get("c");
        c.prov.map = get("map");
        if (p.contains("lift_index")) c.prov.lift_index = p["lift_index"].get<uint64_t>();
        if (p.contains("seed")) c.prov.seed = p["seed"].get<uint64_t>();
        if (c.prov.kind.empty()) c.prov.kind = "matrix";
    }
    return c;
}

json census_json(const WeightCensus& wc) {
    json j;
    j["n"] = wc.n;
    j["wmax"] = wc.wmax;
    j["complete"] = wc.complete;
    json counts = json::object();
    for (size_t w = 0; w < wc.counts.size() && int(w) <= wc.wmax; ++w)
        if (wc.counts[w]) counts[std::to_string(w)] = wc.counts[w];
    j["counts"] = counts;
    return j;
}

json enumerator_json(const EnumeratorReport& er) {
    json j;
    j["family"] = er.family;
    j["matched"] = er.matched;
    if (er.beta) j["beta"] = *er.beta;
    if (er.gamma) j["gamma"] = *er.gamma;
    if (er.alpha) j["alpha"] = *er.alpha;
    if (!er.note.empty()) j["note"] = er.note;
    return j;
}

json analysis_json(const ImageAnalysis& a) {
    json j;
    j["n"] = a.n;
    j["k"] = a.k;
    j["self_dual"] = a.ring_self_dual;
    j["type"] = code_type_name(a.type);
    j["min_distance"] = a.d;
    j["census"] = census_json(a.census);
    if (a.has_params) j["enumerator"] = enumerator_json(a.params);
    return j;
}

json search_report_json(const SearchReport& r) {
    json j;
    j["candidates_examined"] = r.candidates_examined;
    if (r.seeded) j["seed"] = r.seed;
    j["filters_applied"] = r.filters_applied;
    if (!r.note.empty()) j["note"] = r.note;
    json hits = json::array();
    for (const auto& h : r.hits) {
        json hj;
        hj["index"] = h.index;
        hj["provenance"] = provenance_json(h.prov);
        hj["min_distance"] = h.d;
        hj["enumerator"] = enumerator_json(h.params);
        hits.push_back(std::move(hj));
    }
    j["hits"] = hits;
    return j;
}

json table_report_json(const TableReport& r) {
    json j;
    j["table"] = r.id;
    j["passed"] = r.passed;
    j["failed"] = r.failed;
    j["flagged"] = r.flagged;
    json rows = json::array();
    for (const auto& row : r.rows) {
        json rj;
        rj["name"] = row.name;
        rj["status"] = row.flagged ? "flagged" : row.pass ? "pass" : "fail";
        if (!row.detail.empty()) rj["detail"] = row.detail;
        rows.push_back(std::move(rj));
    }
    j["rows"] = rows;
    j["anomalies"] = r.anomalies;
    return j;
}

json report_envelope(const std::string& command, json inputs, json results,
                     json anomalies, double seconds) {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["results"] = std::move(results);
    j["anomalies"] = std::move(anomalies);
    j["timing"] = {{"seconds", seconds}};
    return j;
}

}  // namespace sdc
