#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sdc/codespec.hpp"
#include "sdc/gray.hpp"
#include "sdc/kernels.hpp"
#include "sdc/report.hpp"

using nlohmann::json;
using namespace sdc;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << j.dump(2) << "\n";
    }
}

RingCode code_from_specs(const std::vector<CodeSpec>& specs, const std::string& name) {
    // sections may reference earlier sections or built-in codes by name
    std::function<RingCode(const std::string&)> plain = [&](const std::string& n) {
        for (const auto& s : specs)
            if (s.name == n) return build_from_spec(s, plain);
        return builtin_code(n);
    };
    if (name.empty()) return build_from_spec(specs.front(), plain);
    for (const auto& s : specs)
        if (s.name == name) return build_from_spec(s, plain);
    throw std::runtime_error("no [code " + name + "] section in spec file");
}

// Accepts a code JSON file, a [code] spec file, a '0'/'1' matrix file, or a
// built-in code name (with optional psi()/phi()/mu() wrappers).
RingCode load_code(const std::string& source, const std::string& name = "") {
    std::ifstream probe(source);
    if (!probe) return resolve_wrapped(source, builtin_code);
    std::string text = slurp(source);
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::runtime_error(source + ": empty file");
    if (text[first] == '{') return code_from_json(json::parse(text));
    if (text[first] == '[' || text[first] == '#') {
        std::istringstream ss(text);
        return code_from_specs(parse_spec_file(ss), name);
    }
    std::istringstream ss(text);
    BinaryCode bin = load_matrix_text(ss);
    Mat g(Ring::F2, bin.k, bin.n);
    for (size_t r = 0; r < bin.k; ++r)
        for (size_t c = 0; c < bin.n; ++c)
            if (bin.get(r, c)) g.set(r, c, ring_one(Ring::F2));
    RingCode code = make_matrix_code(g);
    return code;
}

constexpr int kDeepScanK = 30;  // full scans beyond this need --deep

int run_analyze(const std::string& file, const std::string& name, bool f_selfdual,
                bool f_type, bool f_mindist, int census_wmax, bool f_params,
                const std::string& invariant, std::vector<int> design, bool deep,
                int jobs, const std::string& out,
                std::optional<long long> expect_beta, std::optional<long long> expect_gamma,
                std::optional<long long> expect_alpha, std::optional<int> expect_d,
                std::optional<long long> expect_i16) {
    Timer timer;
    RingCode code = load_code(file, name);
    BinaryCode img = binary_image(code.gen);
    json results;
    json anomalies = json::array();
    std::vector<std::string> claims;

    results["n"] = img.n;
    results["k"] = img.k;
    results["ring"] = ring_name(code.ring);
    results["provenance"] = provenance_json(code.prov);

    bool want_census = f_mindist || census_wmax > 0 || f_params || expect_beta ||
                       expect_gamma || expect_alpha || expect_d;
    bool heavy = img.n >= 80;
    if ((!invariant.empty() || !design.empty()) && heavy && !deep) {
        std::cerr << "refusing invariant/design on length " << img.n
                  << " without --deep (projected minutes of enumeration)\n";
        return 2;
    }

    if (f_selfdual) results["self_dual"] = is_self_dual(code);
    if (f_type) results["type"] = code_type_name(classify_type(img));

    LowWeightResult lw;
    bool have_lw = false;
    if (want_census || !invariant.empty() || !design.empty()) {
        int wmax = census_wmax > 0 ? census_wmax
                                   : int(std::min<size_t>(img.n, img.n >= 80 ? 16 : 14));
        if (deep && int(img.k) <= scan_bound() && img.k <= 40) {
            lw = low_weight_census(img, wmax, jobs);
            lw.census = weight_census_full(img, jobs);
        } else {
            if (int(img.k) > kDeepScanK && img.n < 80 && !deep && int(img.k) <= scan_bound()) {
                // census route still fine; full scans would need --deep
            }
            lw = low_weight_census(img, wmax, jobs);
            if (!lw.census.complete) {
                if (int(img.k) > scan_bound()) {
                    std::cerr << "refusing: census guarantee " << lw.guarantee
                              << " does not cover wmax " << wmax << " and k=" << img.k
                              << " exceeds the scan bound " << scan_bound()
                              << " (set SDF_SCAN_BOUND to override)\n";
                    return 2;
                }
                if (!deep && int(img.k) > kDeepScanK) {
                    std::cerr << "refusing full scan with k=" << img.k
                              << " without --deep (projected 2^" << img.k
                              << " codewords)\n";
                    return 2;
                }
                lw.census = weight_census_full(img, jobs);
            }
        }
        have_lw = true;
        results["census"] = census_json(lw.census);
    }

    int d = 0;
    if (have_lw)
        for (size_t w = 1; w < lw.census.counts.size(); ++w)
            if (lw.census.counts[w]) {
                d = int(w);
                break;
            }
    if (f_mindist) results["min_distance"] = d;

    EnumeratorReport er;
    bool have_er = false;
    if (f_params || expect_beta || expect_gamma || expect_alpha) {
        er = extract_params(lw.census, img.n);
        have_er = true;
        results["enumerator"] = enumerator_json(er);
    }
    if (!invariant.empty()) {
        if (invariant != "I16" && invariant != "I8")
            throw CLI::ValidationError("--invariant must be I16 or I8");
        int w = invariant == "I16" ? 16 : 8;
        results["invariant"][invariant] = pair_invariant(lw, w, w, jobs);
    }
    if (!design.empty()) {
        auto dc = design_lambda(lw, img.n, design.at(1), design.at(0));
        results["design"] = {{"t", design[0]},
                             {"w", design[1]},
                             {"lambda_min", dc.lambda_min},
                             {"lambda_max", dc.lambda_max},
                             {"is_design", dc.is_design}};
        if (dc.is_design) results["design"]["lambda"] = dc.lambda;
    }

    if (expect_d && d != *expect_d)
        claims.push_back("min_distance " + std::to_string(d) + " != expected " +
                         std::to_string(*expect_d));
    if (expect_beta && (!have_er || !er.beta || *er.beta != *expect_beta))
        claims.push_back("beta mismatch (expected " + std::to_string(*expect_beta) + ")");
    if (expect_gamma && (!have_er || (er.gamma ? *er.gamma : 0) != *expect_gamma))
        claims.push_back("gamma mismatch (expected " + std::to_string(*expect_gamma) + ")");
    if (expect_alpha && (!have_er || !er.alpha || *er.alpha != *expect_alpha))
        claims.push_back("alpha mismatch (expected " + std::to_string(*expect_alpha) + ")");
    if (expect_i16) {
        uint64_t i16 = results.contains("invariant") && results["invariant"].contains("I16")
                           ? results["invariant"]["I16"].get<uint64_t>()
                           : pair_invariant(lw, 16, 16, jobs);
        if ((long long)i16 != *expect_i16)
            claims.push_back("I16 " + std::to_string(i16) + " != expected " +
                             std::to_string(*expect_i16));
    }
    for (const auto& cm : claims) anomalies.push_back(cm);
    emit(report_envelope("analyze", {{"file", file}}, results, anomalies, timer.seconds()),
         out);
    for (const auto& cm : claims) std::cerr << "claim failed: " << cm << "\n";
    return claims.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"self-dual code construction and analysis over characteristic-2 rings"};
    app.require_subcommand(1);
    app.fallthrough();
    int jobs = 1;
    app.add_option("--jobs,-j", jobs, "worker threads")->capture_default_str();
    std::string kernel;
    app.add_option("--kernel", kernel, "force kernel variant (scalar/avx2/neon/auto)");

    // ---- build
    auto* cb = app.add_subcommand("build", "build a code from a spec file");
    std::string b_spec, b_out, b_name;
    cb->add_option("spec_file", b_spec, "spec file with [code NAME] sections")->required();
    cb->add_option("-o,--out", b_out, "output path (default stdout)");
    cb->add_option("--name", b_name, "which [code NAME] section to build");

    // ---- analyze
    auto* ca = app.add_subcommand("analyze", "analyze a code's binary image");
    std::string a_file, a_name, a_out, a_invariant;
    bool a_selfdual = false, a_type = false, a_mindist = false, a_params = false,
         a_deep = false;
    int a_census = 0;
    std::vector<int> a_design;
    std::optional<long long> a_eb, a_eg, a_ea, a_ei16;
    std::optional<int> a_ed;
    ca->add_option("code", a_file, "code JSON / spec file / matrix file / name")->required();
    ca->add_option("--from", a_name, "section name when the input is a spec file");
    ca->add_flag("--self-dual", a_selfdual, "check ring self-duality");
    ca->add_flag("--type", a_type, "classify Type I / Type II");
    ca->add_flag("--mindist", a_mindist, "minimum distance");
    ca->add_option("--census", a_census, "exact weight counts through WMAX");
    ca->add_flag("--params", a_params, "extract enumerator parameters");
    ca->add_option("--invariant", a_invariant, "pair invariant (I16 or I8)");
    ca->add_option("--design", a_design, "design coverage: T W")->expected(2);
    ca->add_flag("--deep", a_deep, "allow long-running full verification");
    ca->add_option("-o,--out", a_out, "report path (default stdout)");
    ca->add_option("--expect-beta", a_eb, "fail (exit 1) unless beta matches");
    ca->add_option("--expect-gamma", a_eg, "fail unless gamma matches");
    ca->add_option("--expect-alpha", a_ea, "fail unless alpha matches");
    ca->add_option("--expect-d", a_ed, "fail unless minimum distance matches");
    ca->add_option("--expect-i16", a_ei16, "fail unless I16 matches");

    // ---- extend
    auto* ce = app.add_subcommand("extend", "apply an extension theorem");
    std::string e_file, e_name, e_x, e_c, e_out, e_theorem;
    ce->add_option("code", e_file, "base code (file or name)")->required();
    ce->add_option("--from", e_name, "section name when the input is a spec file");
    ce->add_option("--theorem", e_theorem, "A or B")->required();
    ce->add_option("--x", e_x, "extension vector X (ring tokens)")->required();
    ce->add_option("--c", e_c, "unit c with c*c = 1")->required();
    ce->add_option("-o,--out", e_out, "output path (default stdout)");

    // ---- reproduce
    auto* cr = app.add_subcommand("reproduce", "verify an embedded table");
    int r_table = 0;
    bool r_deep = false;
    std::string r_out;
    std::vector<std::string> r_rows;
    cr->add_option("--table", r_table, "table number 1..11")->required();
    cr->add_flag("--deep", r_deep, "full scans instead of censuses");
    cr->add_option("--rows", r_rows, "restrict to these row names")->delimiter(',');
    cr->add_option("-o,--out", r_out, "report path (default stdout)");

    // ---- search
    auto* cs = app.add_subcommand("search", "randomized lift / extension search");
    std::string s_mode, s_base, s_theorem = "A", s_out;
    std::vector<std::string> s_cset{"1", "3"};
    std::optional<uint64_t> s_seed;
    uint64_t s_budget = 1000;
    int s_target = 0;
    bool s_exhaustive = false;
    cs->add_option("--mode", s_mode, "lifts or extensions")->required();
    cs->add_option("--base", s_base, "base code (name or file)")->required();
    cs->add_option("--seed", s_seed, "PRNG seed (required unless --exhaustive)");
    cs->add_option("--budget", s_budget, "candidates to examine")->capture_default_str();
    cs->add_option("--target-d", s_target, "required image distance (lifts)");
    cs->add_option("--theorem", s_theorem, "A or B (extensions)");
    cs->add_option("--c-set", s_cset, "candidate c tokens")->delimiter(',');
    cs->add_flag("--exhaustive", s_exhaustive, "enumerate lifts from index 0");
    cs->add_option("-o,--out", s_out, "report path (default stdout)");

    // ---- classify
    auto* cc = app.add_subcommand("classify", "four-circulant classification over F4");
    size_t c_n = 4;
    int c_mind = 6;
    std::string c_out;
    cc->add_option("--n", c_n, "circulant block size")->capture_default_str();
    cc->add_option("--min-d", c_mind, "minimum image distance")->capture_default_str();
    cc->add_option("-o,--out", c_out, "report path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!kernel.empty()) kernels::force(kernel);
        if (cb->parsed()) {
            std::istringstream ss(slurp(b_spec));
            RingCode code = code_from_specs(parse_spec_file(ss), b_name);
            emit(code_json(code), b_out);
            return 0;
        }
        if (ca->parsed()) {
            return run_analyze(a_file, a_name, a_selfdual, a_type, a_mindist, a_census,
                               a_params, a_invariant, a_design, a_deep, jobs, a_out, a_eb,
                               a_eg, a_ea, a_ed, a_ei16);
        }
        if (ce->parsed()) {
            if (e_theorem != "A" && e_theorem != "B")
                throw CLI::ValidationError("--theorem must be A or B");
            RingCode base = load_code(e_file, e_name);
            ExtensionParams p;
            p.theorem = e_theorem[0];
            p.X = parse_vector(e_x, base.ring);
            p.c = parse_element(e_c, base.ring);
            try {
                RingCode ext = p.theorem == 'A' ? extend_A(base, p) : extend_B(base, p);
                emit(code_json(ext), e_out);
            } catch (const std::invalid_argument& e) {
                std::cerr << "precondition violated: " << e.what() << "\n";
                return 1;
            }
            return 0;
        }
        if (cr->parsed()) {
            Timer timer;
            TableReport rep = reproduce_table(r_table, r_deep, jobs, r_rows);
            json anomalies = json::array();
            for (const auto& a : rep.anomalies) anomalies.push_back(a);
            emit(report_envelope("reproduce", {{"table", r_table}, {"deep", r_deep}},
                                 table_report_json(rep), anomalies, timer.seconds()),
                 r_out);
            std::cerr << "table " << r_table << ": " << rep.passed << " passed, "
                      << rep.failed << " failed, " << rep.flagged << " flagged\n";
            return rep.failed == 0 ? 0 : 1;
        }
        if (cs->parsed()) {
            Timer timer;
            if (!s_seed && !s_exhaustive) {
                std::cerr << "--seed is required for randomized search\n";
                return 2;
            }
            RingCode base = load_code(s_base);
            SearchReport rep;
            if (s_mode == "lifts") {
                if (s_target <= 0) {
                    std::cerr << "--target-d is required for lift search\n";
                    return 2;
                }
                rep = lift_search(base, s_target, s_exhaustive, s_seed.value_or(0),
                                  s_budget, jobs);
            } else if (s_mode == "extensions") {
                std::vector<Elem> cset;
                for (const auto& tok : s_cset) cset.push_back(parse_element(tok, base.ring));
                rep = extension_search(base, s_theorem.at(0), cset, s_seed.value_or(0),
                                       s_budget, jobs);
            } else {
                std::cerr << "--mode must be lifts or extensions\n";
                return 2;
            }
            emit(report_envelope("search",
                                 {{"mode", s_mode}, {"base", s_base}, {"budget", s_budget}},
                                 search_report_json(rep), json::array(), timer.seconds()),
                 s_out);
            std::cerr << rep.hits.size() << " hit(s) from " << rep.candidates_examined
                      << " candidates\n";
            return 0;
        }
        if (cc->parsed()) {
            Timer timer;
            auto codes = classify_four_circulant_f4(c_n, c_mind, jobs);
            json results = json::array();
            for (const auto& c : codes) results.push_back(provenance_json(c.prov));
            emit(report_envelope("classify", {{"n", c_n}, {"min_d", c_mind}}, results,
                                 json::array(), timer.seconds()),
                 c_out);
            std::cerr << codes.size() << " code(s)\n";
            return 0;
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error (line " << e.pos << "): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
