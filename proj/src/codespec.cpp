#include "sdc/codespec.hpp"

#include <istream>
#include <sstream>

namespace sdc {

namespace {

std::string trim(std::string_view s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) return {};
    size_t b = s.find_last_not_of(" \t\r");
    return std::string(s.substr(a, b - a + 1));
}

const std::string& need(const CodeSpec& s, const std::string& key) {
    auto it = s.fields.find(key);
    if (it == s.fields.end())
        throw parse_error("code '" + s.name + "': missing field '" + key + "'", s.line);
    return it->second;
}

Mat parse_rows(const std::string& text, Ring r, const CodeSpec& s) {
    std::vector<Vec> rows;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        part = trim(part);
        if (!part.empty()) rows.push_back(parse_vector(part, r));
    }
    if (rows.empty()) throw parse_error("code '" + s.name + "': empty matrix", s.line);
    Mat m(r, rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols)
            throw parse_error("code '" + s.name + "': ragged matrix rows", s.line);
        m.set_row(i, rows[i]);
    }
    return m;
}

std::string format_rows(const Mat& m) {
    std::string out;
    for (size_t i = 0; i < m.rows; ++i) {
        if (i) out += "; ";
        out += format_vector(m.row(i));
    }
    return out;
}

}  // namespace

std::vector<CodeSpec> parse_spec_file(std::istream& in) {
    std::vector<CodeSpec> specs;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']' || t.substr(1, 5) != "code " || t.size() < 8)
                throw parse_error("expected '[code NAME]' section header", lineno);
            CodeSpec s;
            s.name = trim(t.substr(6, t.size() - 7));
            if (s.name.empty()) throw parse_error("empty code name", lineno);
            s.line = lineno;
            specs.push_back(std::move(s));
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw parse_error("expected 'key = value' line", lineno);
        if (specs.empty())
            throw parse_error("'key = value' before any [code NAME] section", lineno);
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty()) throw parse_error("empty key", lineno);
        if (!specs.back().fields.emplace(key, value).second)
            throw parse_error("duplicate key '" + key + "'", lineno);
    }
    for (auto& s : specs) {
        s.ring = ring_from_name(need(s, "ring"));
        s.construction = need(s, "construction");
        if (s.construction != "four_circulant" && s.construction != "matrix" &&
            s.construction != "lift" && s.construction != "extension")
            throw parse_error("code '" + s.name + "': unknown construction '" +
                                  s.construction + "'",
                              s.line);
    }
    return specs;
}

std::string format_spec(const CodeSpec& s) {
    std::string out = "[code " + s.name + "]\n";
    out += "ring = " + std::string(ring_name(s.ring)) + "\n";
    out += "construction = " + s.construction + "\n";
    for (const auto& [k, v] : s.fields)
        if (k != "ring" && k != "construction") out += k + " = " + v + "\n";
    return out;
}

RingCode resolve_wrapped(const std::string& name, const Resolver& plain) {
    for (const char* wrap : {"psi", "phi", "mu"}) {
        std::string prefix = std::string(wrap) + "(";
        if (name.rfind(prefix, 0) == 0 && name.back() == ')') {
            RingCode base =
                resolve_wrapped(name.substr(prefix.size(), name.size() - prefix.size() - 1),
                                plain);
            if (wrap[0] == 'm') return project_mu(base);
            GrayMap m;
            if (wrap[1] == 's')  // psi
                m = base.ring == Ring::F4 ? GrayMap::PsiF4 : GrayMap::PsiF4u;
            else
                m = base.ring == Ring::F2uF2 ? GrayMap::PhiF2u : GrayMap::PhiF4u;
            if (gray_domain(m) != base.ring)
                throw ring_mismatch("'" + name + "': map does not apply to ring " +
                                    ring_name(base.ring));
            RingCode img = gray_image_code(m, base);
            img.prov.name = name;
            return img;
        }
    }
    return plain(name);
}

RingCode build_from_spec(const CodeSpec& s, const Resolver& resolve_base) {
    auto resolve = [&](const std::string& n) { return resolve_wrapped(n, resolve_base); };
    RingCode out;
    if (s.construction == "four_circulant") {
        Vec rA = parse_vector(need(s, "rA"), s.ring);
        Vec rB = parse_vector(need(s, "rB"), s.ring);
        out = make_four_circulant_code(rA, rB, s.name);
    } else if (s.construction == "matrix") {
        out = make_matrix_code(parse_rows(need(s, "rows"), s.ring, s), s.name);
    } else if (s.construction == "lift") {
        RingCode seed = resolve(need(s, "base"));
        if (s.ring != Ring::F4uF4)
            throw parse_error("code '" + s.name + "': lifts live over F4uF4", s.line);
        if (auto it = s.fields.find("index"); it != s.fields.end()) {
            out = lift_at(seed, std::stoull(it->second));
        } else {
            Vec rA = parse_vector(need(s, "rA"), s.ring);
            Vec rB = parse_vector(need(s, "rB"), s.ring);
            out = lift_from_rows(seed, rA, rB);
        }
        out.prov.name = s.name;
    } else if (s.construction == "extension") {
        RingCode base = resolve(need(s, "base"));
        if (base.ring != s.ring)
            throw parse_error("code '" + s.name + "': ring does not match base '" +
                                  need(s, "base") + "'",
                              s.line);
        ExtensionParams p;
        const std::string& thm = need(s, "theorem");
        if (thm != "A" && thm != "B")
            throw parse_error("code '" + s.name + "': theorem must be A or B", s.line);
        p.theorem = thm[0];
        p.X = parse_vector(need(s, "X"), s.ring);
        p.c = parse_element(need(s, "c"), s.ring);
        out = p.theorem == 'A' ? extend_A(base, p) : extend_B(base, p);
        out.prov.name = s.name;
    } else {
        throw parse_error("code '" + s.name + "': unknown construction", s.line);
    }
    return out;
}

CodeSpec spec_of(const RingCode& c) {
    CodeSpec s;
    s.name = c.prov.name.empty() ? "code" : c.prov.name;
    s.ring = c.ring;
    const std::string& kind = c.prov.kind;
    if (kind == "four_circulant") {
        s.construction = "four_circulant";
        s.fields["rA"] = c.prov.rA;
        s.fields["rB"] = c.prov.rB;
    } else if (kind == "lift" && !c.prov.base.empty()) {
        s.construction = "lift";
        s.fields["base"] = c.prov.base;
        s.fields["rA"] = c.prov.rA;
        s.fields["rB"] = c.prov.rB;
    } else if (kind == "extension" && !c.prov.base.empty()) {
        s.construction = "extension";
        s.fields["base"] = c.prov.base;
        s.fields["theorem"] = c.prov.theorem;
        s.fields["X"] = c.prov.X;
        s.fields["c"] = c.prov.c;
    } else {
        s.construction = "matrix";
        s.fields["rows"] = format_rows(c.gen);
    }
    s.fields["ring"] = ring_name(s.ring);
    s.fields["construction"] = s.construction;
    return s;
}

}  // namespace sdc
