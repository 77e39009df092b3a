#include "sdc/tables.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "sdc/codespec.hpp"

namespace sdc {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) out.push_back(field);
    return out;
}

struct TableShape {
    const char* kind;
    Ring ring;
    size_t fields;
};

// Column layouts of data/tables/tN.tsv.
//   seeds:          name rA rB d
//   lifts:          name base rA rB beta flag
//   extensions:     base theorem X c gamma beta flag
//   four_circulant: name [base] rA rB <measure...>
TableShape shape_of(int id) {
    switch (id) {
        case 1: return {"seeds", Ring::F4, 4};
        case 2: return {"lifts", Ring::F4uF4, 6};
        case 3:
        case 4:
        case 5:
        case 6:
        case 7:
        case 8: return {"extensions", Ring::F2uF2, 7};
        case 9: return {"four_circulant", Ring::F2uF2, 5};
        case 10: return {"four_circulant", Ring::F2, 5};
        case 11: return {"four_circulant", Ring::F4uF4, 5};
    }
    throw std::invalid_argument("table id must be 1..11");
}

Table load_table(int id) {
    TableShape sh = shape_of(id);
    Table t;
    t.id = id;
    t.kind = sh.kind;
    t.ring = sh.ring;
    std::string path = data_dir() + "/tables/t" + std::to_string(id) + ".tsv";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table data file " + path);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto f = split_tabs(line);
        if (f.size() != sh.fields)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected " + std::to_string(sh.fields) + " fields");
        TableRow r;
        if (t.kind == "seeds") {
            r.name = f[0], r.rA = f[1], r.rB = f[2];
            r.d = std::stoi(f[3]);
        } else if (t.kind == "lifts") {
            r.name = f[0], r.base = f[1], r.rA = f[2], r.rB = f[3];
            r.beta = std::stoll(f[4]);
            r.flag = f[5];
        } else if (t.kind == "extensions") {
            r.base = f[0];
            r.theorem = f[1].at(0);
            r.X = f[2], r.c = f[3];
            r.gamma = std::stoll(f[4]);
            r.beta = std::stoll(f[5]);
            r.flag = f[6];
            r.name = "t" + std::to_string(id) + "_" + std::to_string(t.rows.size() + 1);
        } else {  // four_circulant
            r.name = f[0];
            size_t i = 1;
            if (id != 10) r.base = f[i++];
            r.rA = f[i++], r.rB = f[i++];
            if (id == 9) r.I16 = std::stoull(f[i]);
            if (id == 10) {
                r.A8 = std::stoull(f[i++]);
                r.I8 = std::stoull(f[i]);
                r.d = 8;
            }
            if (id == 11) r.alpha = std::stoll(f[i]);
        }
        t.rows.push_back(std::move(r));
    }
    if (t.rows.empty()) throw std::runtime_error(path + ": no rows");
    return t;
}

}  // namespace

std::string data_dir() {
    if (const char* env = std::getenv("SDC_DATA_DIR")) return env;
#ifdef SDC_DEFAULT_DATA_DIR
    return SDC_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

const Table& table_data(int id) {
    static std::mutex mu;
    static std::map<int, Table> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(id);
    if (it == cache.end()) it = cache.emplace(id, load_table(id)).first;
    return it->second;
}

RingCode build_table_row(const Table& t, const TableRow& row) {
    if (t.kind == "seeds" || t.kind == "four_circulant") {
        RingCode c = make_four_circulant_code(parse_vector(row.rA, t.ring),
                                              parse_vector(row.rB, t.ring), row.name);
        if (!row.base.empty()) c.prov.base = row.base;
        return c;
    }
    if (t.kind == "lifts") {
        RingCode c = lift_from_rows(builtin_code(row.base), parse_vector(row.rA, t.ring),
                                    parse_vector(row.rB, t.ring));
        c.prov.name = row.name;
        return c;
    }
    // extensions
    RingCode base = resolve_wrapped(row.base, builtin_code);
    ExtensionParams p;
    p.theorem = row.theorem;
    p.X = parse_vector(row.X, t.ring);
    p.c = parse_element(row.c, t.ring);
    RingCode out = p.theorem == 'A' ? extend_A(base, p) : extend_B(base, p);
    out.prov.name = row.name;
    return out;
}

namespace {

RingCode from_table_by_name(int id, const std::string& name) {
    const Table& t = table_data(id);
    for (const auto& row : t.rows)
        if (row.name == name) return build_table_row(t, row);
    throw std::runtime_error("builtin code '" + name + "' missing from table " +
                             std::to_string(id));
}

}  // namespace

RingCode builtin_code(const std::string& name) {
    if (name == "C64")
        return make_four_circulant_code(parse_vector("(u,0,0,0,u,1,u,3)", Ring::F2uF2),
                                        parse_vector("(u,u,0,1,1,3,3,3)", Ring::F2uF2),
                                        "C64");
    if (name == "C88")
        return make_four_circulant_code(parse_vector("11101010001", Ring::F2),
                                        parse_vector("10110101101", Ring::F2), "C88");
    if (name == "C96")
        return make_four_circulant_code(parse_vector("(w,1,0,W,w,w)", Ring::F4),
                                        parse_vector("(0,W,1,0,W,0)", Ring::F4), "C96");
    if (name.size() >= 2 && name[0] == 'C' && name[1] >= '1' && name[1] <= '5' &&
        name.size() == 2)
        return from_table_by_name(1, name);
    if (name.size() == 2 && std::string("JKLMN").find(name[0]) != std::string::npos)
        return from_table_by_name(2, name);
    if (name.size() == 2 && name[0] == 'D') return from_table_by_name(10, name);
    if (name.rfind("L80_", 0) == 0 || name.rfind("L88_", 0) == 0)
        return from_table_by_name(9, name);
    if (name.rfind("L96_", 0) == 0) return from_table_by_name(11, name);
    throw std::runtime_error("unknown code name '" + name + "'");
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> v{"C64", "C88", "C96"};
    for (int t : {1, 2, 9, 10, 11})
        for (const auto& row : table_data(t).rows) v.push_back(row.name);
    return v;
}

}  // namespace sdc
