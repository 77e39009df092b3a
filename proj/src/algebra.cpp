#include "sdc/algebra.hpp"

#include <stdexcept>

namespace sdc {

namespace {

std::string fmt_rows(const Vec& v) { return format_vector(v); }

Elem parity_element(Ring r, size_t n) {
    // n * 1 in characteristic 2
    return {r, uint8_t(n % 2)};
}

}  // namespace

RingCode make_four_circulant_code(const Vec& rA, const Vec& rB, std::string name) {
    RingCode c;
    c.ring = rA.ring;
    c.gen = four_circulant(rA, rB);
    c.prov.kind = "four_circulant";
    c.prov.name = std::move(name);
    c.prov.rA = fmt_rows(rA);
    c.prov.rB = fmt_rows(rB);
    return c;
}

RingCode make_matrix_code(const Mat& g, std::string name) {
    RingCode c;
    c.ring = g.ring;
    c.gen = g;
    c.prov.kind = "matrix";
    c.prov.name = std::move(name);
    return c;
}

bool is_self_dual(const RingCode& c) {
    Mat gt = mat_transpose(c.gen);
    if (!mat_is_zero(mat_mul(c.gen, gt))) return false;
    BinaryCode img = binary_image(c.gen);
    return 2 * img.k == img.n;
}

RingCode project_mu(const RingCode& c) {
    if (!ring_has_u(c.ring)) throw ring_mismatch("project_mu: ring has no u");
    RingCode out;
    out.ring = c.ring == Ring::F4uF4 ? Ring::F4 : Ring::F2;
    out.gen = Mat(out.ring, c.gen.rows, c.gen.cols);
    for (size_t i = 0; i < c.gen.e.size(); ++i)
        out.gen.e[i] = c.gen.e[i] & ring_mask(out.ring);
    out.prov.kind = "projection";
    out.prov.base = c.prov.name;
    if (!c.prov.name.empty()) out.prov.name = "mu(" + c.prov.name + ")";
    return out;
}

RingCode gray_image_code(GrayMap m, const RingCode& c) {
    if (gray_domain(m) != c.ring) throw ring_mismatch("gray_image_code: domain mismatch");
    RingCode out;
    out.ring = gray_codomain(m);
    out.gen = gray_code_image(m, c.gen);
    out.prov.kind = "image";
    out.prov.map = gray_name(m);
    out.prov.base = c.prov.name;
    if (!c.prov.name.empty())
        out.prov.name = std::string(gray_name(m)) + "(" + c.prov.name + ")";
    return out;
}

std::array<Elem, 4> mu_preimages(Elem x) {
    if (x.ring != Ring::F4) throw ring_mismatch("mu_preimages: expected an F4 element");
    constexpr Ring up = Ring::F4uF4;
    return {Elem{up, x.bits}, Elem{up, uint8_t(x.bits ^ 0x4)},
            Elem{up, uint8_t(x.bits ^ 0x8)}, Elem{up, uint8_t(x.bits ^ 0xC)}};
}

namespace {

void require_four_circulant_seed(const RingCode& seed) {
    if (seed.prov.kind != "four_circulant" && seed.prov.kind != "lift")
        throw std::invalid_argument("lift: seed must be a four-circulant code");
    if (seed.ring != Ring::F4)
        throw ring_mismatch("lift: seed must be over F4");
}

std::pair<Vec, Vec> seed_rows(const RingCode& seed) {
    return {parse_vector(seed.prov.rA, seed.ring), parse_vector(seed.prov.rB, seed.ring)};
}

RingCode finish_lift(const RingCode& seed, const Vec& rA, const Vec& rB) {
    RingCode out = make_four_circulant_code(rA, rB);
    out.prov.kind = "lift";
    out.prov.base = seed.prov.name;
    return out;
}

}  // namespace

uint64_t lift_count(const RingCode& seed) {
    require_four_circulant_seed(seed);
    size_t entries = 2 * parse_vector(seed.prov.rA, seed.ring).size();
    if (entries >= 32) throw std::overflow_error("lift_count: 4^(2n) exceeds uint64");
    return uint64_t(1) << (2 * entries);
}

RingCode lift_at(const RingCode& seed, uint64_t index) {
    require_four_circulant_seed(seed);
    if (index >= lift_count(seed))
        throw std::out_of_range("lift_at: index beyond 4^(2n)");
    auto [sa, sb] = seed_rows(seed);
    size_t n = sa.size();
    Vec rA{Ring::F4uF4, std::vector<uint8_t>(n)};
    Vec rB{Ring::F4uF4, std::vector<uint8_t>(n)};
    // base-4 digits, earliest entry (rA[0]) in the most significant position
    size_t entries = 2 * n;
    for (size_t pos = 0; pos < entries; ++pos) {
        unsigned digit = unsigned(index >> (2 * (entries - 1 - pos)) & 3);
        Elem src = pos < n ? sa.at(pos) : sb.at(pos - n);
        Elem lifted = mu_preimages(src)[digit];
        (pos < n ? rA : rB).e[pos < n ? pos : pos - n] = lifted.bits;
    }
    RingCode out = finish_lift(seed, rA, rB);
    out.prov.lift_index = index;
    return out;
}

RingCode lift_from_rows(const RingCode& seed, const Vec& rA, const Vec& rB) {
    require_four_circulant_seed(seed);
    auto [sa, sb] = seed_rows(seed);
    if (rA.ring != Ring::F4uF4 || rB.ring != Ring::F4uF4)
        throw ring_mismatch("lift_from_rows: rows must be over F4uF4");
    if (rA.size() != sa.size() || rB.size() != sb.size())
        throw std::invalid_argument("lift_from_rows: length mismatch with seed");
    for (size_t i = 0; i < sa.size(); ++i)
        if ((rA.e[i] & 0x3) != sa.e[i] || (rB.e[i] & 0x3) != sb.e[i])
            throw std::invalid_argument("lift_from_rows: rows do not project onto the seed");
    return finish_lift(seed, rA, rB);
}

RingCode lift_random(const RingCode& seed, std::mt19937_64& rng) {
    uint64_t count = lift_count(seed);
    return lift_at(seed, std::uniform_int_distribution<uint64_t>(0, count - 1)(rng));
}

void validate_extension_params(const RingCode& c, const ExtensionParams& p) {
    if (p.X.ring != c.ring || p.c.ring != c.ring)
        throw ring_mismatch("extension: X and c must share the code's ring");
    if (!is_unit(p.c) || ring_mul(p.c, p.c) != ring_one(c.ring))
        throw std::invalid_argument("extension: c must be a unit with c*c = 1");
    Elem required = p.theorem == 'A' ? ring_one(c.ring)
                                     : ring_add(ring_one(c.ring), parity_element(c.ring, p.X.size()));
    if (inner_product(p.X, p.X) != required)
        throw std::invalid_argument("extension: <X,X> has the wrong value");
    if (!is_self_dual(c)) throw std::invalid_argument("extension: base code is not self-dual");
}

RingCode extend_A(const RingCode& c, const ExtensionParams& p) {
    if (p.theorem != 'A') throw std::invalid_argument("extend_A: params are not theorem-A");
    if (p.X.size() != c.length()) throw std::invalid_argument("extend_A: |X| != n");
    validate_extension_params(c, p);
    size_t n = c.length(), k = c.gens();
    Mat g(c.ring, k + 1, n + 2);
    g.set(0, 0, ring_one(c.ring));
    for (size_t j = 0; j < n; ++j) g.set(0, j + 2, p.X.at(j));
    for (size_t i = 0; i < k; ++i) {
        Vec r = c.gen.row(i);
        Elem y = inner_product(r, p.X);
        g.set(i + 1, 0, y);
        g.set(i + 1, 1, ring_mul(p.c, y));
        for (size_t j = 0; j < n; ++j) g.set(i + 1, j + 2, r.at(j));
    }
    RingCode out = make_matrix_code(g);
    out.prov.kind = "extension";
    out.prov.base = c.prov.name;
    out.prov.theorem = "A";
    out.prov.X = format_vector(p.X);
    out.prov.c = format_element(p.c);
    if (!is_self_dual(out)) throw std::logic_error("extend_A: result failed the self-dual check");
    out.prov.self_dual_verified = true;
    return out;
}

RingCode extend_B(const RingCode& c, const ExtensionParams& p) {
    if (p.theorem != 'B') throw std::invalid_argument("extend_B: params are not theorem-B");
    size_t n = c.gens();
    if (c.length() != 2 * n)
        throw std::invalid_argument("extend_B: generator must be n x 2n");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (c.gen.at(i, j) != (i == j ? ring_one(c.ring) : ring_zero(c.ring)))
                throw std::invalid_argument("extend_B: generator is not [I_n | A]");
    if (p.X.size() != n) throw std::invalid_argument("extend_B: |X| != n");
    validate_extension_params(c, p);
    Mat g(c.ring, n + 1, 2 * n + 2);
    g.set(0, 0, ring_one(c.ring));
    for (size_t j = 0; j < n; ++j) {
        g.set(0, j + 2, p.X.at(j));
        g.set(0, n + j + 2, ring_one(c.ring));
    }
    for (size_t i = 0; i < n; ++i) {
        Elem r = ring_zero(c.ring);
        for (size_t j = 0; j < n; ++j) r = ring_add(r, c.gen.at(i, n + j));
        Elem y = ring_add(p.X.at(i), r);
        g.set(i + 1, 0, y);
        g.set(i + 1, 1, ring_mul(p.c, y));
        g.set(i + 1, i + 2, ring_one(c.ring));
        for (size_t j = 0; j < n; ++j) g.set(i + 1, n + j + 2, c.gen.at(i, n + j));
    }
    RingCode out = make_matrix_code(g);
    out.prov.kind = "extension";
    out.prov.base = c.prov.name;
    out.prov.theorem = "B";
    out.prov.X = format_vector(p.X);
    out.prov.c = format_element(p.c);
    if (!is_self_dual(out)) throw std::logic_error("extend_B: result failed the self-dual check");
    out.prov.self_dual_verified = true;
    return out;
}

Vec sample_extension_x(Ring r, size_t n, Elem target_ip, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, ring_size(r) - 1);
    auto elems = ring_elements(r);
    Vec x{r, std::vector<uint8_t>(n)};
    for (size_t i = 0; i < n; ++i) x.e[i] = elems[size_t(pick(rng))].bits;
    Elem diff = ring_add(inner_product(x, x), target_ip);
    if (diff.bits) {
        // <X,X> moves by d*d when coordinate i moves by d (characteristic 2),
        // so repair the first coordinate with any square root of diff.
        for (Elem d : ring_elements(r)) {
            if (ring_mul(d, d) == diff) {
                x.e[0] = ring_add(x.at(0), d).bits;
                diff = {r, 0};
                break;
            }
        }
        if (diff.bits)
            throw std::logic_error("sample_extension_x: unreachable inner product");
    }
    return x;
}

}  // namespace sdc
