#include "sdc/ring.hpp"

#include <array>

namespace sdc {

const char* ring_name(Ring r) {
    switch (r) {
        case Ring::F2: return "F2";
        case Ring::F4: return "F4";
        case Ring::F2uF2: return "F2uF2";
        case Ring::F4uF4: return "F4uF4";
    }
    return "?";
}

Ring ring_from_name(std::string_view name) {
    if (name == "F2") return Ring::F2;
    if (name == "F4") return Ring::F4;
    if (name == "F2uF2") return Ring::F2uF2;
    if (name == "F4uF4") return Ring::F4uF4;
    throw parse_error("unknown ring name '" + std::string(name) + "'", 0);
}

namespace {

// Products of the basis elements (1, w, u, uw) as payloads, derived from
// u^2 = 0 and w^2 = 1 + w.
constexpr uint8_t kBasisProduct[4][4] = {
    // 1      w      u      uw
    {0x1, 0x2, 0x4, 0x8},  // 1
    {0x2, 0x3, 0x8, 0xC},  // w   (w*w = 1+w, w*u = uw, w*uw = u+uw)
    {0x4, 0x8, 0x0, 0x0},  // u
    {0x8, 0xC, 0x0, 0x0},  // uw
};

constexpr std::array<std::array<uint8_t, 16>, 16> build_mul_table() {
    std::array<std::array<uint8_t, 16>, 16> t{};
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) {
            uint8_t acc = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    if ((a >> i & 1) && (b >> j & 1)) acc ^= kBasisProduct[i][j];
            t[a][b] = acc;
        }
    return t;
}

constexpr auto kMulTable = build_mul_table();

void require_same_ring(Elem x, Elem y, const char* op) {
    if (x.ring != y.ring)
        throw ring_mismatch(std::string(op) + ": operands from " + ring_name(x.ring) +
                            " and " + ring_name(y.ring));
}

}  // namespace

uint8_t mul_bits(uint8_t a, uint8_t b) { return kMulTable[a & 0xF][b & 0xF]; }

Elem ring_add(Elem x, Elem y) {
    require_same_ring(x, y, "ring_add");
    return {x.ring, static_cast<uint8_t>(x.bits ^ y.bits)};
}

Elem ring_mul(Elem x, Elem y) {
    require_same_ring(x, y, "ring_mul");
    return {x.ring, kMulTable[x.bits][y.bits]};
}

bool is_unit(Elem x) {
    for (uint8_t b = 0; b < 16; ++b) {
        if ((b & ~ring_mask(x.ring)) != 0) continue;
        if (kMulTable[x.bits][b] == 1) return true;
    }
    return false;
}

std::vector<Elem> ring_elements(Ring r) {
    std::vector<Elem> out;
    for (uint8_t b = 0; b < 16; ++b)
        if ((b & ~ring_mask(r)) == 0) out.push_back({r, b});
    return out;
}

std::vector<Elem> units_square_one(Ring r) {
    std::vector<Elem> out;
    for (Elem e : ring_elements(r))
        if (is_unit(e) && kMulTable[e.bits][e.bits] == 1) out.push_back(e);
    return out;
}

Elem parse_element(std::string_view token, Ring r) {
    uint8_t bits = 0xFF;
    switch (r) {
        case Ring::F2:
            if (token == "0") bits = 0x0;
            else if (token == "1") bits = 0x1;
            break;
        case Ring::F4:
            if (token == "0") bits = 0x0;
            else if (token == "1") bits = 0x1;
            else if (token == "w") bits = 0x2;
            else if (token == "W") bits = 0x3;
            break;
        case Ring::F2uF2:
            if (token == "0") bits = 0x0;
            else if (token == "1") bits = 0x1;
            else if (token == "u") bits = 0x4;
            else if (token == "3") bits = 0x5;
            break;
        case Ring::F4uF4:
            if (token.size() == 2 && token[1] >= '1' && token[1] <= '4') {
                uint8_t hi = static_cast<uint8_t>((token[1] - '1') << 2);
                if (token[0] == 'z') bits = hi;
                else if (token[0] == 'a') bits = static_cast<uint8_t>(hi | 0x1);
                else if (token[0] == 'b') bits = static_cast<uint8_t>(hi | 0x2);
                else if (token[0] == 'c') bits = static_cast<uint8_t>(hi | 0x3);
            }
            break;
    }
    if (bits == 0xFF)
        throw parse_error("invalid token '" + std::string(token) + "' for ring " +
                          ring_name(r), 0);
    return {r, bits};
}

std::string format_element(Elem x) {
    switch (x.ring) {
        case Ring::F2:
            return x.bits ? "1" : "0";
        case Ring::F4: {
            static const char* t[] = {"0", "1", "w", "W"};
            return t[x.bits & 0x3];
        }
        case Ring::F2uF2: {
            switch (x.bits) {
                case 0x0: return "0";
                case 0x1: return "1";
                case 0x4: return "u";
                case 0x5: return "3";
            }
            break;
        }
        case Ring::F4uF4: {
            static const char letter[] = {'z', 'a', 'b', 'c'};
            std::string s(1, letter[x.bits & 0x3]);
            s += static_cast<char>('1' + (x.bits >> 2));
            return s;
        }
    }
    throw std::logic_error("format_element: corrupt payload");
}

}  // namespace sdc
