#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Exact arithmetic for the four characteristic-2 rings
//   F2, F4 = F2[w]/(w^2+w+1), F2+uF2 (u^2 = 0), F4+uF4.
// Every element is encoded in a 4-bit payload holding the coefficients of
// the basis (1, w, u, uw); the smaller rings use the obvious sub-masks, so
// a single multiplication table serves all four rings.

namespace sdc {

enum class Ring : uint8_t { F2 = 0, F4 = 1, F2uF2 = 2, F4uF4 = 3 };

struct ring_mismatch : std::runtime_error {
    ring_mismatch(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
    parse_error(const std::string& what, size_t position)
        : std::runtime_error(what), pos(position) {}
    size_t pos;
};

struct Elem {
    Ring ring;
    uint8_t bits;  // bit0 = 1, bit1 = w, bit2 = u, bit3 = uw

    friend bool operator==(const Elem& a, const Elem& b) {
        return a.ring == b.ring && a.bits == b.bits;
    }
};

constexpr uint8_t ring_mask(Ring r) {
    switch (r) {
        case Ring::F2: return 0x1;
        case Ring::F4: return 0x3;
        case Ring::F2uF2: return 0x5;
        case Ring::F4uF4: return 0xF;
    }
    return 0;
}

constexpr int ring_size(Ring r) {
    switch (r) {
        case Ring::F2: return 2;
        case Ring::F4: return 4;
        case Ring::F2uF2: return 4;
        case Ring::F4uF4: return 16;
    }
    return 0;
}

constexpr bool ring_has_u(Ring r) { return r == Ring::F2uF2 || r == Ring::F4uF4; }
constexpr bool ring_has_w(Ring r) { return r == Ring::F4 || r == Ring::F4uF4; }

const char* ring_name(Ring r);
Ring ring_from_name(std::string_view name);

inline Elem ring_zero(Ring r) { return {r, 0}; }
inline Elem ring_one(Ring r) { return {r, 1}; }

// Raw payload product under u^2 = 0, w^2 = 1 + w; valid for every sub-ring.
uint8_t mul_bits(uint8_t a, uint8_t b);

Elem ring_add(Elem x, Elem y);
Elem ring_mul(Elem x, Elem y);

bool is_unit(Elem x);

// All elements of the ring, in payload order.
std::vector<Elem> ring_elements(Ring r);

// The units c with c*c = 1, found by scanning the whole ring.
std::vector<Elem> units_square_one(Ring r);

// Closed token alphabets:
//   F2     {0,1}
//   F4     {0,1,w,W}           (W = 1+w)
//   F2uF2  {0,1,u,3}           (3 = 1+u)
//   F4uF4  {z1..z4,a1..a4,b1..b4,c1..c4}
Elem parse_element(std::string_view token, Ring r);
std::string format_element(Elem x);

}  // namespace sdc
