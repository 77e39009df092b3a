#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdc/ring.hpp"

using namespace sdc;

namespace {
const Ring kRings[] = {Ring::F2, Ring::F4, Ring::F2uF2, Ring::F4uF4};
}

TEST_CASE("ring axioms hold exhaustively") {
    for (Ring r : kRings) {
        auto elems = ring_elements(r);
        CHECK(int(elems.size()) == ring_size(r));
        for (Elem a : elems) {
            CHECK(ring_add(a, ring_zero(r)) == a);
            CHECK(ring_mul(a, ring_one(r)) == a);
            CHECK(ring_add(a, a) == ring_zero(r));  // characteristic 2
            for (Elem b : elems) {
                CHECK(ring_add(a, b) == ring_add(b, a));
                CHECK(ring_mul(a, b) == ring_mul(b, a));
                for (Elem c : elems) {
                    CHECK(ring_add(ring_add(a, b), c) == ring_add(a, ring_add(b, c)));
                    CHECK(ring_mul(ring_mul(a, b), c) == ring_mul(a, ring_mul(b, c)));
                    CHECK(ring_mul(a, ring_add(b, c)) ==
                          ring_add(ring_mul(a, b), ring_mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("defining relations") {
    Elem w{Ring::F4, 0x2}, u{Ring::F2uF2, 0x4};
    CHECK(ring_mul(w, w) == ring_add(ring_one(Ring::F4), w));  // w^2 = 1+w
    CHECK(ring_mul(u, u) == ring_zero(Ring::F2uF2));           // u^2 = 0
    Elem uw{Ring::F4uF4, 0x8};
    CHECK(ring_mul(uw, uw) == ring_zero(Ring::F4uF4));
    CHECK(ring_mul(Elem{Ring::F4uF4, 0x2}, Elem{Ring::F4uF4, 0x4}) == uw);  // w*u = uw
}

TEST_CASE("units and square roots of one") {
    // F2uF2: units are 1, 1+u; both square to 1.
    auto us = units_square_one(Ring::F2uF2);
    REQUIRE(us.size() == 2);
    CHECK(us[0].bits == 0x1);
    CHECK(us[1].bits == 0x5);
    // F4uF4: exactly the 1 + (u-part) elements.
    auto us4 = units_square_one(Ring::F4uF4);
    CHECK(us4.size() == 4);
    for (Elem c : us4) {
        CHECK(is_unit(c));
        CHECK(ring_mul(c, c) == ring_one(Ring::F4uF4));
        CHECK((c.bits & 0x3) == 0x1);
    }
    // u is a zero divisor
    CHECK_FALSE(is_unit(Elem{Ring::F2uF2, 0x4}));
    // F4: every nonzero element is a unit, only 1 squares to 1
    CHECK(units_square_one(Ring::F4).size() == 1);
}

TEST_CASE("token parse/format round-trips over every alphabet") {
    for (Ring r : kRings) {
        for (Elem e : ring_elements(r)) {
            std::string tok = format_element(e);
            CHECK(parse_element(tok, r) == e);
        }
    }
    CHECK(parse_element("w", Ring::F4).bits == 0x2);
    CHECK(parse_element("W", Ring::F4).bits == 0x3);
    CHECK(parse_element("3", Ring::F2uF2).bits == 0x5);  // 3 = 1+u
    CHECK(parse_element("u", Ring::F2uF2).bits == 0x4);
    // F4uF4 labels: z=u-part, a=1+, b=w+, c=1+w+; digit indexes the u-part
    CHECK(parse_element("z1", Ring::F4uF4).bits == 0x0);
    CHECK(parse_element("z2", Ring::F4uF4).bits == 0x4);   // u
    CHECK(parse_element("z3", Ring::F4uF4).bits == 0x8);   // uw
    CHECK(parse_element("z4", Ring::F4uF4).bits == 0xC);   // u+uw
    CHECK(parse_element("a2", Ring::F4uF4).bits == 0x5);   // 1+u
    CHECK(parse_element("b3", Ring::F4uF4).bits == 0xA);   // w+uw
    CHECK(parse_element("c4", Ring::F4uF4).bits == 0xF);   // 1+w+u+uw
    CHECK_THROWS_AS(parse_element("q1", Ring::F4uF4), parse_error);
    CHECK_THROWS_AS(parse_element("w", Ring::F2), parse_error);
    CHECK_THROWS_AS(parse_element("2", Ring::F2uF2), parse_error);
}

TEST_CASE("ring names") {
    for (Ring r : kRings) CHECK(ring_from_name(ring_name(r)) == r);
    CHECK_THROWS(ring_from_name("F8"));
}
