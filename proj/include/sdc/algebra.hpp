#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>

#include "sdc/gray.hpp"
#include "sdc/linalg.hpp"

namespace sdc {

// Construction record carried with every code; serialized into reports and
// round-trippable through the code-spec text format.
struct Provenance {
    std::string kind;  // four_circulant | matrix | lift | extension | image | projection
    std::string name;
    std::string base;     // parent code name (lift / extension / image / projection)
    std::string rA, rB;   // circulant first rows (four_circulant, lift)
    std::string theorem;  // "A" or "B" (extension)
    std::string X, c;     // extension vector and unit
    std::string map;      // gray map name (image)
    std::optional<uint64_t> lift_index;
    std::optional<uint64_t> seed;  // RNG seed for randomly drawn parameters
    bool self_dual_verified = false;
};

struct RingCode {
    Ring ring = Ring::F2;
    Mat gen;
    Provenance prov;

    size_t length() const { return gen.cols; }
    size_t gens() const { return gen.rows; }
};

RingCode make_four_circulant_code(const Vec& rA, const Vec& rB, std::string name = "");
RingCode make_matrix_code(const Mat& g, std::string name = "");

// G G^T = 0 over the ring and the canonical binary image has rank = n/2
// (in binary coordinates), which together are equivalent to self-duality.
bool is_self_dual(const RingCode& c);

// Entry-wise reduction mod u: F4uF4 -> F4, F2uF2 -> F2.
RingCode project_mu(const RingCode& c);

// The image of c under one Gray map, as a code over the codomain ring
// (generators doubled; see gray_code_image).
RingCode gray_image_code(GrayMap m, const RingCode& c);

// --- lifts of four-circulant F4 seeds to F4uF4 ------------------------------

// Preimages of an F4 entry under mu, in enumeration order:
// x, x+u, x+uw, x+u+uw.
std::array<Elem, 4> mu_preimages(Elem x);

// 4^(2n) combinations; throws when the count overflows uint64.
uint64_t lift_count(const RingCode& seed);

// Exhaustive lift by lexicographic index over the preimage-choice vector
// (rA entries first, then rB; earlier entries vary slowest).
RingCode lift_at(const RingCode& seed, uint64_t index);

// Lift given explicit circulant rows; verifies mu(rows) matches the seed.
RingCode lift_from_rows(const RingCode& seed, const Vec& rA, const Vec& rB);

RingCode lift_random(const RingCode& seed, std::mt19937_64& rng);

// --- extensions --------------------------------------------------------------

struct ExtensionParams {
    char theorem = 'A';
    Vec X;
    Elem c;
};

void validate_extension_params(const RingCode& c, const ExtensionParams& p);

// (k+1) x (n+2) extension: top row (1, 0, X); row i+1 = (y_i, c y_i, r_i)
// with y_i = <r_i, X>. Requires <X,X> = 1.
RingCode extend_A(const RingCode& c, const ExtensionParams& p);

// Systematic (n+1) x (2n+2) extension of [I_n | A]: top row
// (1, 0, x_1..x_n, 1..1); row i+1 = (y_i, c y_i, e_i, A_i) with
// y_i = x_i + r_i, r_i = sum of row i of A. Requires <X,X> = 1 + n*1.
RingCode extend_B(const RingCode& c, const ExtensionParams& p);

// Draw a uniform X, then repair <X,X> to the required value by adjusting the
// first coordinate that fixes it.
Vec sample_extension_x(Ring r, size_t n, Elem target_ip, std::mt19937_64& rng);

}  // namespace sdc
