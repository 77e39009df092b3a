#pragma once

#include <utility>

#include "sdc/bincode.hpp"
#include "sdc/linalg.hpp"

namespace sdc {

// The four duality- and weight-preserving Gray maps:
//   psi_f4  : F4 -> F2^2,      a*w + b*(1+w)        |-> (a, b)
//   phi_f2u : F2uF2 -> F2^2,   a + b*u              |-> (b, a+b)
//   psi_f4u : F4uF4 -> F2uF2^2 (same (a,b) split, F2uF2 coefficients)
//   phi_f4u : F4uF4 -> F4^2    (same (b, a+b) split, F4 coefficients)
// Vector images use the block convention: the full first-component block
// followed by the full second-component block.
enum class GrayMap { PsiF4, PhiF2u, PsiF4u, PhiF4u };

Ring gray_domain(GrayMap m);
Ring gray_codomain(GrayMap m);
const char* gray_name(GrayMap m);

// The two output coordinates of a single symbol.
std::pair<Elem, Elem> gray_split(GrayMap m, Elem x);

// Length n -> length 2n, block layout.
Vec gray_apply(GrayMap m, const Vec& v);

struct GrayPath {
    std::vector<GrayMap> steps;

    bool composable_from(Ring start) const;
    Ring codomain(Ring start) const;

    // Fixed canonical route to F2: F4 -> psi_f4; F2uF2 -> phi_f2u;
    // F4uF4 -> psi_f4u, phi_f2u; F2 -> empty.
    static GrayPath canonical(Ring start);
};

Vec gray_path_apply(const GrayPath& path, const Vec& v);

int lee_weight(Elem x);
int lee_weight(const Vec& v);

// Image of the code generated by G under one map. The domain ring is a free
// rank-2 module over the codomain's scalar ring, so every generator row
// expands to two rows (the row itself and its multiple by w for psi maps,
// by u for phi maps).
Mat gray_code_image(GrayMap m, const Mat& g);

// Apply a path ending in F2 to all module generators and reduce.
BinaryCode binary_image(const Mat& g, const GrayPath& path);
BinaryCode binary_image(const Mat& g);  // canonical path for g.ring

}  // namespace sdc
