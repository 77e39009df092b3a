#include "sdc/gray.hpp"

#include <stdexcept>

namespace sdc {

Ring gray_domain(GrayMap m) {
    switch (m) {
        case GrayMap::PsiF4: return Ring::F4;
        case GrayMap::PhiF2u: return Ring::F2uF2;
        case GrayMap::PsiF4u: return Ring::F4uF4;
        case GrayMap::PhiF4u: return Ring::F4uF4;
    }
    throw std::logic_error("gray_domain");
}

Ring gray_codomain(GrayMap m) {
    switch (m) {
        case GrayMap::PsiF4: return Ring::F2;
        case GrayMap::PhiF2u: return Ring::F2;
        case GrayMap::PsiF4u: return Ring::F2uF2;
        case GrayMap::PhiF4u: return Ring::F4;
    }
    throw std::logic_error("gray_codomain");
}

const char* gray_name(GrayMap m) {
    switch (m) {
        case GrayMap::PsiF4: return "psi_f4";
        case GrayMap::PhiF2u: return "phi_f2u";
        case GrayMap::PsiF4u: return "psi_f4u";
        case GrayMap::PhiF4u: return "phi_f4u";
    }
    return "?";
}

std::pair<Elem, Elem> gray_split(GrayMap m, Elem x) {
    if (x.ring != gray_domain(m))
        throw ring_mismatch(std::string(gray_name(m)) + ": element from " +
                            ring_name(x.ring));
    uint8_t x0 = x.bits & 1, x1 = x.bits >> 1 & 1, x2 = x.bits >> 2 & 1,
            x3 = x.bits >> 3 & 1;
    Ring cod = gray_codomain(m);
    switch (m) {
        case GrayMap::PsiF4:
            return {{cod, static_cast<uint8_t>(x0 ^ x1)}, {cod, x0}};
        case GrayMap::PhiF2u:
            return {{cod, x2}, {cod, static_cast<uint8_t>(x0 ^ x2)}};
        case GrayMap::PsiF4u:
            return {{cod, static_cast<uint8_t>((x0 ^ x1) | (x2 ^ x3) << 2)},
                    {cod, static_cast<uint8_t>(x0 | x2 << 2)}};
        case GrayMap::PhiF4u:
            return {{cod, static_cast<uint8_t>(x2 | x3 << 1)},
                    {cod, static_cast<uint8_t>((x0 ^ x2) | (x1 ^ x3) << 1)}};
    }
    throw std::logic_error("gray_split");
}

Vec gray_apply(GrayMap m, const Vec& v) {
    if (v.ring != gray_domain(m))
        throw ring_mismatch(std::string(gray_name(m)) + ": vector over " +
                            ring_name(v.ring));
    size_t n = v.size();
    Vec out{gray_codomain(m), std::vector<uint8_t>(2 * n, 0)};
    for (size_t i = 0; i < n; ++i) {
        auto [first, second] = gray_split(m, v.at(i));
        out.e[i] = first.bits;
        out.e[n + i] = second.bits;
    }
    return out;
}

bool GrayPath::composable_from(Ring start) const {
    Ring cur = start;
    for (GrayMap m : steps) {
        if (gray_domain(m) != cur) return false;
        cur = gray_codomain(m);
    }
    return true;
}

Ring GrayPath::codomain(Ring start) const {
    Ring cur = start;
    for (GrayMap m : steps) {
        if (gray_domain(m) != cur)
            throw ring_mismatch("gray path: non-composable step");
        cur = gray_codomain(m);
    }
    return cur;
}

GrayPath GrayPath::canonical(Ring start) {
    switch (start) {
        case Ring::F2: return {{}};
        case Ring::F4: return {{GrayMap::PsiF4}};
        case Ring::F2uF2: return {{GrayMap::PhiF2u}};
        case Ring::F4uF4: return {{GrayMap::PsiF4u, GrayMap::PhiF2u}};
    }
    throw std::logic_error("GrayPath::canonical");
}

Vec gray_path_apply(const GrayPath& path, const Vec& v) {
    Vec cur = v;
    for (GrayMap m : path.steps) cur = gray_apply(m, cur);
    return cur;
}

int lee_weight(Elem x) {
    Vec v{x.ring, {x.bits}};
    return lee_weight(v);
}

int lee_weight(const Vec& v) {
    Vec img = gray_path_apply(GrayPath::canonical(v.ring), v);
    int w = 0;
    for (uint8_t b : img.e) w += b & 1;
    return w;
}

Mat gray_code_image(GrayMap m, const Mat& g) {
    if (g.ring != gray_domain(m))
        throw ring_mismatch(std::string(gray_name(m)) + ": matrix over " +
                            ring_name(g.ring));
    // scalar ring of the codomain: psi maps are linear over the u-part-
    // matching subring via basis {1, w}; phi maps via basis {1, u}.
    uint8_t s = (m == GrayMap::PsiF4 || m == GrayMap::PsiF4u) ? 0x2 : 0x4;
    Elem scalar{g.ring, s};
    Mat out(gray_codomain(m), 2 * g.rows, 2 * g.cols);
    for (size_t r = 0; r < g.rows; ++r) {
        out.set_row(2 * r, gray_apply(m, g.row(r)));
        out.set_row(2 * r + 1, gray_apply(m, vec_scale(scalar, g.row(r))));
    }
    return out;
}

BinaryCode binary_image(const Mat& g, const GrayPath& path) {
    if (!path.composable_from(g.ring) || path.codomain(g.ring) != Ring::F2)
        throw ring_mismatch("binary_image: path does not map " +
                            std::string(ring_name(g.ring)) + " to F2");
    Mat cur = g;
    for (GrayMap m : path.steps) cur = gray_code_image(m, cur);
    size_t n = cur.cols, wpr = (n + 63) / 64;
    std::vector<uint64_t> rows(cur.rows * wpr, 0);
    for (size_t r = 0; r < cur.rows; ++r)
        for (size_t c = 0; c < n; ++c)
            if (cur.e[r * n + c] & 1) rows[r * wpr + (c >> 6)] |= uint64_t(1) << (c & 63);
    return rank_and_systematize(n, rows, cur.rows, wpr);
}

BinaryCode binary_image(const Mat& g) {
    return binary_image(g, GrayPath::canonical(g.ring));
}

}  // namespace sdc
