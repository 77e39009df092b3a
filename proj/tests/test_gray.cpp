#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdc/gray.hpp"

using namespace sdc;

namespace {
const GrayMap kMaps[] = {GrayMap::PsiF4, GrayMap::PhiF2u, GrayMap::PsiF4u,
                         GrayMap::PhiF4u};
}

TEST_CASE("symbol maps are additive bijections") {
    for (GrayMap m : kMaps) {
        Ring dom = gray_domain(m), cod = gray_codomain(m);
        auto elems = ring_elements(dom);
        std::vector<std::pair<Elem, Elem>> images;
        for (Elem x : elems) {
            auto ix = gray_split(m, x);
            CHECK(ix.first.ring == cod);
            CHECK(ix.second.ring == cod);
            // injectivity
            for (auto& prev : images)
                CHECK_FALSE((prev.first == ix.first && prev.second == ix.second));
            images.push_back(ix);
            for (Elem y : elems) {
                auto iy = gray_split(m, y);
                auto ixy = gray_split(m, ring_add(x, y));
                CHECK(ixy.first == ring_add(ix.first, iy.first));
                CHECK(ixy.second == ring_add(ix.second, iy.second));
            }
        }
        CHECK(images.size() == elems.size());
    }
}

TEST_CASE("lee weight equals weight of the canonical binary image") {
    for (Ring r : {Ring::F2, Ring::F4, Ring::F2uF2, Ring::F4uF4}) {
        GrayPath p = GrayPath::canonical(r);
        REQUIRE(p.composable_from(r));
        CHECK(p.codomain(r) == Ring::F2);
        for (Elem x : ring_elements(r)) {
            Vec v{r, {x.bits}};
            Vec img = gray_path_apply(p, v);
            int hw = 0;
            for (uint8_t b : img.e) hw += b;
            CHECK(lee_weight(x) == hw);
        }
    }
}

TEST_CASE("symbol maps preserve lee weight") {
    for (GrayMap m : kMaps) {
        for (Elem x : ring_elements(gray_domain(m))) {
            auto ix = gray_split(m, x);
            CHECK(lee_weight(x) == lee_weight(ix.first) + lee_weight(ix.second));
        }
    }
}

TEST_CASE("maps preserve orthogonality on all symbol pairs") {
    // <x,y> + <x',y'> over pairs: for length-1 vectors the image inner
    // product of the two output coordinates must vanish exactly when the
    // Euclidean pairing the duality proof uses does. We verify the operative
    // consequence directly: images of orthogonal vectors stay orthogonal.
    for (GrayMap m : kMaps) {
        Ring dom = gray_domain(m);
        auto elems = ring_elements(dom);
        for (Elem x1 : elems)
            for (Elem x2 : elems)
                for (Elem y1 : elems)
                    for (Elem y2 : elems) {
                        Vec x{dom, {x1.bits, x2.bits}}, y{dom, {y1.bits, y2.bits}};
                        if (!(inner_product(x, y) == ring_zero(dom))) continue;
                        Vec ix = gray_apply(m, x), iy = gray_apply(m, y);
                        CHECK(inner_product(ix, iy) == ring_zero(gray_codomain(m)));
                    }
    }
}

TEST_CASE("vector images use the block layout") {
    // psi_f4(w, 1): w = 1*w + 0*W -> (1,0); 1 = 0*w + 1*W... check blocks
    Vec v{Ring::F4, {0x2, 0x1}};
    Vec img = gray_apply(GrayMap::PsiF4, v);
    REQUIRE(img.size() == 4);
    auto s0 = gray_split(GrayMap::PsiF4, v.at(0));
    auto s1 = gray_split(GrayMap::PsiF4, v.at(1));
    CHECK(img.at(0) == s0.first);
    CHECK(img.at(1) == s1.first);
    CHECK(img.at(2) == s0.second);
    CHECK(img.at(3) == s1.second);
}

TEST_CASE("image codes double the generators and match per-row images") {
    Mat g(Ring::F4, 1, 2);
    g.set(0, 0, {Ring::F4, 0x2});
    g.set(0, 1, {Ring::F4, 0x3});
    Mat img = gray_code_image(GrayMap::PsiF4, g);
    CHECK(img.ring == Ring::F2);
    CHECK(img.rows == 2);
    CHECK(img.cols == 4);
    CHECK(img.row(0) == gray_apply(GrayMap::PsiF4, g.row(0)));
    Vec wrow = vec_scale({Ring::F4, 0x2}, g.row(0));
    CHECK(img.row(1) == gray_apply(GrayMap::PsiF4, wrow));

    Mat g2(Ring::F2uF2, 1, 1);
    g2.set(0, 0, {Ring::F2uF2, 0x5});
    Mat img2 = gray_code_image(GrayMap::PhiF2u, g2);
    CHECK(img2.rows == 2);
    Vec urow = vec_scale({Ring::F2uF2, 0x4}, g2.row(0));
    CHECK(img2.row(1) == gray_apply(GrayMap::PhiF2u, urow));
}

TEST_CASE("binary image of a free code has doubled rank per map step") {
    // one F4uF4 generator -> canonical path psi then phi -> 4 binary rows
    Mat g(Ring::F4uF4, 1, 3);
    g.set(0, 0, {Ring::F4uF4, 0x1});
    g.set(0, 1, {Ring::F4uF4, 0x2});
    g.set(0, 2, {Ring::F4uF4, 0x7});
    BinaryCode bc = binary_image(g);
    CHECK(bc.n == 12);
    CHECK(bc.k == 4);
}

TEST_CASE("canonical paths") {
    CHECK(GrayPath::canonical(Ring::F2).steps.empty());
    CHECK(GrayPath::canonical(Ring::F4).steps ==
          std::vector<GrayMap>{GrayMap::PsiF4});
    CHECK(GrayPath::canonical(Ring::F2uF2).steps ==
          std::vector<GrayMap>{GrayMap::PhiF2u});
    CHECK(GrayPath::canonical(Ring::F4uF4).steps ==
          (std::vector<GrayMap>{GrayMap::PsiF4u, GrayMap::PhiF2u}));
    GrayPath bad{{GrayMap::PsiF4}};
    CHECK_FALSE(bad.composable_from(Ring::F2uF2));
}
