#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sdc/ring.hpp"

namespace sdc {

struct Vec {
    Ring ring = Ring::F2;
    std::vector<uint8_t> e;

    size_t size() const { return e.size(); }
    Elem at(size_t i) const { return {ring, e[i]}; }
    void set(size_t i, Elem x);

    friend bool operator==(const Vec& a, const Vec& b) {
        return a.ring == b.ring && a.e == b.e;
    }
};

struct Mat {
    Ring ring = Ring::F2;
    size_t rows = 0, cols = 0;
    std::vector<uint8_t> e;  // row-major payloads

    Mat() = default;
    Mat(Ring r, size_t nr, size_t nc) : ring(r), rows(nr), cols(nc), e(nr * nc, 0) {}

    Elem at(size_t r, size_t c) const { return {ring, e[r * cols + c]}; }
    void set(size_t r, size_t c, Elem x);
    Vec row(size_t r) const;
    void set_row(size_t r, const Vec& v);

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.ring == b.ring && a.rows == b.rows && a.cols == b.cols && a.e == b.e;
    }
};

// Vector text forms: "(t1,t2,...)" with the ring's tokens, or (F2 / F2uF2
// only) a contiguous character string, optionally parenthesized or
// bracketed, matching the printed X-strings.
Vec parse_vector(std::string_view text, Ring r);
std::string format_vector(const Vec& v);

Elem inner_product(const Vec& x, const Vec& y);
Vec vec_add(const Vec& x, const Vec& y);
Vec vec_scale(Elem s, const Vec& x);

// n x n matrix whose row i is first_row cyclically right-shifted i places.
Mat circulant(const Vec& first_row);

// [ I_2n | A B ; B^T A^T ] with A = circulant(rA), B = circulant(rB).
Mat four_circulant(const Vec& rA, const Vec& rB);

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_transpose(const Mat& a);
Mat mat_identity(Ring r, size_t n);
bool mat_is_zero(const Mat& a);
Mat mat_scale(Elem s, const Mat& a);

// AA^T + BB^T = I_n, evaluated on the circulants' first rows.
bool check_four_circulant_condition(const Vec& rA, const Vec& rB);

}  // namespace sdc
