#include "sdc/linalg.hpp"

namespace sdc {

namespace {

void require_same(Ring a, Ring b, const char* op) {
    if (a != b)
        throw ring_mismatch(std::string(op) + ": operands from " + ring_name(a) +
                            " and " + ring_name(b));
}

bool single_char_alphabet(Ring r) { return r == Ring::F2 || r == Ring::F2uF2; }

}  // namespace

void Vec::set(size_t i, Elem x) {
    require_same(ring, x.ring, "Vec::set");
    e[i] = x.bits;
}

void Mat::set(size_t r, size_t c, Elem x) {
    require_same(ring, x.ring, "Mat::set");
    e[r * cols + c] = x.bits;
}

Vec Mat::row(size_t r) const {
    Vec v{ring, std::vector<uint8_t>(e.begin() + r * cols, e.begin() + (r + 1) * cols)};
    return v;
}

void Mat::set_row(size_t r, const Vec& v) {
    require_same(ring, v.ring, "Mat::set_row");
    if (v.size() != cols) throw std::invalid_argument("set_row: length mismatch");
    std::copy(v.e.begin(), v.e.end(), e.begin() + r * cols);
}

Vec parse_vector(std::string_view text, Ring r) {
    // strip one layer of () or []
    size_t lo = 0, hi = text.size();
    while (lo < hi && (text[lo] == ' ' || text[lo] == '\t')) ++lo;
    while (hi > lo && (text[hi - 1] == ' ' || text[hi - 1] == '\t')) --hi;
    if (hi > lo && (text[lo] == '(' || text[lo] == '[')) {
        char close = text[lo] == '(' ? ')' : ']';
        if (text[hi - 1] != close)
            throw parse_error("unbalanced delimiter in vector", lo);
        ++lo;
        --hi;
    }
    std::string_view body = text.substr(lo, hi - lo);
    Vec v{r, {}};
    if (body.find(',') == std::string_view::npos && single_char_alphabet(r)) {
        for (size_t i = 0; i < body.size(); ++i) {
            char ch = body[i];
            if (ch == ' ') continue;
            try {
                v.e.push_back(parse_element(std::string_view(&ch, 1), r).bits);
            } catch (const parse_error&) {
                throw parse_error(std::string("invalid character '") + ch +
                                      "' for ring " + ring_name(r),
                                  lo + i);
            }
        }
    } else {
        size_t start = 0;
        while (start <= body.size()) {
            size_t comma = body.find(',', start);
            if (comma == std::string_view::npos) comma = body.size();
            std::string_view tok = body.substr(start, comma - start);
            size_t a = 0, b = tok.size();
            while (a < b && tok[a] == ' ') ++a;
            while (b > a && tok[b - 1] == ' ') --b;
            tok = tok.substr(a, b - a);
            if (tok.empty())
                throw parse_error("empty token in vector", lo + start);
            try {
                v.e.push_back(parse_element(tok, r).bits);
            } catch (const parse_error&) {
                throw parse_error("invalid token '" + std::string(tok) + "' for ring " +
                                      ring_name(r),
                                  lo + start);
            }
            if (comma == body.size()) break;
            start = comma + 1;
        }
    }
    if (v.e.empty()) throw parse_error("empty vector", 0);
    return v;
}

std::string format_vector(const Vec& v) {
    if (single_char_alphabet(v.ring)) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += format_element(v.at(i));
        return s;
    }
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += format_element(v.at(i));
    }
    s += ')';
    return s;
}

Elem inner_product(const Vec& x, const Vec& y) {
    require_same(x.ring, y.ring, "inner_product");
    if (x.size() != y.size()) throw std::invalid_argument("inner_product: length mismatch");
    uint8_t acc = 0;
    for (size_t i = 0; i < x.size(); ++i) acc ^= mul_bits(x.e[i], y.e[i]);
    return {x.ring, acc};
}

Vec vec_add(const Vec& x, const Vec& y) {
    require_same(x.ring, y.ring, "vec_add");
    if (x.size() != y.size()) throw std::invalid_argument("vec_add: length mismatch");
    Vec v = x;
    for (size_t i = 0; i < v.size(); ++i) v.e[i] ^= y.e[i];
    return v;
}

Vec vec_scale(Elem s, const Vec& x) {
    require_same(s.ring, x.ring, "vec_scale");
    Vec v = x;
    for (size_t i = 0; i < v.size(); ++i) v.e[i] = mul_bits(s.bits, x.e[i]);
    return v;
}

Mat circulant(const Vec& first_row) {
    size_t n = first_row.size();
    if (n == 0) throw std::invalid_argument("circulant: empty first row");
    Mat m(first_row.ring, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m.e[i * n + j] = first_row.e[(j + n - i) % n];
    return m;
}

Mat four_circulant(const Vec& rA, const Vec& rB) {
    require_same(rA.ring, rB.ring, "four_circulant");
    if (rA.size() != rB.size())
        throw std::invalid_argument("four_circulant: rA and rB must have equal length");
    size_t n = rA.size();
    Mat A = circulant(rA), B = circulant(rB);
    Mat G(rA.ring, 2 * n, 4 * n);
    for (size_t i = 0; i < 2 * n; ++i) G.e[i * 4 * n + i] = 1;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            G.e[i * 4 * n + 2 * n + j] = A.e[i * n + j];
            G.e[i * 4 * n + 3 * n + j] = B.e[i * n + j];
            G.e[(n + i) * 4 * n + 2 * n + j] = B.e[j * n + i];  // B^T
            G.e[(n + i) * 4 * n + 3 * n + j] = A.e[j * n + i];  // A^T
        }
    return G;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    require_same(a.ring, b.ring, "mat_mul");
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat c(a.ring, a.rows, b.cols);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t k = 0; k < a.cols; ++k) {
            uint8_t av = a.e[i * a.cols + k];
            if (!av) continue;
            for (size_t j = 0; j < b.cols; ++j)
                c.e[i * c.cols + j] ^= mul_bits(av, b.e[k * b.cols + j]);
        }
    return c;
}

Mat mat_add(const Mat& a, const Mat& b) {
    require_same(a.ring, b.ring, "mat_add");
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("mat_add: shape mismatch");
    Mat c = a;
    for (size_t i = 0; i < c.e.size(); ++i) c.e[i] ^= b.e[i];
    return c;
}

Mat mat_transpose(const Mat& a) {
    Mat t(a.ring, a.cols, a.rows);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t j = 0; j < a.cols; ++j) t.e[j * t.cols + i] = a.e[i * a.cols + j];
    return t;
}

Mat mat_identity(Ring r, size_t n) {
    Mat m(r, n, n);
    for (size_t i = 0; i < n; ++i) m.e[i * n + i] = 1;
    return m;
}

bool mat_is_zero(const Mat& a) {
    for (uint8_t v : a.e)
        if (v) return false;
    return true;
}

Mat mat_scale(Elem s, const Mat& a) {
    require_same(s.ring, a.ring, "mat_scale");
    Mat c = a;
    for (size_t i = 0; i < c.e.size(); ++i) c.e[i] = mul_bits(s.bits, a.e[i]);
    return c;
}

bool check_four_circulant_condition(const Vec& rA, const Vec& rB) {
    require_same(rA.ring, rB.ring, "check_four_circulant_condition");
    if (rA.size() != rB.size())
        throw std::invalid_argument("check_four_circulant_condition: length mismatch");
    size_t n = rA.size();
    // (AA^T + BB^T) is circulant; its first row must be e_0.
    for (size_t j = 0; j < n; ++j) {
        uint8_t acc = 0;
        for (size_t m = 0; m < n; ++m) {
            size_t mj = (m + n - j) % n;
            acc ^= mul_bits(rA.e[m], rA.e[mj]);
            acc ^= mul_bits(rB.e[m], rB.e[mj]);
        }
        if (acc != (j == 0 ? 1 : 0)) return false;
    }
    return true;
}

}  // namespace sdc
