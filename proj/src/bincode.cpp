#include "sdc/bincode.hpp"

#include <bit>
#include <istream>
#include <stdexcept>
#include <string>

namespace sdc {

int row_weight(const uint64_t* row, size_t wpr) {
    int w = 0;
    for (size_t i = 0; i < wpr; ++i) w += std::popcount(row[i]);
    return w;
}

BinaryCode rank_and_systematize(size_t n, const std::vector<uint64_t>& raw_rows,
                                size_t nrows, size_t wpr) {
    if (n == 0 || nrows == 0) throw std::invalid_argument("rank_and_systematize: empty input");
    if (wpr != (n + 63) / 64) throw std::invalid_argument("rank_and_systematize: bad wpr");
    std::vector<uint64_t> work(raw_rows.begin(), raw_rows.begin() + nrows * wpr);
    std::vector<uint32_t> pivots;
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < nrows; ++col) {
        size_t word = col >> 6, bit = col & 63;
        size_t pivot = rank;
        while (pivot < nrows && !(work[pivot * wpr + word] >> bit & 1)) ++pivot;
        if (pivot == nrows) continue;
        if (pivot != rank)
            for (size_t w = 0; w < wpr; ++w)
                std::swap(work[pivot * wpr + w], work[rank * wpr + w]);
        for (size_t r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            if (work[r * wpr + word] >> bit & 1)
                for (size_t w = 0; w < wpr; ++w) work[r * wpr + w] ^= work[rank * wpr + w];
        }
        pivots.push_back(static_cast<uint32_t>(col));
        ++rank;
    }
    if (rank == 0) throw std::invalid_argument("rank_and_systematize: zero matrix");
    BinaryCode c;
    c.n = n;
    c.k = rank;
    c.wpr = wpr;
    c.words.assign(work.begin(), work.begin() + rank * wpr);
    c.pivots = std::move(pivots);
    return c;
}

BinaryCode load_matrix_text(std::istream& in) {
    std::vector<uint64_t> rows;
    size_t n = 0, wpr = 0, nrows = 0;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (n == 0) {
            n = line.size();
            wpr = (n + 63) / 64;
        } else if (line.size() != n) {
            throw std::invalid_argument("matrix file: ragged row lengths");
        }
        rows.resize((nrows + 1) * wpr, 0);
        for (size_t c = 0; c < n; ++c) {
            if (line[c] == '1') rows[nrows * wpr + (c >> 6)] |= uint64_t(1) << (c & 63);
            else if (line[c] != '0')
                throw std::invalid_argument("matrix file: invalid character");
        }
        ++nrows;
    }
    if (nrows == 0) throw std::invalid_argument("matrix file: no rows");
    return rank_and_systematize(n, rows, nrows, wpr);
}

std::string save_matrix_text(const BinaryCode& c) {
    std::string out;
    out.reserve(c.k * (c.n + 1));
    for (size_t r = 0; r < c.k; ++r) {
        for (size_t col = 0; col < c.n; ++col) out += c.get(r, col) ? '1' : '0';
        out += '\n';
    }
    return out;
}

bool is_self_dual_binary(const BinaryCode& c) {
    if (c.n % 2 || c.k != c.n / 2) return false;
    for (size_t i = 0; i < c.k; ++i)
        for (size_t j = i; j < c.k; ++j) {
            int dot = 0;
            for (size_t w = 0; w < c.wpr; ++w)
                dot ^= std::popcount(c.row(i)[w] & c.row(j)[w]) & 1;
            if (dot) return false;
        }
    return true;
}

}  // namespace sdc
