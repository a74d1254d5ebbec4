#pragma once

// Dense linear algebra over the two-element field on packed 64-bit words.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "polcount/error.hpp"

namespace polcount::gf2 {

class BitRow {
public:
    BitRow() = default;
    explicit BitRow(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    [[nodiscard]] std::size_t size() const noexcept { return size_; }

    [[nodiscard]] bool get(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i, bool v = true) noexcept {
        const std::uint64_t mask = std::uint64_t{1} << (i % 64);
        if (v) {
            words_[i / 64] |= mask;
        } else {
            words_[i / 64] &= ~mask;
        }
    }
    void flip(std::size_t i) noexcept { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    BitRow& operator^=(const BitRow& o) noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    friend BitRow operator^(BitRow a, const BitRow& b) noexcept { return a ^= b; }

    [[nodiscard]] bool any() const noexcept {
        for (auto w : words_) {
            if (w != 0) return true;
        }
        return false;
    }
    [[nodiscard]] std::size_t count() const noexcept {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    // Parity of popcount(this & o): the GF(2) inner product.
    [[nodiscard]] bool dot(const BitRow& o) const noexcept {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
        return (std::popcount(acc) & 1) != 0;
    }
    // Index of the lowest set bit, or size() when the row is zero.
    [[nodiscard]] std::size_t lowest() const noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        }
        return size_;
    }

    [[nodiscard]] std::string to_string() const {
        std::string s(size_, '0');
        for (std::size_t i = 0; i < size_; ++i) {
            if (get(i)) s[i] = '1';
        }
        return s;
    }

    friend bool operator==(const BitRow&, const BitRow&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t cols) : cols_(cols) {}
    Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitRow(cols)) {}

    // Rows of 0/1 entries; every row must have the same length.
    static Matrix from_rows(const std::vector<std::vector<int>>& entries) {
        const std::size_t cols = entries.empty() ? 0 : entries.front().size();
        Matrix m(cols);
        for (const auto& r : entries) {
            if (r.size() != cols) throw domain_error("ragged GF(2) matrix");
            BitRow row(cols);
            for (std::size_t j = 0; j < cols; ++j) {
                if (r[j] != 0 && r[j] != 1) throw domain_error("GF(2) entry must be 0 or 1");
                row.set(j, r[j] == 1);
            }
            m.rows_.push_back(std::move(row));
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] const BitRow& row(std::size_t i) const { return rows_[i]; }
    [[nodiscard]] BitRow& row(std::size_t i) { return rows_[i]; }
    [[nodiscard]] const std::vector<BitRow>& all_rows() const noexcept { return rows_; }

    void push_row(BitRow r) {
        if (r.size() != cols_) throw domain_error("row length does not match column count");
        rows_.push_back(std::move(r));
    }

    [[nodiscard]] bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }

private:
    std::size_t cols_ = 0;
    std::vector<BitRow> rows_;
};

// Reduced row echelon form; returns the pivot column of each nonzero row.
struct Echelon {
    std::vector<BitRow> rows;
    std::vector<std::size_t> pivots;
};

inline Echelon reduce(const Matrix& m) {
    Echelon e;
    for (const BitRow& input : m.all_rows()) {
        BitRow r = input;
        for (std::size_t k = 0; k < e.rows.size(); ++k) {
            if (r.get(e.pivots[k])) r ^= e.rows[k];
        }
        if (!r.any()) continue;
        const std::size_t pc = r.lowest();
        for (auto& er : e.rows) {
            if (er.get(pc)) er ^= r;
        }
        e.rows.push_back(std::move(r));
        e.pivots.push_back(pc);
    }
    return e;
}

inline std::size_t rank(const Matrix& m) { return reduce(m).rows.size(); }

// Basis of { x : row . x = 0 for every row }. Vector k has a 1 at its own free
// column and zeros at every other free column.
inline std::vector<BitRow> nullspace(const Matrix& m) {
    const Echelon e = reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto pc : e.pivots) is_pivot[pc] = true;
    std::vector<BitRow> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitRow x(m.cols());
        x.set(f);
        for (std::size_t k = 0; k < e.rows.size(); ++k) {
            if (e.rows[k].get(f)) x.set(e.pivots[k]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace polcount::gf2
