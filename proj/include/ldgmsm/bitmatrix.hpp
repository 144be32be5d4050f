#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ldgmsm {

/// Dense bit vector over GF(2), packed 64 bits per word.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVec from_string(std::string_view s);

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t weight() const;
    bool any() const;

    BitVec& operator^=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) {
        a ^= b;
        return a;
    }

    bool operator==(const BitVec&) const = default;

    /// Lexicographic order reading bit 0 first, with 0 < 1.
    bool lex_less(const BitVec& o) const;

    std::string to_string() const;

    std::span<const std::uint64_t> words() const { return w_; }
    std::span<std::uint64_t> words() { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec& v) const;
};

/// Dense row-major bit matrix over GF(2).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * wpr_, 0) {}

    static BitMatrix from_row_strings(const std::vector<std::string>& rows);
    static BitMatrix from_text(std::string_view text);
    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1;
    }

    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (c & 63);
        if (v)
            bits_[r * wpr_ + (c >> 6)] |= mask;
        else
            bits_[r * wpr_ + (c >> 6)] &= ~mask;
    }

    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {bits_.data() + r * wpr_, wpr_};
    }
    std::span<std::uint64_t> row_words(std::size_t r) { return {bits_.data() + r * wpr_, wpr_}; }

    BitVec row(std::size_t r) const;
    void set_row(std::size_t r, const BitVec& v);
    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    std::size_t row_weight(std::size_t r) const;
    std::size_t col_weight(std::size_t c) const;
    std::vector<std::size_t> col_weights() const;

    BitMatrix transpose() const;

    /// M * v^T, length rows().
    BitVec mult_vec(const BitVec& v) const;

    std::vector<std::string> to_row_strings() const;
    std::string to_text() const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct RrefResult {
    BitMatrix rref;                  // row-reduced echelon form of the input
    std::vector<std::size_t> pivots; // pivot column per rref row, ascending
    BitMatrix transform;             // square, rref = transform * input
};

RrefResult rref(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

/// m * G over GF(2): XOR of the generator rows selected by m.
BitVec encode_message(const BitVec& m, const BitMatrix& g);

/// Minimum Hamming weight over the 2^rows - 1 nonzero codewords of a
/// full-row-rank generator, enumerated in Gray-code order (one row XOR
/// per step). Rejects rank-deficient inputs and rows > 28.
std::size_t min_distance(const BitMatrix& g);

/// H with H * G^T = 0 and rank(H) = cols - rows, for full-row-rank G.
BitMatrix parity_check_of(const BitMatrix& g);

} // namespace ldgmsm
