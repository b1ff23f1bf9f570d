#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pgq/kernels.hpp"

// Dense bit-packed linear algebra over GF(2). Everything here is a pure
// function on immutable inputs; matrices are safe to share across threads.

namespace pgq {

using kernels::Word;

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length)
        : length_(length), words_((length + 63) / 64, 0) {}

    std::size_t size() const { return length_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v) {
        Word mask = Word{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { words_[i >> 6] ^= Word{1} << (i & 63); }

    std::size_t weight() const {
        return kernels::active().popcount(words_.data(), words_.size());
    }

    bool is_zero() const {
        for (Word w : words_)
            if (w) return false;
        return true;
    }

    // this ^= other; lengths must match
    void xor_with(const BitVector& other);

    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t length_ = 0;
    std::vector<Word> words_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool v) {
        Word mask = Word{1} << (c & 63);
        Word& w = bits_[r * wpr_ + (c >> 6)];
        if (v)
            w |= mask;
        else
            w &= ~mask;
    }

    std::span<const Word> row_words(std::size_t r) const {
        return {bits_.data() + r * wpr_, wpr_};
    }
    std::span<Word> row_words(std::size_t r) { return {bits_.data() + r * wpr_, wpr_}; }

    // row dst ^= row src
    void xor_row_into(std::size_t src, std::size_t dst) {
        kernels::active().xor_rows(bits_.data() + dst * wpr_, bits_.data() + src * wpr_, wpr_);
    }

    void swap_rows(std::size_t a, std::size_t b);

    std::size_t row_weight(std::size_t r) const {
        return kernels::active().popcount(bits_.data() + r * wpr_, wpr_);
    }

    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);

    BitMatrix transposed() const;

    bool is_zero() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<Word> bits_;
};

struct RrefResult {
    BitMatrix matrix;
    std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

// Deterministic Gaussian elimination, first-nonzero pivot selection.
std::size_t rank(const BitMatrix& m);
RrefResult rref(const BitMatrix& m);

// Rows form a basis of { v : M v^t = 0 }; row count = cols - rank.
BitMatrix nullspace_basis(const BitMatrix& m);

// A * B^t over GF(2); throws std::invalid_argument on column-count mismatch.
BitMatrix mul_transpose(const BitMatrix& a, const BitMatrix& b);

// M * v^t; throws std::invalid_argument on length mismatch.
BitVector mul_vector(const BitMatrix& m, const BitVector& v);

// Membership of v in the row space of M (one-shot; use RowSpace for loops).
bool row_space_contains(const BitMatrix& m, const BitVector& v);

// Precomputed row-space membership tester.
class RowSpace {
public:
    explicit RowSpace(const BitMatrix& m) : rref_(rref(m)) {}
    std::size_t rank() const { return rref_.pivots.size(); }
    bool contains(const BitVector& v) const;

private:
    RrefResult rref_;
};

// (a|b) pair representing X(a)Z(b); total symplectic length 2n.
struct SymplecticVector {
    BitVector x_part;
    BitVector z_part;
    std::size_t n() const { return x_part.size(); }
};

// a.b' + b.a' mod 2; zero exactly when the operators commute.
int twisted_inner_product(const SymplecticVector& u, const SymplecticVector& v);

}  // namespace pgq
