#include "pgq/bitmat.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pgq {

void BitVector::xor_with(const BitVector& other) {
    if (length_ != other.length_) throw std::invalid_argument("BitVector length mismatch");
    kernels::active().xor_rows(words_.data(), other.words_.data(), words_.size());
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(bits_.begin() + a * wpr_, bits_.begin() + (a + 1) * wpr_,
                     bits_.begin() + b * wpr_);
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    std::copy_n(bits_.begin() + r * wpr_, wpr_, v.words().begin());
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row length mismatch");
    std::copy_n(v.words().begin(), wpr_, bits_.begin() + r * wpr_);
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto rw = row_words(r);
        for (std::size_t wi = 0; wi < wpr_; ++wi) {
            Word w = rw[wi];
            while (w) {
                std::size_t c = wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
                t.set(c, r, true);
                w &= w - 1;
            }
        }
    }
    return t;
}

bool BitMatrix::is_zero() const {
    for (Word w : bits_)
        if (w) return false;
    return true;
}

std::size_t rank(const BitMatrix& m) {
    BitMatrix r = m;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < r.cols() && pr < r.rows(); ++c) {
        std::size_t sel = pr;
        while (sel < r.rows() && !r.get(sel, c)) ++sel;
        if (sel == r.rows()) continue;
        r.swap_rows(pr, sel);
        for (std::size_t i = pr + 1; i < r.rows(); ++i)
            if (r.get(i, c)) r.xor_row_into(pr, i);
        ++pr;
    }
    return pr;
}

RrefResult rref(const BitMatrix& m) {
    BitMatrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < r.cols() && pr < r.rows(); ++c) {
        std::size_t sel = pr;
        while (sel < r.rows() && !r.get(sel, c)) ++sel;
        if (sel == r.rows()) continue;
        r.swap_rows(pr, sel);
        for (std::size_t i = 0; i < r.rows(); ++i)
            if (i != pr && r.get(i, c)) r.xor_row_into(pr, i);
        pivots.push_back(c);
        ++pr;
    }
    return {std::move(r), std::move(pivots)};
}

BitMatrix nullspace_basis(const BitMatrix& m) {
    RrefResult rr = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;

    BitMatrix basis(n - rr.pivots.size(), n);
    std::size_t out = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        basis.set(out, f, true);
        // pivot rows with a 1 in the free column contribute their pivot
        for (std::size_t pi = 0; pi < rr.pivots.size(); ++pi)
            if (rr.matrix.get(pi, f)) basis.set(out, rr.pivots[pi], true);
        ++out;
    }
    return basis;
}

BitMatrix mul_transpose(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("mul_transpose: column counts differ");
    const auto& k = kernels::active();
    BitMatrix out(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto ra = a.row_words(i);
        for (std::size_t j = 0; j < b.rows(); ++j) {
            auto rb = b.row_words(j);
            if (k.and_popcount(ra.data(), rb.data(), ra.size()) & 1) out.set(i, j, true);
        }
    }
    return out;
}

BitVector mul_vector(const BitMatrix& m, const BitVector& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("mul_vector: length mismatch");
    const auto& k = kernels::active();
    BitVector out(m.rows());
    auto vw = v.words();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto rw = m.row_words(i);
        if (k.and_popcount(rw.data(), vw.data(), rw.size()) & 1) out.set(i, true);
    }
    return out;
}

bool RowSpace::contains(const BitVector& v) const {
    if (v.size() != rref_.matrix.cols())
        throw std::invalid_argument("RowSpace::contains: length mismatch");
    BitVector rem = v;
    for (std::size_t i = 0; i < rref_.pivots.size(); ++i) {
        if (rem.get(rref_.pivots[i]))
            kernels::active().xor_rows(rem.words().data(), rref_.matrix.row_words(i).data(),
                                       rem.words().size());
    }
    return rem.is_zero();
}

bool row_space_contains(const BitMatrix& m, const BitVector& v) {
    return RowSpace(m).contains(v);
}

int twisted_inner_product(const SymplecticVector& u, const SymplecticVector& v) {
    if (u.n() != v.n()) throw std::invalid_argument("twisted_inner_product: length mismatch");
    const auto& k = kernels::active();
    std::size_t nw = u.x_part.words().size();
    std::size_t acc = k.and_popcount(u.x_part.words().data(), v.z_part.words().data(), nw) +
                      k.and_popcount(u.z_part.words().data(), v.x_part.words().data(), nw);
    return static_cast<int>(acc & 1);
}

}  // namespace pgq
