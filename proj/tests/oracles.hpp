#pragma once

// Naive reference implementations used only by tests. They work on plain
// int matrices and share no code with the bit-packed library path, so they
// can vouch for it independently.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "pgq/bitmat.hpp"

namespace oracle {

using IntMat = std::vector<std::vector<int>>;
using IntVec = std::vector<int>;

inline IntMat to_int(const pgq::BitMatrix& m) {
    IntMat out(m.rows(), IntVec(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c) ? 1 : 0;
    return out;
}

inline pgq::BitMatrix from_int(const IntMat& m) {
    pgq::BitMatrix out(m.size(), m.empty() ? 0 : m[0].size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m[r].size(); ++c)
            if (m[r][c]) out.set(r, c, true);
    return out;
}

inline int rank(IntMat m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t ri = 0;
    for (std::size_t c = 0; c < cols && ri < rows; ++c) {
        std::size_t sel = ri;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[ri], m[sel]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != ri && m[i][c])
                for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[ri][j];
        ++ri;
    }
    return static_cast<int>(ri);
}

inline IntMat nullspace(IntMat m) {
    const std::size_t rows = m.size(), cols = m[0].size();
    std::vector<std::size_t> pivot_cols;
    std::size_t ri = 0;
    for (std::size_t c = 0; c < cols && ri < rows; ++c) {
        std::size_t sel = ri;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[ri], m[sel]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != ri && m[i][c])
                for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[ri][j];
        pivot_cols.push_back(c);
        ++ri;
    }
    IntMat basis;
    std::vector<char> is_pivot(cols, 0);
    for (std::size_t p : pivot_cols) is_pivot[p] = 1;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        IntVec v(cols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r)
            if (m[r][f]) v[pivot_cols[r]] = 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

inline bool in_rowspace(const IntMat& m, const IntVec& v) {
    IntMat ext = m;
    ext.push_back(v);
    return rank(m) == rank(ext);
}

inline int weight(const IntVec& v) {
    int w = 0;
    for (int b : v) w += b;
    return w;
}

// Exact minimum distance by enumerating the whole nullspace (k <= 22).
inline int min_distance(const IntMat& h) {
    IntMat basis = nullspace(h);
    const std::size_t k = basis.size();
    if (k == 0) return -1;  // no nonzero codewords
    if (k > 22) throw std::runtime_error("oracle::min_distance: k too large");
    const std::size_t n = h[0].size();
    int best = static_cast<int>(n) + 1;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        IntVec v(n, 0);
        for (std::size_t i = 0; i < k; ++i)
            if ((mask >> i) & 1)
                for (std::size_t j = 0; j < n; ++j) v[j] ^= basis[i][j];
        best = std::min(best, weight(v));
    }
    return best;
}

// Exact coset (quantum) distance: min weight over ker(hx)\rs(hz) union
// ker(hz)\rs(hx).
inline int coset_distance(const IntMat& hx, const IntMat& hz) {
    int best = -1;
    for (const auto* pair : {&hx, &hz}) {
        const IntMat& ker_of = pair == &hx ? hx : hz;
        const IntMat& rs_of = pair == &hx ? hz : hx;
        IntMat basis = nullspace(ker_of);
        const std::size_t k = basis.size();
        if (k > 22) throw std::runtime_error("oracle::coset_distance: k too large");
        const std::size_t n = ker_of[0].size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
            IntVec v(n, 0);
            for (std::size_t i = 0; i < k; ++i)
                if ((mask >> i) & 1)
                    for (std::size_t j = 0; j < n; ++j) v[j] ^= basis[i][j];
            int w = weight(v);
            if ((best < 0 || w < best) && !in_rowspace(rs_of, v)) best = w;
        }
    }
    return best;
}

}  // namespace oracle
