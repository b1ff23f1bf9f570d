#include "pgq/classical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "pgq/parallel.hpp"

namespace pgq {

namespace {

long pow_long(long base, int e) {
    long r = 1;
    while (e-- > 0) r *= base;
    return r;
}

// Incidence submatrix for a set of lines and points, with an optional
// all-ones unit column at the end.
ParityCheckMatrix build_from_subsets(Construction c, const PlaneModel& plane,
                                     const std::vector<std::uint32_t>& line_rows,
                                     const std::vector<std::uint32_t>& point_cols, bool add_u) {
    ParityCheckMatrix pcm;
    pcm.construction = c;
    pcm.s = plane.s();
    pcm.row_labels = line_rows;

    const std::size_t n_cols = point_cols.size() + (add_u ? 1 : 0);
    pcm.h = BitMatrix(line_rows.size(), n_cols);
    pcm.col_labels.reserve(n_cols);
    for (std::uint32_t p : point_cols) pcm.col_labels.push_back(static_cast<std::int32_t>(p));
    if (add_u) pcm.col_labels.push_back(ParityCheckMatrix::kUColumn);

    // point index -> column position (point_cols is sorted)
    for (std::size_t r = 0; r < line_rows.size(); ++r) {
        for (std::uint32_t p : plane.line_points(line_rows[r])) {
            auto it = std::lower_bound(point_cols.begin(), point_cols.end(), p);
            if (it != point_cols.end() && *it == p)
                pcm.h.set(r, static_cast<std::size_t>(it - point_cols.begin()), true);
        }
        if (add_u) pcm.h.set(r, n_cols - 1, true);
    }
    return pcm;
}

std::vector<std::uint32_t> all_indices(std::size_t n) {
    std::vector<std::uint32_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::uint32_t>(i);
    return v;
}

std::vector<std::uint32_t> non_hyperoval_points(const PlaneModel& plane,
                                                const HyperovalPartition& part) {
    std::vector<std::uint32_t> pts;
    pts.reserve(plane.size() - part.hyperoval.size());
    for (std::size_t p = 0; p < plane.size(); ++p)
        if (!part.in_hyperoval[p]) pts.push_back(static_cast<std::uint32_t>(p));
    return pts;
}

}  // namespace

std::string_view construction_name(Construction c) {
    switch (c) {
        case Construction::MPi: return "m-pi";
        case Construction::MPiPrime: return "m-pi-prime";
        case Construction::HSk: return "h-sk";
        case Construction::HSeA: return "h-sea";
        case Construction::HSe: return "h-se";
    }
    return "?";
}

std::optional<Construction> construction_from_name(std::string_view name) {
    for (Construction c : {Construction::MPi, Construction::MPiPrime, Construction::HSk,
                           Construction::HSeA, Construction::HSe})
        if (construction_name(c) == name) return c;
    return std::nullopt;
}

ParityCheckMatrix build_m_pi(const PlaneModel& plane) {
    return build_from_subsets(Construction::MPi, plane, all_indices(plane.size()),
                              all_indices(plane.size()), false);
}

ParityCheckMatrix build_m_pi_prime(const PlaneModel& plane) {
    return build_from_subsets(Construction::MPiPrime, plane, all_indices(plane.size()),
                              all_indices(plane.size()), true);
}

ParityCheckMatrix build_h_sk(const PlaneModel& plane, const HyperovalPartition& part) {
    return build_from_subsets(Construction::HSk, plane, part.skew_lines,
                              non_hyperoval_points(plane, part), true);
}

ParityCheckMatrix build_h_sea(const PlaneModel& plane, const HyperovalPartition& part) {
    return build_from_subsets(Construction::HSeA, plane, part.secant_lines,
                              all_indices(plane.size()), true);
}

ParityCheckMatrix build_h_se(const PlaneModel& plane, const HyperovalPartition& part) {
    return build_from_subsets(Construction::HSe, plane, part.secant_lines,
                              non_hyperoval_points(plane, part), true);
}

ParityCheckMatrix build_construction(Construction c, const PlaneModel& plane,
                                     const HyperovalPartition& part) {
    switch (c) {
        case Construction::MPi: return build_m_pi(plane);
        case Construction::MPiPrime: return build_m_pi_prime(plane);
        case Construction::HSk: return build_h_sk(plane, part);
        case Construction::HSeA: return build_h_sea(plane, part);
        case Construction::HSe: return build_h_se(plane, part);
    }
    throw std::invalid_argument("build_construction: bad tag");
}

ClassicalClaims classical_claims(Construction c, int s) {
    const long q = pow_long(2, s);
    const long p3 = pow_long(3, s);
    const long p4 = q * q;
    ClassicalClaims cl;
    switch (c) {
        case Construction::MPi:
            cl.n = p4 + q + 1;
            cl.k = {cl.n - (p3 + 1), cl.n - (p3 + 1)};
            cl.d = {q + 2, q + 2};
            break;
        case Construction::MPiPrime:
            cl.n = p4 + q + 2;
            cl.k = {p4 - p3 + q + 1, p4 - p3 + q + 1};
            cl.d = {q + 2, q + 2};
            break;
        case Construction::HSk:
            cl.n = p4;
            cl.k = {p4 - p3 - 1, p4 - p3 + q};
            cl.d = {q / 2 + 1, q};
            break;
        case Construction::HSeA:
            cl.n = p4 + q + 2;
            cl.k = {p4 - p3 + q + 1, p4 - p3 + q + 1};
            cl.d = {q / 2 + 2, q + 2};
            break;
        case Construction::HSe:
            cl.n = p4;
            // The stated dimension; it disagrees with n minus the stated
            // parity-check rank, which verification flags.
            cl.k = {p4 - p3 + q + 1, p4 - p3 + q + 1};
            cl.d = {q / 2 + 2, q + 2};
            break;
    }
    return cl;
}

namespace {

// ---- full enumeration over the nullspace span (Gray-code walk) ----

struct EnumBest {
    int weight = std::numeric_limits<int>::max();
    std::uint64_t index = 0;  // Gray index achieving it (for deterministic ties)
    std::vector<Word> words;
};

BitVector combination_for(const BitMatrix& basis, std::uint64_t gray_bits) {
    BitVector v(basis.cols());
    for (std::size_t j = 0; gray_bits; ++j, gray_bits >>= 1)
        if (gray_bits & 1)
            kernels::active().xor_rows(v.words().data(), basis.row_words(j).data(),
                                       v.words().size());
    return v;
}

EnumBest enumerate_range(const BitMatrix& basis, std::uint64_t lo, std::uint64_t hi) {
    const auto& k = kernels::active();
    const std::size_t nw = basis.words_per_row();
    BitVector current = combination_for(basis, (lo - 1) ^ ((lo - 1) >> 1));
    EnumBest best;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        std::size_t j = static_cast<std::size_t>(std::countr_zero(idx));
        k.xor_rows(current.words().data(), basis.row_words(j).data(), nw);
        int w = static_cast<int>(k.popcount(current.words().data(), nw));
        if (w < best.weight) {
            best.weight = w;
            best.index = idx;
            best.words.assign(current.words().begin(), current.words().end());
        }
    }
    return best;
}

DistanceResult full_enumeration(const BitMatrix& basis, int jobs) {
    const std::uint64_t total = std::uint64_t{1} << basis.rows();
    // index 0 is the zero codeword; walk [1, 2^k)
    std::vector<EnumBest> parts =
        parallel_chunks<EnumBest>(total - 1, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
            return enumerate_range(basis, lo + 1, hi + 1);
        });
    EnumBest best;
    for (const EnumBest& p : parts)
        if (p.weight < best.weight || (p.weight == best.weight && p.index < best.index)) best = p;

    DistanceResult res;
    res.exact = best.weight;
    res.at_least = best.weight;
    BitVector cw(basis.cols());
    std::copy(best.words.begin(), best.words.end(), cw.words().begin());
    res.codeword = std::move(cw);
    return res;
}

// ---- weight-capped meet-in-the-middle syndrome search ----
//
// A codeword of weight exactly w splits its support into disjoint column
// sets of sizes floor(w/2) and w-floor(w/2) with equal syndromes. Scanning
// w upward, the first w with a syndrome collision between two distinct
// subsets is the exact minimum distance (smaller-weight codewords would
// have collided at their own w).

struct SyndromeTable {
    std::size_t synd_words = 0;
    std::vector<Word> arena;                 // entries * synd_words
    std::vector<std::uint32_t> combo_arena;  // entries * combo_size
    std::size_t combo_size = 0;
    std::vector<std::uint32_t> order;        // entry ids sorted by syndrome

    std::span<const Word> synd(std::size_t e) const {
        return {arena.data() + e * synd_words, synd_words};
    }
};

int compare_words(std::span<const Word> a, std::span<const Word> b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    return 0;
}

// All size-r column subsets with their syndromes, sorted by syndrome.
SyndromeTable build_table(const std::vector<std::vector<Word>>& col_synd, std::size_t n,
                          std::size_t r, std::size_t synd_words) {
    SyndromeTable t;
    t.synd_words = synd_words;
    t.combo_size = r;
    if (r == 0) {
        t.arena.assign(synd_words, 0);
        t.order = {0};
        return t;
    }
    std::vector<std::uint32_t> combo(r);
    for (std::size_t i = 0; i < r; ++i) combo[i] = static_cast<std::uint32_t>(i);
    std::vector<Word> synd(synd_words);
    while (true) {
        std::fill(synd.begin(), synd.end(), 0);
        for (std::uint32_t c : combo)
            for (std::size_t w = 0; w < synd_words; ++w) synd[w] ^= col_synd[c][w];
        t.arena.insert(t.arena.end(), synd.begin(), synd.end());
        t.combo_arena.insert(t.combo_arena.end(), combo.begin(), combo.end());
        // next lexicographic combination
        std::size_t i = r;
        while (i > 0 && combo[i - 1] == n - r + i - 1) --i;
        if (i == 0) break;
        ++combo[i - 1];
        for (std::size_t j = i; j < r; ++j) combo[j] = combo[j - 1] + 1;
    }
    const std::size_t entries = t.combo_size ? t.combo_arena.size() / t.combo_size : 1;
    t.order.resize(entries);
    for (std::size_t i = 0; i < entries; ++i) t.order[i] = static_cast<std::uint32_t>(i);
    std::sort(t.order.begin(), t.order.end(), [&](std::uint32_t a, std::uint32_t b) {
        int c = compare_words(t.synd(a), t.synd(b));
        if (c != 0) return c < 0;
        return a < b;
    });
    return t;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t r, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < r; ++i) {
        v = v * (n - i) / (i + 1);
        if (v > cap) return cap + 1;
    }
    return v;
}

std::optional<BitVector> mitm_collision_at(const BitMatrix& reduced, int w,
                                           const std::vector<std::vector<Word>>& col_synd) {
    const std::size_t n = reduced.cols();
    const std::size_t synd_words = (reduced.rows() + 63) / 64;
    const std::size_t a = static_cast<std::size_t>(w) / 2;
    const std::size_t b = static_cast<std::size_t>(w) - a;

    SyndromeTable ta = build_table(col_synd, n, a, synd_words);

    auto make_codeword = [&](std::span<const std::uint32_t> ca,
                             std::span<const std::uint32_t> cb) {
        BitVector v(n);
        for (std::uint32_t c : ca) v.flip(c);
        for (std::uint32_t c : cb) v.flip(c);
        return v;
    };

    auto lookup = [&](std::span<const Word> synd, std::span<const std::uint32_t> probe_combo)
        -> std::optional<BitVector> {
        auto lo = std::lower_bound(ta.order.begin(), ta.order.end(), synd,
                                   [&](std::uint32_t e, std::span<const Word> s) {
                                       return compare_words(ta.synd(e), s) < 0;
                                   });
        for (; lo != ta.order.end() && compare_words(ta.synd(*lo), synd) == 0; ++lo) {
            std::span<const std::uint32_t> ca{ta.combo_arena.data() + *lo * ta.combo_size,
                                              ta.combo_size};
            if (ca.size() == probe_combo.size() &&
                std::equal(ca.begin(), ca.end(), probe_combo.begin()))
                continue;  // same subset, zero codeword
            BitVector v = make_codeword(ca, probe_combo);
            if (!v.is_zero()) return v;
        }
        return std::nullopt;
    };

    if (b == a) {
        // self-join over the sorted table
        for (std::size_t i = 0; i + 1 < ta.order.size(); ++i) {
            if (compare_words(ta.synd(ta.order[i]), ta.synd(ta.order[i + 1])) == 0) {
                std::span<const std::uint32_t> ca{
                    ta.combo_arena.data() + ta.order[i] * ta.combo_size, ta.combo_size};
                std::span<const std::uint32_t> cb{
                    ta.combo_arena.data() + ta.order[i + 1] * ta.combo_size, ta.combo_size};
                BitVector v = make_codeword(ca, cb);
                if (!v.is_zero()) return v;
            }
        }
        return std::nullopt;
    }

    // probe all size-b subsets against the size-a table
    std::vector<std::uint32_t> combo(b);
    for (std::size_t i = 0; i < b; ++i) combo[i] = static_cast<std::uint32_t>(i);
    std::vector<Word> synd(synd_words);
    while (true) {
        std::fill(synd.begin(), synd.end(), 0);
        for (std::uint32_t c : combo)
            for (std::size_t wi = 0; wi < synd_words; ++wi) synd[wi] ^= col_synd[c][wi];
        if (auto hit = lookup(synd, combo)) return hit;
        std::size_t i = b;
        while (i > 0 && combo[i - 1] == n - b + i - 1) --i;
        if (i == 0) break;
        ++combo[i - 1];
        for (std::size_t j = i; j < b; ++j) combo[j] = combo[j - 1] + 1;
    }
    return std::nullopt;
}

}  // namespace

DistanceResult min_distance_capped(const BitMatrix& h, int cap) {
    // Work with the independent rows only so syndromes are rank(h) bits.
    RrefResult rr = rref(h);
    const std::size_t rk = rr.pivots.size();
    BitMatrix reduced(rk, h.cols());
    for (std::size_t i = 0; i < rk; ++i)
        std::copy(rr.matrix.row_words(i).begin(), rr.matrix.row_words(i).end(),
                  reduced.row_words(i).begin());

    const std::size_t synd_words = (rk + 63) / 64;
    std::vector<std::vector<Word>> col_synd(h.cols(), std::vector<Word>(synd_words, 0));
    for (std::size_t r = 0; r < rk; ++r)
        for (std::size_t c = 0; c < h.cols(); ++c)
            if (reduced.get(r, c)) col_synd[c][r >> 6] |= Word{1} << (r & 63);

    DistanceResult res;
    for (int w = 1; w <= cap; ++w) {
        if (auto cw = mitm_collision_at(reduced, w, col_synd)) {
            res.exact = static_cast<int>(cw->weight());
            res.at_least = *res.exact;
            res.codeword = std::move(*cw);
            return res;
        }
    }
    res.at_least = cap + 1;
    return res;
}

DistanceResult min_distance_oracle(const BitMatrix& h, std::optional<int> cap, int jobs) {
    BitMatrix basis = nullspace_basis(h);
    const std::size_t k = basis.rows();

    if (k == 0) {
        DistanceResult res;
        res.no_nonzero_codewords = true;
        res.at_least = static_cast<int>(h.cols()) + 1;
        return res;
    }

    if (k <= 26) return full_enumeration(basis, jobs);

    if (!cap)
        throw std::runtime_error(
            "min_distance_oracle: 2^k exceeds the enumeration budget; pass a weight cap");

    const std::uint64_t half_combos =
        binomial_capped(h.cols(), (static_cast<std::uint64_t>(*cap) + 1) / 2, 8'000'000);
    if (half_combos > 8'000'000)
        throw std::runtime_error(
            "min_distance_oracle: capped search exceeds the subset budget; lower the cap");

    return min_distance_capped(h, *cap);
}

BitVector distance_witness(Construction c, const PlaneModel& plane,
                           const HyperovalPartition& part) {
    ParityCheckMatrix pcm = build_construction(c, plane, part);
    if (!pcm.has_u_column())
        throw std::invalid_argument("distance_witness: construction has no unit column");

    // Pick the proposition's line: any line for the all-points constructions,
    // a secant line for h-sk, a skew line for h-se. First index each time.
    std::uint32_t line = 0;
    if (c == Construction::HSk)
        line = part.secant_lines.front();
    else if (c == Construction::HSe)
        line = part.skew_lines.front();

    BitVector w(pcm.h.cols());
    const auto& lp = plane.line_points(line);
    for (std::size_t col = 0; col + 1 < pcm.col_labels.size(); ++col) {
        std::uint32_t p = static_cast<std::uint32_t>(pcm.col_labels[col]);
        if (std::binary_search(lp.begin(), lp.end(), p)) w.set(col, true);
    }
    w.set(pcm.h.cols() - 1, true);  // u bit
    return w;
}

ClassicalCodeRecord code_record(const ParityCheckMatrix& pcm) {
    ClassicalCodeRecord rec;
    rec.construction = pcm.construction;
    rec.s = pcm.s;
    rec.n = pcm.h.cols();
    rec.rank_h = rank(pcm.h);
    rec.k = rec.n - rec.rank_h;
    rec.claims = classical_claims(pcm.construction, pcm.s);
    return rec;
}

}  // namespace pgq
