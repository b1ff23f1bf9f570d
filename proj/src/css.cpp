#include "pgq/css.hpp"

#include <algorithm>
#include <bit>
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

CssCode assemble(const ParityCheckMatrix& hx, const ParityCheckMatrix& hz) {
    CssCode code;
    code.s = hx.s;
    code.n = hx.h.cols();
    code.hx = hx;
    code.hz = hz;
    code.rank_hx = rank(hx.h);
    code.rank_hz = rank(hz.h);
    code.k_quantum = static_cast<long>(code.n) - static_cast<long>(code.rank_hx) -
                     static_cast<long>(code.rank_hz);
    code.stabilizer_count = hx.h.rows() + hz.h.rows();
    return code;
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Pi: return "pi";
        case Family::Asym: return "asym";
        case Family::SymSk: return "sym-sk";
        case Family::SymSe: return "sym-se";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : {Family::Pi, Family::Asym, Family::SymSk, Family::SymSe})
        if (family_name(f) == name) return f;
    return std::nullopt;
}

bool validate_stabilizer(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols() || a.rows() != b.rows())
        throw std::invalid_argument("validate_stabilizer: shape mismatch");
    // A B^t + B A^t = 0 over GF(2) is entry-wise equality of the two products
    return mul_transpose(a, b) == mul_transpose(b, a);
}

std::pair<BitMatrix, BitMatrix> stabilizer_parts(const CssCode& code) {
    const std::size_t rx = code.hx.h.rows(), rz = code.hz.h.rows();
    BitMatrix a(rx + rz, code.n), b(rx + rz, code.n);
    for (std::size_t r = 0; r < rx; ++r)
        std::copy(code.hx.h.row_words(r).begin(), code.hx.h.row_words(r).end(),
                  a.row_words(r).begin());
    for (std::size_t r = 0; r < rz; ++r)
        std::copy(code.hz.h.row_words(r).begin(), code.hz.h.row_words(r).end(),
                  b.row_words(rx + r).begin());
    return {std::move(a), std::move(b)};
}

CssCode build_symmetric_css(const ParityCheckMatrix& h) {
    if (!mul_transpose(h.h, h.h).is_zero())
        throw std::invalid_argument("build_symmetric_css: parity check is not self-orthogonal");
    return assemble(h, h);
}

CssCode build_asymmetric_css(const ParityCheckMatrix& h1, const ParityCheckMatrix& h2) {
    if (h1.h.cols() != h2.h.cols())
        throw std::invalid_argument("build_asymmetric_css: block lengths differ");
    if (!mul_transpose(h1.h, h2.h).is_zero())
        throw std::invalid_argument("build_asymmetric_css: parity checks are not orthogonal");
    return assemble(h1, h2);
}

CssCode build_family(Family f, const PlaneModel& plane, const HyperovalPartition& part) {
    CssCode code;
    switch (f) {
        case Family::Pi: code = build_symmetric_css(build_m_pi_prime(plane)); break;
        case Family::Asym:
            code = build_asymmetric_css(build_h_sk(plane, part), build_h_se(plane, part));
            break;
        case Family::SymSk: code = build_symmetric_css(build_h_sk(plane, part)); break;
        case Family::SymSe: code = build_symmetric_css(build_h_sea(plane, part)); break;
    }
    code.family = f;
    return code;
}

CssCode build_family(Family f, int s) {
    if (s < 1 || s > 4) throw std::invalid_argument("build_family: s must be in [1,4]");
    PlaneModel plane = PlaneModel::build(s);
    HyperovalPartition part = build_hyperoval_partition(plane);
    return build_family(f, plane, part);
}

namespace {

// Minimum weight over span(kernel_basis) \ rowspace(other), by Gray-code
// walk. Ties resolved by Gray index so the result does not depend on how
// the range was partitioned.
struct CosetBest {
    int weight = std::numeric_limits<int>::max();
    std::uint64_t index = 0;
};

CosetBest coset_enumerate_range(const BitMatrix& basis, const RowSpace& other, std::uint64_t lo,
                                std::uint64_t hi) {
    const auto& k = kernels::active();
    const std::size_t nw = basis.words_per_row();
    BitVector current(basis.cols());
    {
        std::uint64_t g = (lo - 1) ^ ((lo - 1) >> 1);
        for (std::size_t j = 0; g; ++j, g >>= 1)
            if (g & 1) k.xor_rows(current.words().data(), basis.row_words(j).data(), nw);
    }
    CosetBest best;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        std::size_t j = static_cast<std::size_t>(std::countr_zero(idx));
        k.xor_rows(current.words().data(), basis.row_words(j).data(), nw);
        int w = static_cast<int>(k.popcount(current.words().data(), nw));
        if (w < best.weight && !other.contains(current)) {
            best.weight = w;
            best.index = idx;
        }
    }
    return best;
}

int coset_minimum(const BitMatrix& ker_basis, const RowSpace& other, int jobs) {
    const std::uint64_t total = (std::uint64_t{1} << ker_basis.rows()) - 1;
    std::vector<CosetBest> parts =
        parallel_chunks<CosetBest>(total, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
            return coset_enumerate_range(ker_basis, other, lo + 1, hi + 1);
        });
    CosetBest best;
    for (const CosetBest& p : parts)
        if (p.weight < best.weight) best = p;
    return best.weight;
}

// Capped variant: for each weight w <= cap, list every kernel vector of
// weight w through syndrome collisions and keep the first one outside the
// row space of the other matrix.
std::optional<int> coset_capped(const BitMatrix& h, const RowSpace& other, int cap) {
    RrefResult rr = rref(h);
    const std::size_t rk = rr.pivots.size();
    const std::size_t n = h.cols();
    const std::size_t synd_words = (rk + 63) / 64;
    std::vector<std::vector<Word>> col_synd(n, std::vector<Word>(synd_words, 0));
    for (std::size_t r = 0; r < rk; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (rr.matrix.get(r, c)) col_synd[c][r >> 6] |= Word{1} << (r & 63);

    // enumerate supports of size w as (a, w-a) splits; collisions give the
    // kernel vectors of weight exactly w once smaller weights are exhausted
    std::vector<std::uint32_t> combo;
    for (int w = 1; w <= cap; ++w) {
        std::vector<std::pair<std::vector<Word>, std::vector<std::uint32_t>>> entries;
        const std::size_t a = static_cast<std::size_t>(w) / 2;
        const std::size_t b = static_cast<std::size_t>(w) - a;
        // size-a table
        {
            combo.assign(a, 0);
            for (std::size_t i = 0; i < a; ++i) combo[i] = static_cast<std::uint32_t>(i);
            bool more = true;
            if (a == 0) {
                entries.push_back({std::vector<Word>(synd_words, 0), {}});
                more = false;
            }
            while (more) {
                std::vector<Word> synd(synd_words, 0);
                for (std::uint32_t c : combo)
                    for (std::size_t wi = 0; wi < synd_words; ++wi) synd[wi] ^= col_synd[c][wi];
                entries.push_back({std::move(synd), combo});
                std::size_t i = a;
                while (i > 0 && combo[i - 1] == n - a + i - 1) --i;
                if (i == 0) break;
                ++combo[i - 1];
                for (std::size_t j = i; j < a; ++j) combo[j] = combo[j - 1] + 1;
            }
            std::sort(entries.begin(), entries.end());
        }
        // probe size-b subsets; collect candidate vectors of weight w
        combo.assign(b, 0);
        for (std::size_t i = 0; i < b; ++i) combo[i] = static_cast<std::uint32_t>(i);
        while (true) {
            std::vector<Word> synd(synd_words, 0);
            for (std::uint32_t c : combo)
                for (std::size_t wi = 0; wi < synd_words; ++wi) synd[wi] ^= col_synd[c][wi];
            auto it = std::lower_bound(
                entries.begin(), entries.end(), synd,
                [](const auto& e, const std::vector<Word>& s) { return e.first < s; });
            for (; it != entries.end() && it->first == synd; ++it) {
                if (it->second.size() == combo.size() &&
                    std::equal(it->second.begin(), it->second.end(), combo.begin()))
                    continue;
                BitVector v(n);
                for (std::uint32_t c : it->second) v.flip(c);
                for (std::uint32_t c : combo) v.flip(c);
                if (static_cast<int>(v.weight()) == w && !other.contains(v)) return w;
            }
            std::size_t i = b;
            while (i > 0 && combo[i - 1] == n - b + i - 1) --i;
            if (i == 0) break;
            ++combo[i - 1];
            for (std::size_t j = i; j < b; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace

QuantumDistanceResult quantum_distance_exact(const CssCode& code, std::optional<int> cap,
                                             int jobs) {
    QuantumDistanceResult res;
    if (code.k_quantum <= 0) {
        res.no_logical_operators = true;
        res.at_least = static_cast<int>(code.n) + 1;
        return res;
    }

    int best = std::numeric_limits<int>::max();
    bool all_exact = true;
    for (const auto& [ker_of, rs_of] :
         {std::pair{&code.hx.h, &code.hz.h}, std::pair{&code.hz.h, &code.hx.h}}) {
        BitMatrix basis = nullspace_basis(*ker_of);
        RowSpace other(*rs_of);
        if (basis.rows() <= 26) {
            best = std::min(best, coset_minimum(basis, other, jobs));
        } else if (cap) {
            if (auto w = coset_capped(*ker_of, other, *cap))
                best = std::min(best, *w);
            else
                all_exact = false;
        } else {
            throw std::runtime_error(
                "quantum_distance_exact: kernel too large to enumerate; pass a weight cap");
        }
    }

    if (all_exact && best != std::numeric_limits<int>::max()) {
        res.exact = best;
        res.at_least = best;
    } else if (cap && best != std::numeric_limits<int>::max() && best <= *cap) {
        // the capped sector certified > cap, the other sector found best
        res.exact = best;
        res.at_least = best;
    } else if (cap) {
        res.at_least = *cap + 1;
    }
    return res;
}

QuantumClaims quantum_claims(Family f, int s) {
    const long q = pow_long(2, s);
    const long p3 = pow_long(3, s);
    const long p4 = q * q;
    QuantumClaims cl;
    switch (f) {
        case Family::Pi:
            cl.n = p4 + q + 2;
            cl.k = {p4 - 2 * p3 + q, p4 - 2 * p3 + q};
            cl.d_lower = q + 2;
            cl.d_is_exact_claim = true;
            cl.stabilizer_count = 2 * p4 + 2 * q + 2;
            break;
        case Family::Asym:
            cl.n = p4;
            cl.k = {p4 - 2 * p3 + 2, p4 - 2 * p3 + q - 1};
            cl.d_lower = q / 2 + 1;
            cl.stabilizer_count = p4 + q + 1;
            break;
        case Family::SymSk:
            cl.n = p4;
            cl.k = {p4 - 2 * p3 - 2, p4 - 2 * p3 + 2 * q};
            cl.d_lower = q / 2 + 1;
            cl.stabilizer_count = p4 - q;
            break;
        case Family::SymSe:
            cl.n = p4 + q + 2;
            cl.k = {p4 - 2 * p3 + q, p4 - 2 * p3 + q};
            cl.d_lower = q / 2 + 2;
            cl.stabilizer_count = p4 + 3 * q + 2;
            break;
    }
    return cl;
}

bool PaperClaimReport::any_fail() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const ClaimCheck& c) { return c.status == ClaimStatus::Fail; });
}

PaperClaimReport paper_claim_report(const CssCode& code, const QuantumDistanceResult* distance) {
    if (!code.family) throw std::invalid_argument("paper_claim_report: code has no family tag");
    PaperClaimReport rep;
    rep.family = *code.family;
    rep.s = code.s;
    QuantumClaims cl = quantum_claims(*code.family, code.s);

    auto add = [&rep](std::string field, ClaimStatus st, std::string detail) {
        rep.checks.push_back({std::move(field), st, std::move(detail)});
    };

    add("n", static_cast<long>(code.n) == cl.n ? ClaimStatus::Pass : ClaimStatus::Fail,
        "computed " + std::to_string(code.n) + ", claimed " + std::to_string(cl.n));

    {
        std::string detail = "computed " + std::to_string(code.k_quantum) + ", claimed [" +
                             std::to_string(cl.k.lower) + "," + std::to_string(cl.k.upper) + "]";
        add("K", cl.k.contains(code.k_quantum) ? ClaimStatus::Pass : ClaimStatus::Fail, detail);
    }

    add("stabilizer_count",
        static_cast<long>(code.stabilizer_count) == cl.stabilizer_count ? ClaimStatus::Pass
                                                                        : ClaimStatus::Fail,
        "computed " + std::to_string(code.stabilizer_count) + ", claimed " +
            std::to_string(cl.stabilizer_count));

    if (distance) {
        if (distance->no_logical_operators) {
            add("D", ClaimStatus::Pass, "K = 0, no logical operators");
        } else if (distance->exact) {
            long d = *distance->exact;
            if (d < cl.d_lower)
                add("D", ClaimStatus::Fail,
                    "computed " + std::to_string(d) + " below claimed " +
                        std::to_string(cl.d_lower));
            else if (cl.d_is_exact_claim && d != cl.d_lower)
                add("D", ClaimStatus::Flag,
                    "computed " + std::to_string(d) + ", claimed exactly " +
                        std::to_string(cl.d_lower));
            else
                add("D", ClaimStatus::Pass,
                    "computed " + std::to_string(d) + ", claimed " +
                        (cl.d_is_exact_claim ? "= " : ">= ") + std::to_string(cl.d_lower));
        } else {
            bool ok = distance->at_least >= cl.d_lower;
            add("D", ok ? ClaimStatus::Pass : ClaimStatus::Flag,
                "certified >= " + std::to_string(distance->at_least) + ", claimed " +
                    (cl.d_is_exact_claim ? "= " : ">= ") + std::to_string(cl.d_lower));
        }
    }
    return rep;
}

}  // namespace pgq
