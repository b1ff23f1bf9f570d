#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "pgq/css.hpp"

using namespace pgq;

namespace {

struct Built {
    PlaneModel plane;
    HyperovalPartition part;
};

Built build(int s) {
    PlaneModel plane = PlaneModel::build(s);
    HyperovalPartition part = build_hyperoval_partition(plane);
    return {std::move(plane), std::move(part)};
}

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() & 1) m.set(r, c, true);
    return m;
}

}  // namespace

TEST_CASE("validate_stabilizer basics") {
    CHECK(validate_stabilizer(BitMatrix(3, 5), BitMatrix(3, 5)));  // zero blocks
    BitMatrix id = BitMatrix::identity(4);
    CHECK(validate_stabilizer(id, id));  // I + I = 0 in characteristic 2

    BitMatrix a(1, 2), b(1, 2);
    a.set(0, 0, true);
    b.set(0, 1, true);
    CHECK(validate_stabilizer(a, b));  // X(10), Z(01): disjoint supports commute

    // single-qubit X and Z anticommute: A=[1], B=[1] gives AB^t = 1 != 0 = ...
    BitMatrix ax(1, 1), bz(1, 1);
    ax.set(0, 0, true);
    bz.set(0, 0, true);
    CHECK(validate_stabilizer(ax, bz));  // (1|1) with itself: 1+1 = 0
    // two generators (1|0) and (0|1) anticommute
    BitMatrix a2(2, 1), b2(2, 1);
    a2.set(0, 0, true);
    b2.set(1, 0, true);
    CHECK_FALSE(validate_stabilizer(a2, b2));

    CHECK_THROWS_AS(validate_stabilizer(BitMatrix(2, 3), BitMatrix(2, 4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_stabilizer(BitMatrix(2, 3), BitMatrix(3, 3)),
                    std::invalid_argument);
}

TEST_CASE("matrix route agrees with pairwise twisted inner products") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        BitMatrix a = random_matrix(rng, 5, 9);
        BitMatrix b = random_matrix(rng, 5, 9);
        bool pairwise = true;
        for (std::size_t i = 0; i < a.rows() && pairwise; ++i)
            for (std::size_t j = 0; j < a.rows() && pairwise; ++j) {
                SymplecticVector u{a.row(i), b.row(i)}, v{a.row(j), b.row(j)};
                pairwise = twisted_inner_product(u, v) == 0;
            }
        CHECK(validate_stabilizer(a, b) == pairwise);
    }
}

TEST_CASE("symmetric builder") {
    Built b2 = build(2);
    CssCode pi = build_symmetric_css(build_m_pi_prime(b2.plane));
    CHECK(pi.n == 22);
    CHECK(pi.k_quantum == 2);
    CHECK(pi.rank_hx == 10);
    CHECK(pi.stabilizer_count == 42);

    Built b1 = build(1);
    CssCode pi1 = build_symmetric_css(build_m_pi_prime(b1.plane));
    CHECK(pi1.n == 8);
    CHECK(pi1.k_quantum == 0);  // still a valid stabilizer structure

    CHECK_THROWS_AS(build_symmetric_css(build_h_se(b2.plane, b2.part)), std::invalid_argument);
}

TEST_CASE("asymmetric builder") {
    Built b = build(2);
    ParityCheckMatrix sk = build_h_sk(b.plane, b.part);
    ParityCheckMatrix se = build_h_se(b.plane, b.part);
    CssCode asym = build_asymmetric_css(sk, se);
    CHECK(asym.n == 16);
    CHECK(asym.k_quantum == 1);
    CHECK(asym.stabilizer_count == 21);

    // (H, H) for self-orthogonal H coincides with the symmetric build
    CssCode via_asym = build_asymmetric_css(sk, sk);
    CssCode via_sym = build_symmetric_css(sk);
    CHECK(via_asym.k_quantum == via_sym.k_quantum);
    CHECK(via_asym.rank_hx == via_sym.rank_hx);
    CHECK(via_asym.stabilizer_count == via_sym.stabilizer_count);

    ParityCheckMatrix mpp = build_m_pi_prime(b.plane);
    CHECK_THROWS_AS(build_asymmetric_css(sk, mpp), std::invalid_argument);
}

TEST_CASE("families: K, stabilizer counts, and the stabilizer condition") {
    // K values frozen from independent rank computations
    const std::map<int, std::map<Family, long>> expected_k{
        {1, {{Family::Pi, 0}, {Family::Asym, 0}, {Family::SymSk, 2}, {Family::SymSe, 0}}},
        {2, {{Family::Pi, 2}, {Family::Asym, 1}, {Family::SymSk, 6}, {Family::SymSe, 2}}},
        {3, {{Family::Pi, 18}, {Family::Asym, 17}, {Family::SymSk, 26}, {Family::SymSe, 18}}},
    };
    for (const auto& [s, ks] : expected_k) {
        CAPTURE(s);
        Built b = build(s);
        for (const auto& [fam, want_k] : ks) {
            CAPTURE(family_name(fam));
            CssCode code = build_family(fam, b.plane, b.part);
            CHECK(code.k_quantum == want_k);
            QuantumClaims cl = quantum_claims(fam, s);
            CHECK(cl.k.contains(code.k_quantum));
            CHECK(static_cast<long>(code.stabilizer_count) == cl.stabilizer_count);
            CHECK(static_cast<long>(code.n) == cl.n);

            // stacked stabilizer halves satisfy the commutation identity
            auto [pa, pb] = stabilizer_parts(code);
            CHECK(validate_stabilizer(pa, pb));
            CHECK(mul_transpose(code.hx.h, code.hz.h).is_zero());

            // K equals k1 + k2 - n of the underlying classical codes
            long k1 = static_cast<long>(code.n) - static_cast<long>(code.rank_hx);
            long k2 = static_cast<long>(code.n) - static_cast<long>(code.rank_hz);
            CHECK(code.k_quantum == k1 + k2 - static_cast<long>(code.n));
        }
    }
}

TEST_CASE("stabilizer counts at s=2 match the table forms") {
    Built b = build(2);
    CHECK(build_family(Family::Pi, b.plane, b.part).stabilizer_count == 42);
    CHECK(build_family(Family::Asym, b.plane, b.part).stabilizer_count == 21);
    CHECK(build_family(Family::SymSk, b.plane, b.part).stabilizer_count == 12);
    CHECK(build_family(Family::SymSe, b.plane, b.part).stabilizer_count == 30);
}

TEST_CASE("build_family validates s") {
    CHECK_THROWS_AS(build_family(Family::Pi, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_family(Family::Pi, 5), std::invalid_argument);
}

TEST_CASE("quantum distances at s<=2") {
    // frozen from an independent coset enumeration
    Built b1 = build(1);
    Built b2 = build(2);

    SUBCASE("K = 0 codes have no logical operators") {
        for (Family f : {Family::Pi, Family::Asym, Family::SymSe}) {
            QuantumDistanceResult r = quantum_distance_exact(build_family(f, b1.plane, b1.part));
            CHECK(r.no_logical_operators);
            CHECK_FALSE(r.exact.has_value());
        }
    }
    SUBCASE("sym-sk at s=1 is a [[4,2,2]] code") {
        QuantumDistanceResult r =
            quantum_distance_exact(build_family(Family::SymSk, b1.plane, b1.part));
        REQUIRE(r.exact.has_value());
        CHECK(*r.exact == 2);
    }
    SUBCASE("s=2 exact coset distances") {
        const std::map<Family, int> expected{
            {Family::Pi, 6}, {Family::Asym, 3}, {Family::SymSk, 3}, {Family::SymSe, 6}};
        for (const auto& [fam, want] : expected) {
            CAPTURE(family_name(fam));
            CssCode code = build_family(fam, b2.plane, b2.part);
            QuantumDistanceResult r = quantum_distance_exact(code);
            REQUIRE(r.exact.has_value());
            CHECK(*r.exact == want);
            CHECK(*r.exact >= quantum_claims(fam, 2).d_lower);
            // independent recomputation
            CHECK(oracle::coset_distance(oracle::to_int(code.hx.h),
                                         oracle::to_int(code.hz.h)) == want);
        }
    }
    SUBCASE("partition independence") {
        CssCode code = build_family(Family::Pi, b2.plane, b2.part);
        CHECK(quantum_distance_exact(code, std::nullopt, 1).exact ==
              quantum_distance_exact(code, std::nullopt, 3).exact);
    }
}

TEST_CASE("coset distance is never below the classical minimum") {
    Built b = build(2);
    CssCode pi = build_family(Family::Pi, b.plane, b.part);
    DistanceResult classical = min_distance_oracle(pi.hx.h);
    QuantumDistanceResult quantum = quantum_distance_exact(pi);
    REQUIRE(classical.exact.has_value());
    REQUIRE(quantum.exact.has_value());
    CHECK(*quantum.exact >= *classical.exact);
}

TEST_CASE("capped quantum distance at s=3") {
    Built b = build(3);
    CssCode asym = build_family(Family::Asym, b.plane, b.part);
    QuantumDistanceResult r = quantum_distance_exact(asym, 4);
    // claim: D >= 2^{s-1}+1 = 5; a cap of 4 certifies it
    if (r.exact)
        CHECK(*r.exact >= 5);
    else
        CHECK(r.at_least == 5);
    CHECK_THROWS_AS(quantum_distance_exact(asym), std::runtime_error);
}

TEST_CASE("paper_claim_report") {
    Built b = build(2);
    SUBCASE("family pi passes all four fields") {
        CssCode code = build_family(Family::Pi, b.plane, b.part);
        QuantumDistanceResult dist = quantum_distance_exact(code);
        PaperClaimReport rep = paper_claim_report(code, &dist);
        CHECK(rep.checks.size() == 4);
        CHECK_FALSE(rep.any_fail());
        for (const ClaimCheck& c : rep.checks) CHECK(c.status == ClaimStatus::Pass);
    }
    SUBCASE("sym-se matches pi in length and dimension") {
        CssCode pi = build_family(Family::Pi, b.plane, b.part);
        CssCode se = build_family(Family::SymSe, b.plane, b.part);
        CHECK(pi.n == se.n);
        CHECK(pi.k_quantum == se.k_quantum);
    }
    SUBCASE("distance below the claim fails") {
        CssCode code = build_family(Family::SymSk, b.plane, b.part);
        QuantumDistanceResult fake;
        fake.exact = 1;
        fake.at_least = 1;
        PaperClaimReport rep = paper_claim_report(code, &fake);
        CHECK(rep.any_fail());
    }
}
