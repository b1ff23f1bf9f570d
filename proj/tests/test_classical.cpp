#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "pgq/classical.hpp"
#include "pgq/tanner.hpp"

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

}  // namespace

TEST_CASE("construction shapes and row weights") {
    for (int s = 1; s <= 3; ++s) {
        CAPTURE(s);
        Built b = build(s);
        const long q = 1 << s;

        ParityCheckMatrix mp = build_m_pi(b.plane);
        CHECK(static_cast<long>(mp.h.rows()) == q * q + q + 1);
        CHECK(static_cast<long>(mp.h.cols()) == q * q + q + 1);

        ParityCheckMatrix mpp = build_m_pi_prime(b.plane);
        CHECK(static_cast<long>(mpp.h.cols()) == q * q + q + 2);
        CHECK(mpp.has_u_column());

        ParityCheckMatrix sk = build_h_sk(b.plane, b.part);
        CHECK(static_cast<long>(sk.h.rows()) == (q * q - q) / 2);
        CHECK(static_cast<long>(sk.h.cols()) == q * q);

        ParityCheckMatrix sea = build_h_sea(b.plane, b.part);
        CHECK(static_cast<long>(sea.h.rows()) == (q * q + 3 * q + 2) / 2);
        CHECK(static_cast<long>(sea.h.cols()) == q * q + q + 2);

        ParityCheckMatrix se = build_h_se(b.plane, b.part);
        CHECK(static_cast<long>(se.h.rows()) == (q * q + 3 * q + 2) / 2);
        CHECK(static_cast<long>(se.h.cols()) == q * q);

        for (std::size_t r = 0; r < mp.h.rows(); ++r)
            REQUIRE(static_cast<long>(mp.h.row_weight(r)) == q + 1);
        for (std::size_t r = 0; r < mpp.h.rows(); ++r)
            REQUIRE(static_cast<long>(mpp.h.row_weight(r)) == q + 2);
        for (std::size_t r = 0; r < sk.h.rows(); ++r)
            REQUIRE(static_cast<long>(sk.h.row_weight(r)) == q + 2);
        for (std::size_t r = 0; r < sea.h.rows(); ++r)
            REQUIRE(static_cast<long>(sea.h.row_weight(r)) == q + 2);
        for (std::size_t r = 0; r < se.h.rows(); ++r)
            REQUIRE(static_cast<long>(se.h.row_weight(r)) == q);
    }
}

TEST_CASE("ranks match the independently computed values") {
    // {s -> {construction -> rank}} cross-checked by exhaustive elimination
    // in a separate implementation
    const std::map<int, std::map<Construction, int>> expected{
        {1,
         {{Construction::MPi, 4},
          {Construction::MPiPrime, 4},
          {Construction::HSk, 1},
          {Construction::HSeA, 4},
          {Construction::HSe, 3}}},
        {2,
         {{Construction::MPi, 10},
          {Construction::MPiPrime, 10},
          {Construction::HSk, 5},
          {Construction::HSeA, 10},
          {Construction::HSe, 10}}},
        {3,
         {{Construction::MPi, 28},
          {Construction::MPiPrime, 28},
          {Construction::HSk, 19},
          {Construction::HSeA, 28},
          {Construction::HSe, 28}}},
    };
    for (const auto& [s, ranks] : expected) {
        CAPTURE(s);
        Built b = build(s);
        for (const auto& [cons, want] : ranks) {
            ParityCheckMatrix pcm = build_construction(cons, b.plane, b.part);
            CAPTURE(construction_name(cons));
            CHECK(static_cast<int>(rank(pcm.h)) == want);
            if (s <= 2) CHECK(oracle::rank(oracle::to_int(pcm.h)) == want);
        }
    }
}

TEST_CASE("orthogonality structure") {
    for (int s = 1; s <= 3; ++s) {
        CAPTURE(s);
        Built b = build(s);
        ParityCheckMatrix mpp = build_m_pi_prime(b.plane);
        ParityCheckMatrix sk = build_h_sk(b.plane, b.part);
        ParityCheckMatrix sea = build_h_sea(b.plane, b.part);
        ParityCheckMatrix se = build_h_se(b.plane, b.part);

        CHECK(mul_transpose(mpp.h, mpp.h).is_zero());
        CHECK(mul_transpose(sk.h, sk.h).is_zero());
        CHECK(mul_transpose(sea.h, sea.h).is_zero());
        CHECK_FALSE(mul_transpose(se.h, se.h).is_zero());
        CHECK(mul_transpose(se.h, sk.h).is_zero());

        // pairwise overlaps: uniformly 2 for the self-orthogonal ones, and
        // h-se has a pair overlapping exactly once
        TannerStats st_mpp = analyze(mpp.h);
        CHECK(st_mpp.overlap_spectrum.size() == 1);
        CHECK(st_mpp.overlap_spectrum.count(2) == 1);

        TannerStats st_se = analyze(se.h);
        CHECK(st_se.overlap_spectrum.count(1) == 1);
    }
}

TEST_CASE("dimension claims of the propositions") {
    // k = n - rank; frozen from the rank table above
    Built b1 = build(1);
    Built b2 = build(2);

    ClassicalCodeRecord r1 = code_record(build_m_pi_prime(b1.plane));
    CHECK(r1.n == 8);
    CHECK(r1.k == 4);
    CHECK(r1.claims.k.contains(4));

    ClassicalCodeRecord r2 = code_record(build_m_pi_prime(b2.plane));
    CHECK(r2.n == 22);
    CHECK(r2.k == 12);
    CHECK(r2.claims.k.contains(12));

    ClassicalCodeRecord sk2 = code_record(build_h_sk(b2.plane, b2.part));
    CHECK(sk2.n == 16);
    CHECK(sk2.k == 11);
    CHECK(sk2.claims.k.lower == 6);
    CHECK(sk2.claims.k.upper == 11);

    ClassicalCodeRecord sea2 = code_record(build_h_sea(b2.plane, b2.part));
    CHECK(sea2.k == 12);
    CHECK(sea2.claims.k.contains(12));

    // the stated h-se dimension disagrees with n - rank
    ClassicalCodeRecord se2 = code_record(build_h_se(b2.plane, b2.part));
    CHECK(se2.k == 6);
    CHECK(se2.claims.k.lower == 12);
    CHECK_FALSE(se2.claims.k.contains(static_cast<long>(se2.k)));

    ClassicalCodeRecord se1 = code_record(build_h_se(b1.plane, b1.part));
    CHECK(se1.k == 1);
    CHECK_FALSE(se1.claims.k.contains(static_cast<long>(se1.k)));
}

TEST_CASE("exact minimum distances at s=1,2") {
    // frozen from an independent exhaustive enumeration
    const std::map<int, std::map<Construction, int>> expected{
        {1,
         {{Construction::MPiPrime, 4},
          {Construction::HSk, 2},
          {Construction::HSeA, 4},
          {Construction::HSe, 4}}},
        {2,
         {{Construction::MPiPrime, 6},
          {Construction::HSk, 3},
          {Construction::HSeA, 6},
          {Construction::HSe, 6}}},
    };
    for (const auto& [s, dists] : expected) {
        CAPTURE(s);
        Built b = build(s);
        for (const auto& [cons, want] : dists) {
            CAPTURE(construction_name(cons));
            ParityCheckMatrix pcm = build_construction(cons, b.plane, b.part);
            DistanceResult res = min_distance_oracle(pcm.h);
            REQUIRE(res.exact.has_value());
            CHECK(*res.exact == want);
            CHECK(res.at_least == want);
            REQUIRE(res.codeword.has_value());
            CHECK(static_cast<int>(res.codeword->weight()) == want);
            CHECK(mul_vector(pcm.h, *res.codeword).is_zero());
            // independent recomputation
            CHECK(oracle::min_distance(oracle::to_int(pcm.h)) == want);
            // proposition bounds hold
            CHECK(classical_claims(cons, s).d.contains(want));
        }
    }
}

TEST_CASE("distance oracle is partition independent") {
    Built b = build(2);
    ParityCheckMatrix pcm = build_m_pi_prime(b.plane);
    DistanceResult a = min_distance_oracle(pcm.h, std::nullopt, 1);
    DistanceResult c = min_distance_oracle(pcm.h, std::nullopt, 3);
    CHECK(a.exact == c.exact);
    CHECK(a.codeword == c.codeword);
}

TEST_CASE("capped search agrees with full enumeration") {
    Built b = build(2);
    for (Construction cons : {Construction::MPiPrime, Construction::HSk, Construction::HSeA,
                              Construction::HSe}) {
        CAPTURE(construction_name(cons));
        ParityCheckMatrix pcm = build_construction(cons, b.plane, b.part);
        DistanceResult full = min_distance_oracle(pcm.h);
        DistanceResult capped = min_distance_capped(pcm.h, 8);
        REQUIRE(capped.exact.has_value());
        CHECK(capped.exact == full.exact);
        // a low cap certifies a bound instead
        DistanceResult low = min_distance_capped(pcm.h, *full.exact - 1);
        CHECK_FALSE(low.exact.has_value());
        CHECK(low.at_least == *full.exact);
    }
}

TEST_CASE("distance witnesses are codewords of the stated weight") {
    for (int s = 1; s <= 3; ++s) {
        CAPTURE(s);
        Built b = build(s);
        const long q = 1 << s;
        const std::map<Construction, long> expected_weight{
            {Construction::MPiPrime, q + 2},
            {Construction::HSeA, q + 2},
            {Construction::HSk, q},
            {Construction::HSe, q + 2},
        };
        for (const auto& [cons, want] : expected_weight) {
            CAPTURE(construction_name(cons));
            ParityCheckMatrix pcm = build_construction(cons, b.plane, b.part);
            BitVector w = distance_witness(cons, b.plane, b.part);
            CHECK(static_cast<long>(w.weight()) == want);
            CHECK(mul_vector(pcm.h, w).is_zero());
            CHECK(w.get(pcm.h.cols() - 1));  // u bit set
        }
    }
    Built b1 = build(1);
    CHECK_THROWS_AS(distance_witness(Construction::MPi, b1.plane, b1.part),
                    std::invalid_argument);
    // oracle cross-check from the examples: witness weight equals the exact
    // distance for m-pi-prime at s=1
    DistanceResult d = min_distance_oracle(build_m_pi_prime(b1.plane).h);
    CHECK(*d.exact == static_cast<int>(
                          distance_witness(Construction::MPiPrime, b1.plane, b1.part).weight()));
}

TEST_CASE("rank is unchanged by the unit column") {
    for (int s = 1; s <= 3; ++s) {
        Built b = build(s);
        CHECK(rank(build_m_pi(b.plane).h) == rank(build_m_pi_prime(b.plane).h));
    }
}

TEST_CASE("resource guard") {
    Built b = build(3);
    ParityCheckMatrix sk = build_h_sk(b.plane, b.part);  // k = 45
    CHECK_THROWS_AS(min_distance_oracle(sk.h), std::runtime_error);
}

TEST_CASE("capped search at s=3 certifies the proposition bounds") {
    Built b = build(3);
    ParityCheckMatrix mpp = build_m_pi_prime(b.plane);
    DistanceResult res = min_distance_oracle(mpp.h, 5);
    CHECK_FALSE(res.exact.has_value());
    CHECK(res.at_least == 6);

    // h-sk at s=3: claim interval [5,8]; cap 8 settles it exactly
    ParityCheckMatrix sk = build_h_sk(b.plane, b.part);
    DistanceResult sk_res = min_distance_oracle(sk.h, 8);
    REQUIRE(sk_res.exact.has_value());
    CHECK(classical_claims(Construction::HSk, 3).d.contains(*sk_res.exact));
}
