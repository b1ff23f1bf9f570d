#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pgq/bitmat.hpp"
#include "pgq/plane.hpp"

using namespace pgq;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                        double density = 0.5) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if ((rng() >> 11) * 0x1.0p-53 < density) m.set(r, c, true);
    return m;
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(BitMatrix::identity(3)) == 3);
    CHECK(rank(BitMatrix(4, 7)) == 0);
}

TEST_CASE("rank of the PG(2,4) incidence matrix is 10") {
    PlaneModel plane = PlaneModel::build(2);
    BitMatrix m = incidence_matrix(plane);
    CHECK(m.rows() == 21);
    CHECK(m.cols() == 21);
    CHECK(rank(m) == 10);
}

TEST_CASE("rank agrees with the naive oracle on random matrices") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        BitMatrix m = random_matrix(rng, 10, 20);
        CHECK(static_cast<int>(rank(m)) == oracle::rank(oracle::to_int(m)));
        CHECK(rank(m) == rank(m.transposed()));
    }
}

TEST_CASE("rref") {
    SUBCASE("identity is its own rref") {
        RrefResult rr = rref(BitMatrix::identity(3));
        CHECK(rr.matrix == BitMatrix::identity(3));
        CHECK(rr.pivots == std::vector<std::size_t>{0, 1, 2});
    }
    SUBCASE("duplicate rows collapse") {
        BitMatrix m(2, 2);
        m.set(0, 0, true);
        m.set(0, 1, true);
        m.set(1, 0, true);
        m.set(1, 1, true);
        RrefResult rr = rref(m);
        CHECK(rr.pivots == std::vector<std::size_t>{0});
        CHECK(rr.matrix.get(0, 0));
        CHECK(rr.matrix.get(0, 1));
        CHECK(rr.matrix.row_weight(1) == 0);
    }
    SUBCASE("rank(rref(M)) == rank(M) and rref is idempotent") {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 10; ++i) {
            BitMatrix m = random_matrix(rng, 10, 20);
            RrefResult rr = rref(m);
            CHECK(rank(rr.matrix) == rank(m));
            CHECK(rref(rr.matrix).matrix == rr.matrix);
        }
    }
}

TEST_CASE("nullspace basis") {
    CHECK(nullspace_basis(BitMatrix::identity(3)).rows() == 0);
    CHECK(nullspace_basis(BitMatrix(2, 4)).rows() == 4);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 10; ++i) {
        BitMatrix m = random_matrix(rng, 8, 14);
        BitMatrix basis = nullspace_basis(m);
        CHECK(basis.rows() + rank(m) == m.cols());
        for (std::size_t r = 0; r < basis.rows(); ++r)
            CHECK(mul_vector(m, basis.row(r)).is_zero());
        CHECK(rank(basis) == basis.rows());  // rows independent
    }
}

TEST_CASE("mul_transpose") {
    BitMatrix id = BitMatrix::identity(4);
    CHECK(mul_transpose(id, id) == id);

    BitMatrix a(1, 3), b(1, 3);
    a.set(0, 0, true);
    a.set(0, 1, true);
    b.set(0, 1, true);
    b.set(0, 2, true);
    BitMatrix p = mul_transpose(a, b);
    CHECK(p.rows() == 1);
    CHECK(p.cols() == 1);
    CHECK(p.get(0, 0));  // overlap 1

    CHECK_THROWS_AS(mul_transpose(BitMatrix(2, 3), BitMatrix(2, 4)), std::invalid_argument);
}

TEST_CASE("row_space_contains") {
    BitMatrix id = BitMatrix::identity(3);
    BitVector v(3);
    CHECK(row_space_contains(id, v));  // zero vector
    v.set(0, true);
    v.set(2, true);
    CHECK(row_space_contains(id, v));

    BitMatrix single(1, 4);
    single.set(0, 0, true);
    single.set(0, 1, true);
    BitVector w(4);
    w.set(0, true);
    CHECK_FALSE(row_space_contains(single, w));

    std::mt19937_64 rng(17);
    for (int i = 0; i < 10; ++i) {
        BitMatrix m = random_matrix(rng, 6, 12);
        BitVector x(12);
        for (std::size_t c = 0; c < 12; ++c) x.set(c, rng() & 1);
        oracle::IntVec xv(12);
        for (std::size_t c = 0; c < 12; ++c) xv[c] = x.get(c);
        CHECK(row_space_contains(m, x) == oracle::in_rowspace(oracle::to_int(m), xv));
    }
}

TEST_CASE("twisted inner product") {
    SUBCASE("hand computations") {
        // (10|01) vs (01|10): both terms 1, sum 0
        SymplecticVector u{BitVector(2), BitVector(2)}, v{BitVector(2), BitVector(2)};
        u.x_part.set(0, true);
        u.z_part.set(1, true);
        v.x_part.set(1, true);
        v.z_part.set(0, true);
        CHECK(twisted_inner_product(u, v) == 0);

        // X and Z on one qubit anticommute
        SymplecticVector x1{BitVector(1), BitVector(1)}, z1{BitVector(1), BitVector(1)};
        x1.x_part.set(0, true);
        z1.z_part.set(0, true);
        CHECK(twisted_inner_product(x1, z1) == 1);
        CHECK(twisted_inner_product(z1, x1) == 1);  // symmetric
    }
    SUBCASE("self-pairing is always zero") {
        std::mt19937_64 rng(23);
        for (int i = 0; i < 50; ++i) {
            SymplecticVector u{BitVector(9), BitVector(9)};
            for (std::size_t j = 0; j < 9; ++j) {
                u.x_part.set(j, rng() & 1);
                u.z_part.set(j, rng() & 1);
            }
            CHECK(twisted_inner_product(u, u) == 0);
        }
    }
    SUBCASE("length mismatch throws") {
        SymplecticVector u{BitVector(2), BitVector(2)}, v{BitVector(3), BitVector(3)};
        CHECK_THROWS_AS(twisted_inner_product(u, v), std::invalid_argument);
    }
}

TEST_CASE("mul_vector length mismatch throws") {
    CHECK_THROWS_AS(mul_vector(BitMatrix(2, 3), BitVector(4)), std::invalid_argument);
}
