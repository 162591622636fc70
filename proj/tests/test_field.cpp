#include <doctest.h>

#include <random>

#include "exshift/field.hpp"
#include "oracle.hpp"

using namespace exshift;

namespace {

PrimeField small_field() { return PrimeField(65537); }  // small enough to reason about

FieldMatrix mat(const PrimeField& f, std::size_t r, std::size_t c,
                std::initializer_list<std::uint64_t> vals) {
    FieldMatrix m(f, r, c);
    auto it = vals.begin();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = *it++ % f.modulus();
    return m;
}

}  // namespace

TEST_CASE("field inverse") {
    PrimeField f(7);
    CHECK(f.inv(1) == 1);
    CHECK(f.inv(3) == 5);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);

    PrimeField big(kDefaultPrime);
    for (std::uint64_t a : {std::uint64_t{2}, std::uint64_t{12345},
                            kDefaultPrime - 1})
        CHECK(big.mul(a, big.inv(a)) == 1);
}

TEST_CASE("field modulus validation") {
    CHECK_THROWS_AS(PrimeField(1 << 20), std::invalid_argument); // composite
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK(PrimeField(2147483647ULL).modulus() == 2147483647ULL);
}

TEST_CASE("field axioms on random triples") {
    PrimeField f(kDefaultPrime);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t a = rng() % f.modulus(), b = rng() % f.modulus(),
                      c = rng() % f.modulus();
        CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        if (a) CHECK(f.mul(a, f.inv(a)) == 1);
    }
}

TEST_CASE("row_echelon_pivots basics") {
    PrimeField f = small_field();
    auto id = FieldMatrix::identity(f, 3);
    auto r = row_echelon_pivots(id);
    CHECK(r.rank == 3);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

    FieldMatrix zero(f, 4, 5);
    r = row_echelon_pivots(zero);
    CHECK(r.rank == 0);
    CHECK(r.pivots.empty());

    auto dup = mat(f, 2, 2, {1, 1, 1, 1});
    r = row_echelon_pivots(dup);
    CHECK(r.rank == 1);
    CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("row_echelon_pivots does not modify its argument") {
    PrimeField f = small_field();
    auto m = mat(f, 2, 3, {1, 2, 3, 4, 5, 6});
    auto copy = m;
    row_echelon_pivots(m);
    CHECK(m == copy);
}

TEST_CASE("minor_determinant") {
    PrimeField f = small_field();
    auto id = FieldMatrix::identity(f, 4);
    // rows/cols {1,3}
    CHECK(minor_determinant(id, 0b101, 0b101) == 1);

    auto m = mat(f, 2, 2, {1, 2, 3, 4});
    // ad - bc = -2
    CHECK(minor_determinant(m, 0b11, 0b11) == f.modulus() - 2);

    CHECK_THROWS_AS(minor_determinant(m, 0b1, 0b11), std::invalid_argument);
}

TEST_CASE("random_invertible_matrix determinism and invertibility") {
    PrimeField f(kDefaultPrime);
    for (std::size_t n = 1; n <= 5; ++n) {
        auto a = random_invertible_matrix(f, n, 42);
        auto b = random_invertible_matrix(f, n, 42);
        CHECK(a == b);
        CHECK(random_invertible_matrix(f, n, 43) != a);
        // against the permutation-expansion oracle
        CHECK(oracle::det_by_cofactor(a) != 0);
        CHECK(oracle::det_by_cofactor(a) == determinant(a));
    }
}

TEST_CASE("rank and pivots invariant under invertible row operations") {
    PrimeField f(kDefaultPrime);
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t rows = 2 + rng() % 4, cols = 2 + rng() % 5;
        FieldMatrix m(f, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (rng() % 3) m(i, j) = rng() % f.modulus();
        auto psi = random_invertible_matrix(f, rows, rng());
        auto base = row_echelon_pivots(m);
        auto moved = row_echelon_pivots(psi * m);
        CHECK(base.rank == moved.rank);
        CHECK(base.pivots == moved.pivots);
    }
}
