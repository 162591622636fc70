#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace exshift {

// Default modulus: the Mersenne prime 2^31 - 1. Products of two residues
// fit comfortably in a 64-bit (in fact 62-bit) accumulator.
inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

bool is_prime(std::uint64_t m);

// splitmix64 step, used to derive independent per-trial seeds.
std::uint64_t splitmix64(std::uint64_t x);

// Arithmetic in the prime field F_p. Residues are plain uint64_t in [0, p).
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p = kDefaultPrime);

    std::uint64_t modulus() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(a) * b % p_);
    }
    std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t reduce_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<std::uint64_t>(r);
    }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint64_t p_;
};

// Dense row-major matrix over F_p.
class FieldMatrix {
public:
    FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static FieldMatrix identity(PrimeField field, std::size_t n);

    std::uint64_t& operator()(std::size_t i, std::size_t j) {
        return a_[i * cols_ + j];
    }
    std::uint64_t operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    bool operator==(const FieldMatrix&) const = default;

private:
    PrimeField field_;
    std::size_t rows_, cols_;
    std::vector<std::uint64_t> a_;
};

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);

struct EchelonResult {
    std::vector<std::size_t> pivots;  // ascending column indices
    std::size_t rank = 0;
};

// Gaussian elimination on a copy; pivots are exactly the columns where the
// prefix rank jumps.
EchelonResult row_echelon_pivots(const FieldMatrix& m);

// Determinant of the square submatrix selected by 1-based row/column index
// masks (bit i-1 selects index i), indices taken in increasing order.
std::uint64_t minor_determinant(const FieldMatrix& m, std::uint64_t row_sel,
                                std::uint64_t col_sel);

std::uint64_t determinant(const FieldMatrix& m);
bool is_invertible(const FieldMatrix& m);

// Deterministic n x n invertible matrix with entries uniform in F_p, drawn
// from std::mt19937_64 with unbiased rejection reduction and resampled until
// the determinant is nonzero. Same (n, seed, p) gives the same matrix.
FieldMatrix random_invertible_matrix(const PrimeField& field, std::size_t n,
                                     std::uint64_t seed);

}  // namespace exshift
