#include "exshift/field.hpp"

#include <random>

namespace exshift {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b %
                                      m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (m % p == 0) return m == p;
    }
    // Deterministic Miller-Rabin for 64-bit inputs with the first 12 primes.
    std::uint64_t d = m - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, m);
        if (x == 1 || x == m - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, m);
            if (x == m - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (1ULL << 62))
        throw std::invalid_argument("field modulus must be below 2^62");
    if (!is_prime(p))
        throw std::invalid_argument("field modulus must be prime");
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const {
    return powmod(base, exp, p_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a % p_ == 0)
        throw std::domain_error("division by zero in prime field");
    return pow(a % p_, p_ - 2);
}

FieldMatrix FieldMatrix::identity(PrimeField field, std::size_t n) {
    FieldMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols() != b.rows() || !(a.field() == b.field()))
        throw std::invalid_argument("matrix product dimension mismatch");
    const PrimeField& f = a.field();
    FieldMatrix c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            std::uint64_t aik = a(i, k);
            if (!aik) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
        }
    return c;
}

EchelonResult row_echelon_pivots(const FieldMatrix& m) {
    FieldMatrix a = m;
    const PrimeField& f = a.field();
    EchelonResult res;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = col; j < a.cols(); ++j)
                std::swap(a(piv, j), a(row, j));
        std::uint64_t pinv = f.inv(a(row, col));
        for (std::size_t i = row + 1; i < a.rows(); ++i) {
            std::uint64_t factor = f.mul(a(i, col), pinv);
            if (!factor) continue;
            a(i, col) = 0;
            for (std::size_t j = col + 1; j < a.cols(); ++j)
                a(i, j) = f.sub(a(i, j), f.mul(factor, a(row, j)));
        }
        res.pivots.push_back(col);
        ++row;
    }
    res.rank = res.pivots.size();
    return res;
}

std::uint64_t minor_determinant(const FieldMatrix& m, std::uint64_t row_sel,
                                std::uint64_t col_sel) {
    if (__builtin_popcountll(row_sel) != __builtin_popcountll(col_sel))
        throw std::invalid_argument("minor selections differ in size");
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < 64; ++i) {
        if (row_sel >> i & 1) rows.push_back(i);
        if (col_sel >> i & 1) cols.push_back(i);
    }
    if (!rows.empty() && (rows.back() >= m.rows() || cols.back() >= m.cols()))
        throw std::invalid_argument("minor selection out of range");
    const std::size_t k = rows.size();
    FieldMatrix sub(m.field(), k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
    return determinant(sub);
}

std::uint64_t determinant(const FieldMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    FieldMatrix a = m;
    const PrimeField& f = a.field();
    const std::size_t n = a.rows();
    std::uint64_t det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j)
                std::swap(a(piv, j), a(col, j));
            det = f.neg(det);
        }
        det = f.mul(det, a(col, col));
        std::uint64_t pinv = f.inv(a(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            std::uint64_t factor = f.mul(a(i, col), pinv);
            if (!factor) continue;
            for (std::size_t j = col; j < n; ++j)
                a(i, j) = f.sub(a(i, j), f.mul(factor, a(col, j)));
        }
    }
    return det;
}

bool is_invertible(const FieldMatrix& m) {
    return m.rows() == m.cols() && determinant(m) != 0;
}

namespace {

// Unbiased residue from a 64-bit stream: reject draws above the largest
// multiple of p.
std::uint64_t uniform_residue(std::mt19937_64& rng, std::uint64_t p) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % p;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % p;
}

}  // namespace

FieldMatrix random_invertible_matrix(const PrimeField& field, std::size_t n,
                                     std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("matrix size must be positive");
    std::mt19937_64 rng(seed);
    for (;;) {
        FieldMatrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = uniform_residue(rng, field.modulus());
        if (determinant(m) != 0) return m;
    }
}

}  // namespace exshift
