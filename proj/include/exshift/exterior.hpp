#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "exshift/field.hpp"

namespace exshift {

inline constexpr int kMaxGroundSize = 62;

// Subset of the ground set [n] with 1-based vertex labels; bit v-1 of the
// mask is vertex v. Doubles as the index of the exterior monomial e_S.
struct Face {
    std::uint64_t mask = 0;
    auto operator<=>(const Face&) const = default;
};

Face face_of(std::initializer_list<int> vertices);
Face face_from_vertices(const std::vector<int>& vertices);
std::vector<int> vertices_of(Face f);
std::string face_to_string(Face f);

inline int card(Face f) { return __builtin_popcountll(f.mask); }
inline bool is_subset(Face r, Face s) { return (r.mask & ~s.mask) == 0; }
inline Face face_union(Face a, Face b) { return {a.mask | b.mask}; }
inline std::uint64_t full_mask(int n) {
    return n == 0 ? 0 : (~0ULL >> (64 - n));
}

enum class TermOrder { revlex, lex };

TermOrder term_order_from_string(const std::string& s);
std::string to_string(TermOrder order);

// Three-way comparison in the given order: negative when s precedes r.
// Lower cardinality always precedes. For equal cardinality the symmetric
// difference decides: under revlex its minimal element lies in the smaller
// face, under lex its maximal element lies in the larger face (ground
// order 1 < 2 < ... < n in both).
int compare(TermOrder order, Face s, Face r);
inline bool precedes(TermOrder order, Face s, Face r) {
    return compare(order, s, r) < 0;
}

// All d-subsets of [n], strictly sorted in the order.
std::vector<Face> enumerate_subsets(int n, int d, TermOrder order,
                                    bool ascending);

// Sign of e_S ^ e_T: 0 when the factors overlap, otherwise the parity of
// the inversions between the sorted sequences.
int wedge_sign(Face s, Face t);

// Homogeneous element of the exterior algebra; zero coefficients absent.
struct ExteriorElement {
    int degree = 0;
    std::map<Face, std::uint64_t> terms;
};

// Coefficients of phi(e_S): the map R -> det(phi[rows R, cols S]) over all
// R of size |S|, computed by Laplace expansion along the columns of S with
// memoization on row subsets. Column convention phi(e_j) = sum_i a_ij e_i.
std::map<Face, std::uint64_t> transform_monomial(const FieldMatrix& phi,
                                                 Face s);

ExteriorElement apply_transform(const FieldMatrix& phi,
                                const ExteriorElement& x);

std::uint64_t binomial(int n, int k);

}  // namespace exshift
