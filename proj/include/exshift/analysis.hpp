#pragma once

#include <map>
#include <optional>
#include <vector>

#include "exshift/complex.hpp"
#include "exshift/shifting.hpp"

namespace exshift {

struct DominanceReport {
    enum class Verdict { dominates, equal, violated };

    struct Entry {
        Face s;
        long long left = 0;
        long long right = 0;
        long long margin = 0;  // left - right
    };

    // keyed by face cardinality; entries ascending in the counting order
    std::map<int, std::vector<Entry>> per_degree;
    Verdict verdict = Verdict::equal;
    // first violating S, or the minimal symmetric-difference witness when
    // the complexes differ but dominance holds
    std::optional<Face> witness;
};

const char* to_string(DominanceReport::Verdict v);

// Number of faces of sigma of cardinality |S| that are <= S in the order.
// Cross-computed through the face-ideal complement identity and asserted
// equal.
std::size_t m_leq(const SimplicialComplex& sigma, Face s, TermOrder order);

// Weak ideal-side count: |{R in ideal-degree-d monomials : R >= S}| for
// the monomial set given.
std::size_t m_geq(const std::set<Face>& monomials, Face s, TermOrder order);

DominanceReport rev_dominance(const SimplicialComplex& left,
                              const SimplicialComplex& right,
                              TermOrder order);

// Theorem-style bound: margins of Delta(sigma) against Delta(Delta_phi(sigma)),
// both shifts with required consensus. count_order defaults to revlex; lex
// is exposed as the negative control.
DominanceReport check_theorem_bound(const SimplicialComplex& sigma,
                                    const FieldMatrix& phi,
                                    const ShiftConfig& cfg,
                                    TermOrder count_order = TermOrder::revlex);

// Join bound: Delta(sigma * tau) against Delta(Delta(sigma) * Delta(tau)).
DominanceReport check_corollary_join(const SimplicialComplex& sigma,
                                     const SimplicialComplex& tau,
                                     const ShiftConfig& cfg,
                                     TermOrder count_order = TermOrder::revlex);

// Rank monotonicity across a pair of term orders: for J = psi(J_sigma),
// per-monomial margins of m_geq(Gin(J)) against m_geq(Gin(in_inner(J))),
// both sides computed as rank profiles with fresh generic matrices and
// cross-trial agreement required.
DominanceReport check_rank_monotonicity(const SimplicialComplex& sigma,
                                        const FieldMatrix& psi,
                                        TermOrder inner_order,
                                        TermOrder gin_order,
                                        const ShiftConfig& cfg);

// Weights d_k = 2^(n-k) realizing revlex on equal-cardinality subsets:
// S precedes R iff sum of weights over S exceeds the sum over R.
std::vector<std::uint64_t> revlex_weights(int n);

// Degree-d initial component of diag(t0^w_1..t0^w_n) * psi applied to the
// face ideal. For any nonzero t0 this equals the unspecialized component.
std::set<Face> diagonal_specialize(const SimplicialComplex& sigma,
                                   const FieldMatrix& psi,
                                   const std::vector<std::uint64_t>& weights,
                                   std::uint64_t t0, int d);

}  // namespace exshift
