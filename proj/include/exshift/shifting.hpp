#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "exshift/complex.hpp"
#include "exshift/exterior.hpp"
#include "exshift/field.hpp"

namespace exshift {

// Raised when repeated random trials fail to agree on a shifted complex.
struct ConsensusError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degree-d coefficient matrix of the transformed face ideal: one row per
// non-face monomial, columns the d-subsets in strictly descending term
// order, so pivot columns directly name initial monomials.
struct DegreeMatrix {
    int degree;
    std::vector<Face> columns;
    FieldMatrix matrix;
};

DegreeMatrix build_degree_matrix(const SimplicialComplex& sigma,
                                 const FieldMatrix& phi, int d,
                                 TermOrder order);

// Degree-d monomials of the initial ideal of phi(J_sigma): the pivot
// columns of the degree matrix.
std::set<Face> initial_degree_component(const DegreeMatrix& m);

// The complex whose face ideal is the initial ideal of phi(J_sigma).
// Throws std::logic_error if the result fails downward closure (an
// arithmetic bug, never a legitimate outcome).
SimplicialComplex delta_phi(const SimplicialComplex& sigma,
                            const FieldMatrix& phi,
                            TermOrder order = TermOrder::revlex);

struct ShiftConfig {
    std::uint64_t prime = kDefaultPrime;
    int trials = 3;
    std::uint64_t seed = 1;
    TermOrder order = TermOrder::revlex;
};

struct ShiftOutcome {
    SimplicialComplex complex;
    std::uint64_t prime;
    std::vector<std::uint64_t> seeds;
    int trials;
    bool consensus;
};

// Algebraic shift via repeated random matrices. All trials agreeing is the
// empirical stand-in for genericity; on disagreement the trial count is
// doubled once and the outcome reports consensus=false with the majority
// value.
ShiftOutcome exterior_shift(const SimplicialComplex& sigma,
                            const ShiftConfig& cfg);

// Convenience: shift and require consensus, else throw ConsensusError.
SimplicialComplex exterior_shift_strict(const SimplicialComplex& sigma,
                                        const ShiftConfig& cfg);

// For every d-subset S: the rank of the degree-matrix columns R >= S,
// read off one elimination pass as the prefix pivot count.
std::map<Face, std::size_t> rank_profile(const SimplicialComplex& sigma,
                                         const FieldMatrix& phi, int d,
                                         TermOrder order);

// True when replacing any vertex by a smaller one maps faces to faces.
bool is_shifted(const SimplicialComplex& sigma);

}  // namespace exshift
