#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "exshift/analysis.hpp"
#include "exshift/complex.hpp"

namespace exshift {

// Random downward-closed complex: a handful of random facets, closed.
SimplicialComplex random_complex(int n, std::mt19937_64& rng);

enum class MatrixKind { generic, permutation, unitriangular };

FieldMatrix random_matrix_of_kind(const PrimeField& field, std::size_t n,
                                  MatrixKind kind, std::uint64_t seed);

struct FuzzConfig {
    int cases = 200;
    int n_max = 7;
    int k_max = 4;  // left ground-set cap for join cases
    std::uint64_t seed = 1;
    std::uint64_t prime = kDefaultPrime;
    int trials = 3;
};

struct FuzzSummary {
    int cases = 0;
    int violations = 0;
    int consensus_failures = 0;
    int strict_margins = 0;  // cases where dominance was strict
    std::vector<std::string> lines;     // one per case, in case order
    std::vector<std::string> failures;  // replay details for violations
};

// Each runner derives all randomness from (seed, case index) so runs are
// replayable case by case. Every case also asserts f-vector preservation
// under delta_phi.
FuzzSummary fuzz_theorem(const FuzzConfig& cfg);

// Case 0 is pinned to the known strict instance (the suspended pair of
// disjoint edges joined with two points).
FuzzSummary fuzz_corollary(const FuzzConfig& cfg);

// Alternates the (inner, gin) order pair between (lex, revlex) and
// (revlex, lex).
FuzzSummary fuzz_proposition(const FuzzConfig& cfg);

}  // namespace exshift
