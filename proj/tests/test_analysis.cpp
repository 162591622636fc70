#include <doctest.h>

#include <random>

#include "exshift/analysis.hpp"
#include "exshift/fuzz.hpp"

using namespace exshift;

namespace {

SimplicialComplex two_edges() {
    return from_facets(4, {face_of({1, 2}), face_of({3, 4})});
}

ShiftConfig cfg(std::uint64_t seed = 1) {
    return ShiftConfig{kDefaultPrime, 3, seed, TermOrder::revlex};
}

// the pair from the join counterexample: shift(susp(sigma)) and
// shift(susp(shift(sigma)))
std::pair<SimplicialComplex, SimplicialComplex> counterexample_pair() {
    auto sigma = two_edges();
    auto left = exterior_shift_strict(suspension(sigma), cfg(2));
    auto right = exterior_shift_strict(
        suspension(exterior_shift_strict(sigma, cfg(3))), cfg(4));
    return {left, right};
}

}  // namespace

TEST_CASE("m_leq on the counterexample pair") {
    auto [left, right] = counterexample_pair();
    Face s126 = face_of({1, 2, 6});
    CHECK(m_leq(left, s126, TermOrder::revlex) == 4);
    CHECK(m_leq(right, s126, TermOrder::revlex) == 3);

    Face s134 = face_of({1, 3, 4});
    CHECK(m_leq(left, s134, TermOrder::lex) == 2);
    CHECK(m_leq(right, s134, TermOrder::lex) == 3);
}

TEST_CASE("m_leq complement identity holds on random complexes") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + static_cast<int>(rng() % 5);
        auto c = random_complex(n, rng);
        for (TermOrder order : {TermOrder::revlex, TermOrder::lex})
            for (int d = 1; d <= n; ++d)
                for (Face s : enumerate_subsets(n, d, order, true))
                    CHECK_NOTHROW(m_leq(c, s, order));  // throws on mismatch
    }
}

TEST_CASE("rev_dominance verdicts") {
    auto [left, right] = counterexample_pair();

    auto self = rev_dominance(left, left, TermOrder::revlex);
    CHECK(self.verdict == DominanceReport::Verdict::equal);
    CHECK(!self.witness);

    auto rep = rev_dominance(left, right, TermOrder::revlex);
    CHECK(rep.verdict == DominanceReport::Verdict::dominates);
    CHECK(rep.witness == face_of({1, 2, 6}));

    auto swapped = rev_dominance(right, left, TermOrder::revlex);
    CHECK(swapped.verdict == DominanceReport::Verdict::violated);
    CHECK(swapped.witness == face_of({1, 2, 6}));

    // the lex negative control fires at {1,3,4}
    auto lex = rev_dominance(left, right, TermOrder::lex);
    CHECK(lex.verdict == DominanceReport::Verdict::violated);
    CHECK(lex.witness == face_of({1, 3, 4}));
}

TEST_CASE("check_theorem_bound") {
    PrimeField f(kDefaultPrime);
    auto sigma = suspension(two_edges());

    auto id_rep = check_theorem_bound(
        sigma, FieldMatrix::identity(f, sigma.ground_size()), cfg(7));
    CHECK(id_rep.verdict == DominanceReport::Verdict::equal);

    auto simplex_rep = check_theorem_bound(
        full_simplex(4), random_invertible_matrix(f, 4, 11), cfg(8));
    CHECK(simplex_rep.verdict == DominanceReport::Verdict::equal);

    // the counterexample instance: phi a generic block on the first four
    // coordinates
    auto phi = block_embed(random_invertible_matrix(f, 4, 13), 6, 0);
    auto rep = check_theorem_bound(sigma, phi, cfg(9));
    CHECK(rep.verdict == DominanceReport::Verdict::dominates);
    CHECK(rep.witness == face_of({1, 2, 6}));
    bool strict_at_witness = false;
    for (const auto& e : rep.per_degree.at(3))
        if (e.s == face_of({1, 2, 6}) && e.margin > 0)
            strict_at_witness = true;
    CHECK(strict_at_witness);

    // lex counting order on the same instance must report the violation
    auto lex_rep = check_theorem_bound(sigma, phi, cfg(9), TermOrder::lex);
    CHECK(lex_rep.verdict == DominanceReport::Verdict::violated);
    CHECK(lex_rep.witness == face_of({1, 3, 4}));
}

TEST_CASE("check_corollary_join") {
    auto nevo = check_corollary_join(
        two_edges(), from_facets(2, {face_of({1}), face_of({2})}), cfg(21));
    CHECK(nevo.verdict == DominanceReport::Verdict::dominates);
    CHECK(nevo.witness == face_of({1, 2, 6}));

    auto simplices =
        check_corollary_join(full_simplex(3), full_simplex(2), cfg(22));
    CHECK(simplices.verdict == DominanceReport::Verdict::equal);

    // already-shifted factors are fixed points, so the two sides coincide
    auto shifted_sigma = from_facets(3, {face_of({1, 2}), face_of({1, 3})});
    auto shifted_tau = from_facets(2, {face_of({1}), face_of({2})});
    auto fixed = check_corollary_join(shifted_sigma, shifted_tau, cfg(23));
    CHECK(fixed.verdict == DominanceReport::Verdict::equal);
}

TEST_CASE("check_rank_monotonicity") {
    PrimeField f(kDefaultPrime);
    auto sigma = two_edges();

    auto id_rep = check_rank_monotonicity(
        sigma, FieldMatrix::identity(f, 4), TermOrder::revlex,
        TermOrder::revlex, cfg(31));
    CHECK(id_rep.verdict == DominanceReport::Verdict::equal);

    std::mt19937_64 rng(67);
    for (int iter = 0; iter < 8; ++iter) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto c = random_complex(n, rng);
        auto psi = random_invertible_matrix(f, n, rng());
        for (auto [inner, gin] :
             {std::pair{TermOrder::lex, TermOrder::revlex},
              std::pair{TermOrder::revlex, TermOrder::lex}}) {
            auto rep = check_rank_monotonicity(c, psi, inner, gin, cfg(rng()));
            CHECK(rep.verdict != DominanceReport::Verdict::violated);
        }
    }
}

TEST_CASE("rank monotonicity margins carry the theorem margins") {
    // with inner = gin = revlex the weak ideal-side margins shifted by one
    // column are exactly the complex-side margins
    PrimeField f(kDefaultPrime);
    std::mt19937_64 rng(71);
    for (int iter = 0; iter < 10; ++iter) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto sigma = random_complex(n, rng);
        auto psi = random_invertible_matrix(f, n, rng());
        auto prop = check_rank_monotonicity(sigma, psi, TermOrder::revlex,
                                            TermOrder::revlex, cfg(rng()));
        auto theo = check_theorem_bound(sigma, psi, cfg(rng()));
        for (int d = 1; d <= n; ++d) {
            const auto& pm = prop.per_degree.at(d);
            const auto& tm = theo.per_degree.at(d);
            REQUIRE(pm.size() == tm.size());
            for (std::size_t i = 0; i + 1 < tm.size(); ++i)
                CHECK(tm[i].margin == pm[i + 1].margin);
            CHECK(tm.back().margin == 0);
        }
    }
}

TEST_CASE("revlex_weights") {
    CHECK(revlex_weights(3) == std::vector<std::uint64_t>{4, 2, 1});
    CHECK(revlex_weights(1) == std::vector<std::uint64_t>{1});
    auto w = revlex_weights(10);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) CHECK(w[i] > w[i + 1]);

    // the order equivalence, exhaustively for small n
    for (int n = 1; n <= 6; ++n) {
        auto weights = revlex_weights(n);
        auto sum = [&](Face s) {
            std::uint64_t t = 0;
            for (int v : vertices_of(s)) t += weights[v - 1];
            return t;
        };
        for (int d = 1; d <= n; ++d) {
            auto subsets = enumerate_subsets(n, d, TermOrder::revlex, true);
            for (Face a : subsets)
                for (Face b : subsets)
                    if (a != b)
                        CHECK((compare(TermOrder::revlex, a, b) < 0) ==
                              (sum(a) > sum(b)));
        }
    }
}

TEST_CASE("diagonal_specialize") {
    PrimeField f(kDefaultPrime);
    auto sigma = two_edges();
    auto weights = revlex_weights(4);

    // a diagonal map fixes a monomial ideal
    auto id = FieldMatrix::identity(f, 4);
    auto spec = diagonal_specialize(sigma, id, weights, 12345, 2);
    auto gens = nonfaces_of_degree(sigma, 2);
    CHECK(spec == std::set<Face>(gens.begin(), gens.end()));

    CHECK_THROWS_AS(diagonal_specialize(sigma, id, weights, 0, 2),
                    std::invalid_argument);

    std::mt19937_64 rng(73);
    for (int iter = 0; iter < 10; ++iter) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto c = random_complex(n, rng);
        auto psi = random_invertible_matrix(f, n, rng());
        std::uint64_t t0 = 1 + rng() % (f.modulus() - 1);
        auto w = revlex_weights(n);
        for (int d = 1; d <= n; ++d)
            CHECK(diagonal_specialize(c, psi, w, t0, d) ==
                  initial_degree_component(
                      build_degree_matrix(c, psi, d, TermOrder::revlex)));
    }
}
