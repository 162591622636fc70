#include <doctest.h>

#include <random>

#include "exshift/exterior.hpp"
#include "oracle.hpp"

using namespace exshift;

TEST_CASE("wedge_sign") {
    CHECK(wedge_sign(face_of({1}), face_of({2})) == 1);
    CHECK(wedge_sign(face_of({2}), face_of({1})) == -1);
    CHECK(wedge_sign(face_of({1, 3}), face_of({3})) == 0);
    CHECK(wedge_sign(face_of({1, 3}), face_of({2, 4})) == -1);  // one inversion

    // graded antisymmetry on disjoint pairs
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        Face s{rng() & full_mask(10)};
        Face t{rng() & full_mask(10) & ~s.mask};
        int st = wedge_sign(s, t), ts = wedge_sign(t, s);
        int expected = (card(s) * card(t)) % 2 ? -ts : ts;
        CHECK(st == expected);
    }
}

TEST_CASE("compare reproduces the published orderings") {
    CHECK(compare(TermOrder::revlex, face_of({1, 2, 6}), face_of({1, 3, 4})) <
          0);
    CHECK(compare(TermOrder::lex, face_of({1, 3, 4}), face_of({1, 2, 5})) < 0);
    CHECK(compare(TermOrder::lex, face_of({1, 3, 4}), face_of({1, 2, 6})) < 0);
    CHECK(compare(TermOrder::revlex, face_of({2, 3}), face_of({2, 3})) == 0);
    // lower cardinality always precedes
    CHECK(compare(TermOrder::revlex, face_of({5}), face_of({1, 2})) < 0);
    CHECK(compare(TermOrder::lex, face_of({5}), face_of({1, 2})) < 0);
}

TEST_CASE("compare is a strict total order on each cardinality class") {
    for (TermOrder order : {TermOrder::revlex, TermOrder::lex}) {
        for (int d = 1; d <= 4; ++d) {
            auto subsets = enumerate_subsets(8, d, order, true);
            // trichotomy + antisymmetry
            for (Face a : subsets)
                for (Face b : subsets) {
                    int ab = compare(order, a, b);
                    CHECK(ab == -compare(order, b, a));
                    CHECK(((a == b) == (ab == 0)));
                }
            // sortedness of the enumeration implies transitivity given
            // antisymmetry; spot-check transitivity on random triples
            std::mt19937_64 rng(11);
            for (int i = 0; i < 500; ++i) {
                Face a = subsets[rng() % subsets.size()];
                Face b = subsets[rng() % subsets.size()];
                Face c = subsets[rng() % subsets.size()];
                if (compare(order, a, b) < 0 && compare(order, b, c) < 0)
                    CHECK(compare(order, a, c) < 0);
            }
        }
    }
}

TEST_CASE("enumerate_subsets") {
    auto first5 = enumerate_subsets(6, 3, TermOrder::revlex, true);
    REQUIRE(first5.size() == binomial(6, 3));
    CHECK(first5[0] == face_of({1, 2, 3}));
    CHECK(first5[1] == face_of({1, 2, 4}));
    CHECK(first5[2] == face_of({1, 2, 5}));
    CHECK(first5[3] == face_of({1, 2, 6}));
    CHECK(first5[4] == face_of({1, 3, 4}));

    // adjacent elements strictly ordered, full pairwise consistency
    for (std::size_t i = 0; i < first5.size(); ++i)
        for (std::size_t j = i + 1; j < first5.size(); ++j)
            CHECK(compare(TermOrder::revlex, first5[i], first5[j]) < 0);

    auto single = enumerate_subsets(3, 3, TermOrder::lex, true);
    CHECK(single == std::vector<Face>{face_of({1, 2, 3})});

    auto desc = enumerate_subsets(6, 3, TermOrder::revlex, false);
    std::reverse(desc.begin(), desc.end());
    CHECK(desc == first5);
}

TEST_CASE("apply_transform identity and diagonal") {
    PrimeField f(kDefaultPrime);
    auto id = FieldMatrix::identity(f, 4);
    ExteriorElement x{2,
                      {{face_of({1, 2}), 3}, {face_of({2, 4}), 5}}};
    CHECK(apply_transform(id, x).terms == x.terms);

    // diagonal matrices scale e_S by the product over S
    FieldMatrix diag(f, 4, 4);
    std::uint64_t t[4] = {2, 3, 5, 7};
    for (int i = 0; i < 4; ++i) diag(i, i) = t[i];
    auto y = apply_transform(diag, x);
    CHECK(y.terms.at(face_of({1, 2})) == f.mul(3, 2 * 3));
    CHECK(y.terms.at(face_of({2, 4})) == f.mul(5, 3 * 7));
}

TEST_CASE("apply_transform on the top exterior power is the determinant") {
    PrimeField f(kDefaultPrime);
    auto phi = random_invertible_matrix(f, 3, 17);
    ExteriorElement top{3, {{face_of({1, 2, 3}), 1}}};
    auto y = apply_transform(phi, top);
    REQUIRE(y.terms.size() == 1);
    CHECK(y.terms.at(face_of({1, 2, 3})) == determinant(phi));
}

TEST_CASE("transform minors match the permutation-expansion oracle") {
    PrimeField f(kDefaultPrime);
    std::mt19937_64 rng(23);
    for (int n = 2; n <= 5; ++n) {
        auto phi = random_invertible_matrix(f, n, rng());
        for (int d = 1; d <= n; ++d) {
            for (Face s : enumerate_subsets(n, d, TermOrder::revlex, true)) {
                auto minors = transform_monomial(phi, s);
                for (Face r : enumerate_subsets(n, d, TermOrder::revlex,
                                                true)) {
                    FieldMatrix sub(f, d, d);
                    auto rows = vertices_of(r);
                    auto cols = vertices_of(s);
                    for (int a = 0; a < d; ++a)
                        for (int b = 0; b < d; ++b)
                            sub(a, b) = phi(rows[a] - 1, cols[b] - 1);
                    std::uint64_t want = oracle::det_by_cofactor(sub);
                    auto it = minors.find(r);
                    CHECK((it == minors.end() ? 0 : it->second) == want);
                }
            }
        }
    }
}

TEST_CASE("apply_transform is multiplicative (Cauchy-Binet)") {
    PrimeField f(kDefaultPrime);
    std::mt19937_64 rng(31);
    for (int n = 2; n <= 5; ++n) {
        auto phi = random_invertible_matrix(f, n, rng());
        auto psi = random_invertible_matrix(f, n, rng());
        for (int d = 1; d <= n; ++d) {
            ExteriorElement x;
            x.degree = d;
            for (Face s : enumerate_subsets(n, d, TermOrder::revlex, true))
                if (rng() % 2) x.terms[s] = rng() % f.modulus();
            auto composed = apply_transform(phi * psi, x);
            auto stepped = apply_transform(phi, apply_transform(psi, x));
            CHECK(composed.terms == stepped.terms);
        }
    }
}

TEST_CASE("apply_transform is linear") {
    PrimeField f(kDefaultPrime);
    auto phi = random_invertible_matrix(f, 4, 3);
    ExteriorElement a{2, {{face_of({1, 2}), 9}, {face_of({3, 4}), 2}}};
    ExteriorElement b{2, {{face_of({1, 3}), 4}, {face_of({3, 4}), 11}}};
    ExteriorElement sum{2, {}};
    for (const auto& [s, c] : a.terms) sum.terms[s] = f.add(sum.terms[s], c);
    for (const auto& [s, c] : b.terms) sum.terms[s] = f.add(sum.terms[s], c);
    auto lhs = apply_transform(phi, sum);
    auto ra = apply_transform(phi, a);
    auto rb = apply_transform(phi, b);
    ExteriorElement rhs{2, ra.terms};
    for (const auto& [s, c] : rb.terms)
        rhs.terms[s] = f.add(rhs.terms[s], c);
    std::erase_if(rhs.terms, [](const auto& kv) { return kv.second == 0; });
    CHECK(lhs.terms == rhs.terms);
}
