#include "exshift/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace exshift {

const char* to_string(DominanceReport::Verdict v) {
    switch (v) {
        case DominanceReport::Verdict::dominates: return "dominates";
        case DominanceReport::Verdict::equal: return "equal";
        case DominanceReport::Verdict::violated: return "violated";
    }
    return "?";
}

std::size_t m_leq(const SimplicialComplex& sigma, Face s, TermOrder order) {
    const int d = card(s);
    std::size_t direct = 0;
    std::size_t faces_d = 0;
    for (Face r : sigma.faces_of_size(d)) {
        ++faces_d;
        if (compare(order, r, s) <= 0) ++direct;
    }

    // complement identity: |sigma_d| - #{R in C(n,d): R > S} + #{nonface R > S}
    std::size_t all_above = 0, nonface_above = 0;
    for (Face r : enumerate_subsets(sigma.ground_size(), d, order, true))
        if (compare(order, r, s) > 0) {
            ++all_above;
            if (!sigma.has_face(r)) ++nonface_above;
        }
    std::size_t via_identity = faces_d - all_above + nonface_above;
    if (direct != via_identity)
        throw std::logic_error("m_leq complement identity failed");
    return direct;
}

std::size_t m_geq(const std::set<Face>& monomials, Face s, TermOrder order) {
    std::size_t count = 0;
    for (Face r : monomials)
        if (card(r) == card(s) && compare(order, r, s) >= 0) ++count;
    return count;
}

namespace {

DominanceReport::Verdict verdict_of(const DominanceReport& rep) {
    bool all_zero = true;
    for (const auto& [d, entries] : rep.per_degree)
        for (const auto& e : entries) {
            if (e.margin < 0) return DominanceReport::Verdict::violated;
            if (e.margin != 0) all_zero = false;
        }
    return all_zero ? DominanceReport::Verdict::equal
                    : DominanceReport::Verdict::dominates;
}

}  // namespace

DominanceReport rev_dominance(const SimplicialComplex& left,
                              const SimplicialComplex& right,
                              TermOrder order) {
    if (left.ground_size() != right.ground_size())
        throw std::invalid_argument("dominance needs equal ground sets");
    const int n = left.ground_size();
    DominanceReport rep;
    for (int d = 1; d <= n; ++d) {
        auto& entries = rep.per_degree[d];
        for (Face s : enumerate_subsets(n, d, order, true)) {
            long long l = static_cast<long long>(m_leq(left, s, order));
            long long r = static_cast<long long>(m_leq(right, s, order));
            entries.push_back({s, l, r, l - r});
        }
    }
    rep.verdict = verdict_of(rep);

    if (rep.verdict == DominanceReport::Verdict::violated) {
        for (const auto& [d, entries] : rep.per_degree) {
            for (const auto& e : entries)
                if (e.margin < 0) {
                    rep.witness = e.s;
                    return rep;
                }
        }
    } else if (rep.verdict == DominanceReport::Verdict::dominates) {
        // minimal element of the first nonempty symmetric difference
        for (int d = 1; d <= n && !rep.witness; ++d) {
            for (Face s : enumerate_subsets(n, d, order, true))
                if (left.has_face(s) != right.has_face(s)) {
                    rep.witness = s;
                    break;
                }
        }
    }
    return rep;
}

DominanceReport check_theorem_bound(const SimplicialComplex& sigma,
                                    const FieldMatrix& phi,
                                    const ShiftConfig& cfg,
                                    TermOrder count_order) {
    SimplicialComplex shifted = exterior_shift_strict(sigma, cfg);
    SimplicialComplex phi_initial = delta_phi(sigma, phi, TermOrder::revlex);
    ShiftConfig cfg2 = cfg;
    cfg2.seed = splitmix64(cfg.seed ^ 0x5eed);
    SimplicialComplex reshifted = exterior_shift_strict(phi_initial, cfg2);
    return rev_dominance(shifted, reshifted, count_order);
}

DominanceReport check_corollary_join(const SimplicialComplex& sigma,
                                     const SimplicialComplex& tau,
                                     const ShiftConfig& cfg,
                                     TermOrder count_order) {
    SimplicialComplex joined = join(sigma, tau);
    SimplicialComplex left = exterior_shift_strict(joined, cfg);

    ShiftConfig cs = cfg, ct = cfg, cj = cfg;
    cs.seed = splitmix64(cfg.seed ^ 0x51);
    ct.seed = splitmix64(cfg.seed ^ 0x52);
    cj.seed = splitmix64(cfg.seed ^ 0x53);
    SimplicialComplex shifted_join = join(exterior_shift_strict(sigma, cs),
                                          exterior_shift_strict(tau, ct));
    SimplicialComplex right = exterior_shift_strict(shifted_join, cj);
    return rev_dominance(left, right, count_order);
}

DominanceReport check_rank_monotonicity(const SimplicialComplex& sigma,
                                        const FieldMatrix& psi,
                                        TermOrder inner_order,
                                        TermOrder gin_order,
                                        const ShiftConfig& cfg) {
    if (!is_invertible(psi))
        throw std::invalid_argument("psi must be invertible");
    if (cfg.prime < (1ULL << 16))
        throw std::invalid_argument(
            "genericity sampling needs a prime of at least 2^16");
    const int n = sigma.ground_size();
    PrimeField field(cfg.prime);
    SimplicialComplex inner = delta_phi(sigma, psi, inner_order);

    DominanceReport rep;
    for (int d = 1; d <= n; ++d) {
        std::optional<std::map<Face, std::size_t>> left, right;
        for (int t = 0; t < cfg.trials; ++t) {
            FieldMatrix phi_l = random_invertible_matrix(
                field, n, splitmix64(cfg.seed ^ (0xA000 + 2 * t)));
            FieldMatrix phi_r = random_invertible_matrix(
                field, n, splitmix64(cfg.seed ^ (0xB000 + 2 * t + 1)));
            auto l = rank_profile(sigma, phi_l * psi, d, gin_order);
            auto r = rank_profile(inner, phi_r, d, gin_order);
            if (!left) {
                left = std::move(l);
                right = std::move(r);
            } else if (l != *left || r != *right) {
                throw ConsensusError("rank profiles disagree across trials");
            }
        }
        auto& entries = rep.per_degree[d];
        for (Face s : enumerate_subsets(n, d, gin_order, true)) {
            long long l = static_cast<long long>(left->at(s));
            long long r = static_cast<long long>(right->at(s));
            entries.push_back({s, l, r, l - r});
        }
    }
    rep.verdict = verdict_of(rep);
    if (rep.verdict == DominanceReport::Verdict::violated)
        for (const auto& [d, entries] : rep.per_degree)
            for (const auto& e : entries)
                if (e.margin < 0 && !rep.witness) rep.witness = e.s;
    return rep;
}

std::vector<std::uint64_t> revlex_weights(int n) {
    if (n < 0 || n > kMaxGroundSize)
        throw std::invalid_argument("weights need 0 <= n <= 62");
    std::vector<std::uint64_t> w(n);
    for (int k = 1; k <= n; ++k) w[k - 1] = 1ULL << (n - k);
    return w;
}

std::set<Face> diagonal_specialize(const SimplicialComplex& sigma,
                                   const FieldMatrix& psi,
                                   const std::vector<std::uint64_t>& weights,
                                   std::uint64_t t0, int d) {
    const PrimeField& f = psi.field();
    if (t0 % f.modulus() == 0)
        throw std::invalid_argument(
            "t0 must be nonzero; the limit point is the initial ideal itself");
    const std::size_t n = psi.rows();
    if (weights.size() != n)
        throw std::invalid_argument("one weight per basis vector required");
    for (std::uint64_t w : weights)
        if (w == 0) throw std::invalid_argument("weights must be positive");

    FieldMatrix diag(f, n, n);
    for (std::size_t i = 0; i < n; ++i) diag(i, i) = f.pow(t0, weights[i]);
    return initial_degree_component(
        build_degree_matrix(sigma, diag * psi, d, TermOrder::revlex));
}

}  // namespace exshift
