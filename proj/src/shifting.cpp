#include "exshift/shifting.hpp"

#include <algorithm>

namespace exshift {

DegreeMatrix build_degree_matrix(const SimplicialComplex& sigma,
                                 const FieldMatrix& phi, int d,
                                 TermOrder order) {
    const int n = sigma.ground_size();
    if (phi.rows() != static_cast<std::size_t>(n) || phi.rows() != phi.cols())
        throw std::invalid_argument("transform size does not match complex");
    std::vector<Face> columns = enumerate_subsets(n, d, order, false);
    std::map<Face, std::size_t> col_index;
    for (std::size_t j = 0; j < columns.size(); ++j)
        col_index.emplace(columns[j], j);

    std::vector<Face> gens = nonfaces_of_degree(sigma, d);
    FieldMatrix m(phi.field(), gens.size(), columns.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (const auto& [r, coeff] : transform_monomial(phi, gens[i]))
            m(i, col_index.at(r)) = coeff;
    return DegreeMatrix{d, std::move(columns), std::move(m)};
}

std::set<Face> initial_degree_component(const DegreeMatrix& m) {
    std::set<Face> out;
    for (std::size_t col : row_echelon_pivots(m.matrix).pivots)
        out.insert(m.columns[col]);
    return out;
}

SimplicialComplex delta_phi(const SimplicialComplex& sigma,
                            const FieldMatrix& phi, TermOrder order) {
    if (!is_invertible(phi))
        throw std::invalid_argument("delta_phi requires an invertible matrix");
    const int n = sigma.ground_size();
    std::set<Face> faces{Face{0}};
    for (int d = 1; d <= n; ++d) {
        std::set<Face> initial =
            initial_degree_component(build_degree_matrix(sigma, phi, d, order));
        for (Face s : enumerate_subsets(n, d, order, true))
            if (!initial.count(s)) faces.insert(s);
    }
    SimplicialComplex out(n, std::move(faces));
    for (Face f : out.faces()) {
        std::uint64_t m = f.mask;
        while (m) {
            std::uint64_t bit = m & -m;
            if (!out.has_face(Face{f.mask ^ bit}))
                throw std::logic_error(
                    "initial complex is not downward closed (arithmetic bug)");
            m ^= bit;
        }
    }
    return out;
}

ShiftOutcome exterior_shift(const SimplicialComplex& sigma,
                            const ShiftConfig& cfg) {
    if (cfg.trials < 1)
        throw std::invalid_argument("at least one trial is required");
    if (cfg.prime < (1ULL << 16))
        throw std::invalid_argument(
            "genericity sampling needs a prime of at least 2^16");
    PrimeField field(cfg.prime);
    if (sigma.ground_size() == 0)
        return ShiftOutcome{sigma, cfg.prime, {}, cfg.trials, true};
    const std::size_t n = static_cast<std::size_t>(sigma.ground_size());

    std::vector<std::uint64_t> seeds;
    std::vector<SimplicialComplex> results;
    auto run_trials = [&](int count) {
        while (static_cast<int>(results.size()) < count) {
            std::uint64_t s = splitmix64(cfg.seed + results.size());
            seeds.push_back(s);
            results.push_back(delta_phi(
                sigma, random_invertible_matrix(field, n, s), cfg.order));
        }
    };

    run_trials(cfg.trials);
    bool agree = std::all_of(results.begin(), results.end(),
                             [&](const auto& r) { return r == results[0]; });
    if (agree)
        return ShiftOutcome{results[0], cfg.prime, seeds, cfg.trials, true};

    // One escalation: gather more evidence, then report the majority.
    run_trials(cfg.trials * 2);
    std::map<std::set<Face>, int> votes;
    for (const auto& r : results) ++votes[r.faces()];
    const SimplicialComplex* majority = &results[0];
    int best = 0;
    for (const auto& r : results) {
        int v = votes[r.faces()];
        if (v > best) {
            best = v;
            majority = &r;
        }
    }
    return ShiftOutcome{*majority, cfg.prime, seeds,
                        static_cast<int>(results.size()), false};
}

SimplicialComplex exterior_shift_strict(const SimplicialComplex& sigma,
                                        const ShiftConfig& cfg) {
    ShiftOutcome out = exterior_shift(sigma, cfg);
    if (!out.consensus)
        throw ConsensusError("random trials disagree on the shifted complex");
    return out.complex;
}

std::map<Face, std::size_t> rank_profile(const SimplicialComplex& sigma,
                                         const FieldMatrix& phi, int d,
                                         TermOrder order) {
    DegreeMatrix m = build_degree_matrix(sigma, phi, d, order);
    EchelonResult ech = row_echelon_pivots(m.matrix);
    std::map<Face, std::size_t> out;
    std::size_t pivots_seen = 0;
    auto next_pivot = ech.pivots.begin();
    for (std::size_t j = 0; j < m.columns.size(); ++j) {
        if (next_pivot != ech.pivots.end() && *next_pivot == j) {
            ++pivots_seen;
            ++next_pivot;
        }
        out.emplace(m.columns[j], pivots_seen);
    }
    return out;
}

bool is_shifted(const SimplicialComplex& sigma) {
    for (Face f : sigma.faces())
        for (int v : vertices_of(f))
            for (int u = 1; u < v; ++u) {
                std::uint64_t ubit = 1ULL << (u - 1);
                if (f.mask & ubit) continue;
                Face g{(f.mask ^ (1ULL << (v - 1))) | ubit};
                if (!sigma.has_face(g)) return false;
            }
    return true;
}

}  // namespace exshift
