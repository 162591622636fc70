#include "exshift/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "exshift/io.hpp"
#include "exshift/shifting.hpp"

namespace exshift {

SimplicialComplex random_complex(int n, std::mt19937_64& rng) {
    int facet_count = 1 + static_cast<int>(rng() % (n + 2));
    std::vector<Face> facets;
    for (int i = 0; i < facet_count; ++i)
        facets.push_back(Face{rng() & full_mask(n)});
    return from_facets(n, facets);
}

FieldMatrix random_matrix_of_kind(const PrimeField& field, std::size_t n,
                                  MatrixKind kind, std::uint64_t seed) {
    switch (kind) {
        case MatrixKind::generic:
            return random_invertible_matrix(field, n, seed);
        case MatrixKind::permutation: {
            std::mt19937_64 rng(seed);
            std::vector<std::size_t> perm(n);
            for (std::size_t i = 0; i < n; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            FieldMatrix m(field, n, n);
            for (std::size_t j = 0; j < n; ++j) m(perm[j], j) = 1;
            return m;
        }
        case MatrixKind::unitriangular: {
            std::mt19937_64 rng(seed);
            FieldMatrix m = FieldMatrix::identity(field, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    m(i, j) = rng() % field.modulus();
            return m;
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

struct CaseOutcome {
    bool violated = false;
    bool consensus_failure = false;
    bool strict = false;
    std::string line;
    std::string failure;
};

const char* kind_name(MatrixKind k) {
    switch (k) {
        case MatrixKind::generic: return "generic";
        case MatrixKind::permutation: return "permutation";
        case MatrixKind::unitriangular: return "unitriangular";
    }
    return "?";
}

FuzzSummary run_parallel(int count,
                         const std::function<CaseOutcome(int)>& fn) {
    std::vector<CaseOutcome> outcomes(count);
    std::atomic<int> next{0};
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, count == 0 ? 1 : count);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                outcomes[i] = fn(i);
            }
        });
    for (auto& t : pool) t.join();

    FuzzSummary sum;
    sum.cases = count;
    for (const auto& o : outcomes) {
        if (o.violated) ++sum.violations;
        if (o.consensus_failure) ++sum.consensus_failures;
        if (o.strict) ++sum.strict_margins;
        sum.lines.push_back(o.line);
        if (!o.failure.empty()) sum.failures.push_back(o.failure);
    }
    return sum;
}

std::string describe_complex(const SimplicialComplex& c) {
    std::ostringstream os;
    os << "n=" << c.ground_size() << " facets:";
    for (Face f : c.facets()) os << ' ' << face_to_string(f);
    return os.str();
}

CaseOutcome outcome_from_report(const std::string& label, int idx,
                                const DominanceReport& rep,
                                const std::string& replay) {
    CaseOutcome out;
    out.violated = rep.verdict == DominanceReport::Verdict::violated;
    out.strict = rep.verdict == DominanceReport::Verdict::dominates;
    std::ostringstream os;
    os << label << " case " << idx << ": " << to_string(rep.verdict);
    if (rep.witness) os << " witness " << face_to_string(*rep.witness);
    out.line = os.str();
    if (out.violated) out.failure = out.line + " | " + replay;
    return out;
}

}  // namespace

FuzzSummary fuzz_theorem(const FuzzConfig& cfg) {
    PrimeField field(cfg.prime);
    return run_parallel(cfg.cases, [&](int idx) -> CaseOutcome {
        std::uint64_t cs = splitmix64(cfg.seed ^ (0x7E0000ULL + idx));
        std::mt19937_64 rng(cs);
        int n = 2 + static_cast<int>(rng() % (cfg.n_max - 1));
        SimplicialComplex sigma = random_complex(n, rng);
        MatrixKind kind = static_cast<MatrixKind>(idx % 3);
        FieldMatrix phi =
            random_matrix_of_kind(field, n, kind, splitmix64(cs ^ 0xF1));
        ShiftConfig scfg{cfg.prime, cfg.trials, splitmix64(cs ^ 0xF2),
                         TermOrder::revlex};
        std::string replay = describe_complex(sigma) + " phi=" +
                             kind_name(kind) + " seed=" + std::to_string(cs);
        try {
            if (f_vector(delta_phi(sigma, phi)) != f_vector(sigma)) {
                CaseOutcome out;
                out.violated = true;
                out.line = "theorem case " + std::to_string(idx) +
                           ": f-vector not preserved";
                out.failure = out.line + " | " + replay;
                return out;
            }
            DominanceReport rep = check_theorem_bound(sigma, phi, scfg);
            return outcome_from_report("theorem", idx, rep, replay);
        } catch (const ConsensusError& e) {
            CaseOutcome out;
            out.consensus_failure = true;
            out.line = "theorem case " + std::to_string(idx) +
                       ": consensus failure";
            out.failure = out.line + " | " + replay;
            return out;
        }
    });
}

FuzzSummary fuzz_corollary(const FuzzConfig& cfg) {
    return run_parallel(cfg.cases, [&](int idx) -> CaseOutcome {
        std::uint64_t cs = splitmix64(cfg.seed ^ (0xC0000ULL + idx));
        std::mt19937_64 rng(cs);
        SimplicialComplex sigma = from_facets(1, {});
        SimplicialComplex tau = from_facets(1, {});
        if (idx == 0) {
            // pinned strict instance: two disjoint edges joined with 2 points
            sigma = from_facets(4, {face_of({1, 2}), face_of({3, 4})});
            tau = from_facets(2, {face_of({1}), face_of({2})});
        } else {
            int k = 1 + static_cast<int>(rng() % cfg.k_max);
            int l = 1 + static_cast<int>(rng() % (cfg.n_max - k));
            sigma = random_complex(k, rng);
            tau = random_complex(l, rng);
        }
        ShiftConfig scfg{cfg.prime, cfg.trials, splitmix64(cs ^ 0xF3),
                         TermOrder::revlex};
        std::string replay = "sigma: " + describe_complex(sigma) +
                             " tau: " + describe_complex(tau) +
                             " seed=" + std::to_string(cs);
        try {
            DominanceReport rep = check_corollary_join(sigma, tau, scfg);
            return outcome_from_report("corollary", idx, rep, replay);
        } catch (const ConsensusError&) {
            CaseOutcome out;
            out.consensus_failure = true;
            out.line = "corollary case " + std::to_string(idx) +
                       ": consensus failure";
            out.failure = out.line + " | " + replay;
            return out;
        }
    });
}

FuzzSummary fuzz_proposition(const FuzzConfig& cfg) {
    PrimeField field(cfg.prime);
    return run_parallel(cfg.cases, [&](int idx) -> CaseOutcome {
        std::uint64_t cs = splitmix64(cfg.seed ^ (0xB0000ULL + idx));
        std::mt19937_64 rng(cs);
        int n = 2 + static_cast<int>(rng() % (cfg.n_max - 1));
        SimplicialComplex sigma = random_complex(n, rng);
        MatrixKind kind = static_cast<MatrixKind>(idx % 3);
        FieldMatrix psi =
            random_matrix_of_kind(field, n, kind, splitmix64(cs ^ 0xF4));
        TermOrder inner = idx % 2 ? TermOrder::lex : TermOrder::revlex;
        TermOrder gin = idx % 2 ? TermOrder::revlex : TermOrder::lex;
        ShiftConfig scfg{cfg.prime, cfg.trials, splitmix64(cs ^ 0xF5),
                         TermOrder::revlex};
        std::string replay = describe_complex(sigma) + " psi=" +
                             kind_name(kind) + " inner=" + to_string(inner) +
                             " gin=" + to_string(gin) +
                             " seed=" + std::to_string(cs);
        try {
            DominanceReport rep =
                check_rank_monotonicity(sigma, psi, inner, gin, scfg);
            return outcome_from_report("proposition", idx, rep, replay);
        } catch (const ConsensusError&) {
            CaseOutcome out;
            out.consensus_failure = true;
            out.line = "proposition case " + std::to_string(idx) +
                       ": consensus failure";
            out.failure = out.line + " | " + replay;
            return out;
        }
    });
}

}  // namespace exshift
