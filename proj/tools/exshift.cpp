// exshift: exterior algebraic shifting of simplicial complexes over a
// prime field, with checkers for the shift-vs-join comparison bounds.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "exshift/analysis.hpp"
#include "exshift/complex.hpp"
#include "exshift/fuzz.hpp"
#include "exshift/io.hpp"
#include "exshift/shifting.hpp"

using namespace exshift;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoConsensus = 3;

struct CommonOpts {
    std::uint64_t prime = kDefaultPrime;
    int trials = 3;
    std::uint64_t seed = 1;
    std::string order = "revlex";
    bool json = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--prime", opts.prime, "prime field modulus");
    cmd->add_option("--trials", opts.trials, "consensus trial count")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opts.seed, "base RNG seed");
    cmd->add_option("--order", opts.order, "term order (revlex|lex)")
        ->check(CLI::IsMember({"revlex", "lex"}));
    cmd->add_flag("--json", opts.json, "machine-readable output");
}

ShiftConfig shift_config(const CommonOpts& opts) {
    return ShiftConfig{opts.prime, opts.trials, opts.seed,
                       term_order_from_string(opts.order)};
}

int report_exit(const DominanceReport& rep) {
    return rep.verdict == DominanceReport::Verdict::violated ? kExitViolation
                                                             : kExitOk;
}

void print_outcome(const ShiftOutcome& out, bool json) {
    if (json) {
        std::cout << outcome_to_json(out).dump(2) << '\n';
        return;
    }
    std::cout << "n " << out.complex.ground_size() << '\n';
    for (Face f : out.complex.facets())
        std::cout << format_face_vertices(f) << '\n';
    std::cout << "# f-vector:";
    for (std::size_t c : f_vector(out.complex)) std::cout << ' ' << c;
    std::cout << "\n# prime=" << out.prime << " trials=" << out.trials
              << " consensus=" << (out.consensus ? "true" : "false")
              << " seeds=";
    for (std::size_t i = 0; i < out.seeds.size(); ++i)
        std::cout << (i ? "," : "") << out.seeds[i];
    std::cout << '\n';
}

void print_check(const DominanceReport& rep, bool json) {
    if (json)
        std::cout << report_to_json(rep).dump(2) << '\n';
    else
        print_report(std::cout, rep);
}

int run_demo_nevo(const CommonOpts& opts) {
    ShiftConfig cfg = shift_config(opts);
    SimplicialComplex sigma =
        from_facets(4, {face_of({1, 2}), face_of({3, 4})});

    SimplicialComplex left = exterior_shift_strict(suspension(sigma), cfg);
    ShiftConfig cfg2 = cfg;
    cfg2.seed = splitmix64(cfg.seed ^ 0x4E);
    SimplicialComplex shifted_sigma = exterior_shift_strict(sigma, cfg2);
    cfg2.seed = splitmix64(cfg.seed ^ 0x4F);
    SimplicialComplex right =
        exterior_shift_strict(suspension(shifted_sigma), cfg2);

    auto skeleton = [](const SimplicialComplex& c) {
        return c.faces_of_size(3);
    };
    std::set<Face> expected_left = {face_of({1, 2, 3}), face_of({1, 2, 4}),
                                    face_of({1, 2, 5}), face_of({1, 2, 6})};
    std::set<Face> expected_right = {face_of({1, 2, 3}), face_of({1, 2, 4}),
                                     face_of({1, 2, 5}), face_of({1, 3, 4})};

    bool ok = true;
    auto show = [&](const char* label, const std::vector<Face>& got,
                    const std::set<Face>& want) {
        std::cout << label << ":";
        for (Face f : got) std::cout << ' ' << face_to_string(f);
        bool match = std::set<Face>(got.begin(), got.end()) == want;
        std::cout << (match ? "  [matches]" : "  [MISMATCH]") << '\n';
        ok = ok && match;
    };
    show("2-skeleton of shift(suspension(sigma))", skeleton(left),
         expected_left);
    show("2-skeleton of shift(suspension(shift(sigma)))", skeleton(right),
         expected_right);

    DominanceReport rev = rev_dominance(left, right, TermOrder::revlex);
    std::cout << "revlex dominance: " << to_string(rev.verdict);
    if (rev.witness) std::cout << " witness " << face_to_string(*rev.witness);
    std::cout << '\n';
    ok = ok && rev.verdict == DominanceReport::Verdict::dominates &&
         rev.witness == face_of({1, 2, 6});

    Face s134 = face_of({1, 3, 4});
    std::size_t lex_left = m_leq(left, s134, TermOrder::lex);
    std::size_t lex_right = m_leq(right, s134, TermOrder::lex);
    std::cout << "lex counts at {1,3,4}: " << lex_left << " vs " << lex_right
              << '\n';
    ok = ok && lex_left == 2 && lex_right == 3;

    DominanceReport lex = rev_dominance(left, right, TermOrder::lex);
    std::cout << "lex dominance: " << to_string(lex.verdict);
    if (lex.witness) std::cout << " at " << face_to_string(*lex.witness);
    std::cout << '\n';
    ok = ok && lex.verdict == DominanceReport::Verdict::violated &&
         lex.witness == s134;

    std::cout << (ok ? "demo: all values match\n" : "demo: MISMATCH\n");
    return ok ? kExitOk : kExitViolation;
}

void print_fuzz_summary(const char* label, const FuzzSummary& sum,
                        bool verbose) {
    if (verbose)
        for (const auto& line : sum.lines) std::cout << line << '\n';
    std::cout << label << ": " << sum.cases << " cases, " << sum.violations
              << " violations, " << sum.consensus_failures
              << " consensus failures, " << sum.strict_margins
              << " strict\n";
    for (const auto& f : sum.failures) std::cout << "  FAIL " << f << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exterior algebraic shifting over a prime field"};
    app.require_subcommand(1);

    // shift
    auto* shift = app.add_subcommand("shift", "shift a complex");
    std::string shift_file;
    CommonOpts shift_opts;
    shift->add_option("file", shift_file, "facet file")->required();
    add_common(shift, shift_opts);

    // check theorem|corollary|proposition
    auto* check = app.add_subcommand("check", "comparison-bound checkers");
    check->require_subcommand(1);

    auto* theorem = check->add_subcommand(
        "theorem", "shift(sigma) vs shift(delta_phi(sigma))");
    std::string theorem_file, phi_spec = "random", count_order = "revlex";
    CommonOpts theorem_opts;
    theorem->add_option("sigma", theorem_file, "facet file")->required();
    theorem->add_option("--phi", phi_spec,
                        "random|identity|permutation:<p,..>|unitriangular:"
                        "<seed>|block:<k,seed>|file:<path>");
    theorem->add_option("--count-order", count_order,
                        "order used for the counts (revlex|lex)")
        ->check(CLI::IsMember({"revlex", "lex"}));
    add_common(theorem, theorem_opts);

    auto* corollary = check->add_subcommand(
        "corollary", "shift of join vs shift of joined shifts");
    std::string cor_sigma, cor_tau;
    CommonOpts cor_opts;
    corollary->add_option("sigma", cor_sigma, "facet file")->required();
    corollary->add_option("tau", cor_tau, "facet file")->required();
    add_common(corollary, cor_opts);

    auto* proposition = check->add_subcommand(
        "proposition", "rank monotonicity across two term orders");
    std::string prop_file, psi_spec = "random";
    std::string inner_order = "lex", gin_order = "revlex";
    CommonOpts prop_opts;
    proposition->add_option("sigma", prop_file, "facet file")->required();
    proposition->add_option("--psi", psi_spec, "matrix spec (see --phi)");
    proposition->add_option("--inner-order", inner_order, "revlex|lex")
        ->check(CLI::IsMember({"revlex", "lex"}));
    proposition->add_option("--gin-order", gin_order, "revlex|lex")
        ->check(CLI::IsMember({"revlex", "lex"}));
    add_common(proposition, prop_opts);

    // fuzz
    auto* fuzz = app.add_subcommand("fuzz", "randomized bound validation");
    CommonOpts fuzz_opts;
    int fuzz_cases = 200, fuzz_nmax = 7, fuzz_kmax = 4;
    bool fuzz_verbose = false;
    fuzz->add_option("--cases", fuzz_cases, "cases per checker")
        ->check(CLI::NonNegativeNumber);
    fuzz->add_option("--nmax", fuzz_nmax, "ground-set cap")
        ->check(CLI::Range(2, 12));
    fuzz->add_option("--kmax", fuzz_kmax, "join left-factor cap");
    fuzz->add_flag("--verbose", fuzz_verbose, "print one line per case");
    add_common(fuzz, fuzz_opts);

    // demo
    auto* demo = app.add_subcommand("demo", "paper walkthroughs");
    demo->require_subcommand(1);
    auto* nevo = demo->add_subcommand(
        "nevo", "the join counterexample, recomputed from scratch");
    CommonOpts nevo_opts;
    add_common(nevo, nevo_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*shift) {
            SimplicialComplex sigma = load_facet_file(shift_file);
            ShiftOutcome out = exterior_shift(sigma, shift_config(shift_opts));
            print_outcome(out, shift_opts.json);
            return out.consensus ? kExitOk : kExitNoConsensus;
        }
        if (*theorem) {
            SimplicialComplex sigma = load_facet_file(theorem_file);
            PrimeField field(theorem_opts.prime);
            FieldMatrix phi =
                parse_phi_spec(phi_spec, field, sigma.ground_size(),
                               splitmix64(theorem_opts.seed ^ 0xF1));
            DominanceReport rep =
                check_theorem_bound(sigma, phi, shift_config(theorem_opts),
                                    term_order_from_string(count_order));
            print_check(rep, theorem_opts.json);
            return report_exit(rep);
        }
        if (*corollary) {
            DominanceReport rep = check_corollary_join(
                load_facet_file(cor_sigma), load_facet_file(cor_tau),
                shift_config(cor_opts));
            print_check(rep, cor_opts.json);
            return report_exit(rep);
        }
        if (*proposition) {
            SimplicialComplex sigma = load_facet_file(prop_file);
            PrimeField field(prop_opts.prime);
            FieldMatrix psi =
                parse_phi_spec(psi_spec, field, sigma.ground_size(),
                               splitmix64(prop_opts.seed ^ 0xF4));
            DominanceReport rep = check_rank_monotonicity(
                sigma, psi, term_order_from_string(inner_order),
                term_order_from_string(gin_order), shift_config(prop_opts));
            print_check(rep, prop_opts.json);
            return report_exit(rep);
        }
        if (*fuzz) {
            FuzzConfig fcfg{fuzz_cases, fuzz_nmax, fuzz_kmax, fuzz_opts.seed,
                            fuzz_opts.prime, fuzz_opts.trials};
            FuzzSummary t = fuzz_theorem(fcfg);
            FuzzSummary c = fuzz_corollary(fcfg);
            FuzzSummary p = fuzz_proposition(fcfg);
            print_fuzz_summary("theorem", t, fuzz_verbose);
            print_fuzz_summary("corollary", c, fuzz_verbose);
            print_fuzz_summary("proposition", p, fuzz_verbose);
            int violations = t.violations + c.violations + p.violations;
            int stalls = t.consensus_failures + c.consensus_failures +
                         p.consensus_failures;
            std::cout << "total: " << violations << " violations, " << stalls
                      << " consensus failures\n";
            if (violations) return kExitViolation;
            if (stalls) return kExitNoConsensus;
            return kExitOk;
        }
        if (*nevo) return run_demo_nevo(nevo_opts);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConsensusError& e) {
        std::cerr << "consensus failure: " << e.what() << '\n';
        return kExitNoConsensus;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
