#include "exshift/io.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

namespace exshift {

namespace {

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

SimplicialComplex parse_facet_file(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Face> facets;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string key;
            if (!(ls >> key) || key != "n" || !(ls >> n) || n < 0 ||
                n > kMaxGroundSize)
                throw ParseError(lineno, "expected header `n <count>`");
            std::string rest;
            if (ls >> rest) throw ParseError(lineno, "trailing header tokens");
            continue;
        }
        Face f;
        std::string tok;
        while (ls >> tok) {
            int v = 0;
            try {
                std::size_t pos = 0;
                v = std::stoi(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError(lineno, "malformed vertex token `" + tok + "`");
            }
            if (v < 1 || v > n)
                throw ParseError(lineno, "vertex " + std::to_string(v) +
                                             " outside ground set [" +
                                             std::to_string(n) + "]");
            f.mask |= 1ULL << (v - 1);
        }
        facets.push_back(f);
    }
    if (n < 0) throw ParseError(lineno, "missing header `n <count>`");
    return from_facets(n, facets);
}

SimplicialComplex load_facet_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open facet file: " + path);
    return parse_facet_file(in);
}

FieldMatrix parse_matrix_file(std::istream& in, const PrimeField& field) {
    std::string line;
    int lineno = 0;
    long long n = -1;
    std::vector<std::vector<long long>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 1 || n > kMaxGroundSize)
                throw ParseError(lineno, "expected matrix size header");
            continue;
        }
        std::vector<long long> row;
        long long v;
        while (ls >> v) row.push_back(v);
        if (!ls.eof()) throw ParseError(lineno, "malformed matrix entry");
        if (static_cast<long long>(row.size()) != n)
            throw ParseError(lineno, "expected " + std::to_string(n) +
                                         " entries per row");
        rows.push_back(std::move(row));
    }
    if (static_cast<long long>(rows.size()) != n)
        throw ParseError(lineno, "expected " + std::to_string(n) + " rows");
    FieldMatrix m(field, n, n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(i, j) = field.reduce_int(rows[i][j]);
    return m;
}

FieldMatrix load_matrix_file(const std::string& path,
                             const PrimeField& field) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    return parse_matrix_file(in, field);
}

FieldMatrix parse_phi_spec(const std::string& spec, const PrimeField& field,
                           std::size_t n, std::uint64_t seed) {
    if (spec == "random" || spec.empty())
        return random_invertible_matrix(field, n, seed);
    if (spec == "identity") return FieldMatrix::identity(field, n);
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "permutation") {
        std::vector<std::size_t> perm;
        std::istringstream ps(arg);
        std::string tok;
        while (std::getline(ps, tok, ','))
            perm.push_back(std::stoull(tok));
        if (perm.size() != n)
            throw std::invalid_argument("permutation length must equal n");
        std::vector<bool> seen(n, false);
        FieldMatrix m(field, n, n);
        for (std::size_t j = 0; j < n; ++j) {
            if (perm[j] < 1 || perm[j] > n || seen[perm[j] - 1])
                throw std::invalid_argument("not a permutation of 1..n");
            seen[perm[j] - 1] = true;
            m(perm[j] - 1, j) = 1;
        }
        return m;
    }
    if (kind == "unitriangular") {
        std::uint64_t s = arg.empty() ? seed : std::stoull(arg);
        std::mt19937_64 rng(s);
        FieldMatrix m = FieldMatrix::identity(field, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                m(i, j) = rng() % field.modulus();
        return m;
    }
    if (kind == "block") {
        // generic k x k block on the first k coordinates, identity beyond
        std::size_t k = 0;
        std::uint64_t s = seed;
        auto comma = arg.find(',');
        k = std::stoull(arg.substr(0, comma));
        if (comma != std::string::npos) s = std::stoull(arg.substr(comma + 1));
        if (k < 1 || k > n)
            throw std::invalid_argument("block size must be in 1..n");
        return block_embed(random_invertible_matrix(field, k, s), n, 0);
    }
    if (kind == "file") return load_matrix_file(arg, field);
    throw std::invalid_argument("unknown matrix spec: " + spec);
}

nlohmann::json complex_to_json(const SimplicialComplex& sigma) {
    nlohmann::json j;
    j["n"] = sigma.ground_size();
    auto facets = nlohmann::json::array();
    for (Face f : sigma.facets()) facets.push_back(vertices_of(f));
    j["facets"] = facets;
    j["fVector"] = f_vector(sigma);
    return j;
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    std::vector<Face> facets;
    for (const auto& fj : j.at("facets"))
        facets.push_back(face_from_vertices(fj.get<std::vector<int>>()));
    return from_facets(n, facets);
}

nlohmann::json outcome_to_json(const ShiftOutcome& outcome) {
    nlohmann::json j = complex_to_json(outcome.complex);
    j["meta"] = {{"prime", outcome.prime},
                 {"seeds", outcome.seeds},
                 {"trials", outcome.trials},
                 {"consensus", outcome.consensus}};
    return j;
}

nlohmann::json report_to_json(const DominanceReport& rep) {
    nlohmann::json j;
    j["verdict"] = to_string(rep.verdict);
    if (rep.witness) j["witness"] = vertices_of(*rep.witness);
    nlohmann::json degrees = nlohmann::json::object();
    for (const auto& [d, entries] : rep.per_degree) {
        auto arr = nlohmann::json::array();
        for (const auto& e : entries)
            arr.push_back({{"S", vertices_of(e.s)},
                           {"left", e.left},
                           {"right", e.right},
                           {"margin", e.margin}});
        degrees[std::to_string(d)] = arr;
    }
    j["margins"] = degrees;
    return j;
}

std::string format_face_vertices(Face f) {
    std::ostringstream os;
    bool first = true;
    for (int v : vertices_of(f)) {
        if (!first) os << ' ';
        os << v;
        first = false;
    }
    return os.str();
}

void print_report(std::ostream& os, const DominanceReport& rep) {
    os << "verdict: " << to_string(rep.verdict) << '\n';
    if (rep.witness) os << "witness: " << face_to_string(*rep.witness) << '\n';
    for (const auto& [d, entries] : rep.per_degree) {
        bool any = false;
        for (const auto& e : entries)
            if (e.margin != 0) any = true;
        if (!any) continue;
        os << "degree " << d << ":\n";
        for (const auto& e : entries)
            if (e.margin != 0)
                os << "  " << face_to_string(e.s) << " left=" << e.left
                   << " right=" << e.right << " margin=" << e.margin << '\n';
    }
}

}  // namespace exshift
