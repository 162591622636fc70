#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "exshift/analysis.hpp"
#include "exshift/complex.hpp"
#include "exshift/shifting.hpp"

namespace exshift {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg),
          line(line) {}
    int line;
};

// Facet file: '#' comment lines, a required header `n <count>`, then one
// facet per line as whitespace-separated 1-based vertices.
SimplicialComplex parse_facet_file(std::istream& in);
SimplicialComplex load_facet_file(const std::string& path);

// Matrix file: first line n, then n rows of n integers, reduced mod p.
FieldMatrix parse_matrix_file(std::istream& in, const PrimeField& field);
FieldMatrix load_matrix_file(const std::string& path, const PrimeField& field);

// `random|permutation:<p1,p2,...>|unitriangular:<seed>|file:<path>`
FieldMatrix parse_phi_spec(const std::string& spec, const PrimeField& field,
                           std::size_t n, std::uint64_t seed);

nlohmann::json complex_to_json(const SimplicialComplex& sigma);
SimplicialComplex complex_from_json(const nlohmann::json& j);
nlohmann::json outcome_to_json(const ShiftOutcome& outcome);
nlohmann::json report_to_json(const DominanceReport& rep);

std::string format_face_vertices(Face f);  // "1 2 3"
void print_report(std::ostream& os, const DominanceReport& rep);

}  // namespace exshift
