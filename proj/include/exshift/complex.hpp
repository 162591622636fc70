#pragma once

#include <set>
#include <vector>

#include "exshift/exterior.hpp"
#include "exshift/field.hpp"

namespace exshift {

// Downward-closed family of faces over [n]. The empty face is always
// present; the void complex (no faces) is excluded.
class SimplicialComplex {
public:
    SimplicialComplex(int n, std::set<Face> faces);

    int ground_size() const { return n_; }
    const std::set<Face>& faces() const { return faces_; }
    bool has_face(Face f) const { return faces_.count(f) != 0; }
    std::vector<Face> faces_of_size(int d) const;
    std::vector<Face> facets() const;
    int dimension() const;  // -1 for {empty face}

    bool operator==(const SimplicialComplex&) const = default;

private:
    int n_;
    std::set<Face> faces_;
};

// Smallest downward-closed family containing the facets and the empty face.
SimplicialComplex from_facets(int n, const std::vector<Face>& facets);

SimplicialComplex full_simplex(int n);

// Join on disjoint ground sets: tau comes on its own ground set {1..l} and
// is relabeled to {k+1..k+l}.
SimplicialComplex join(const SimplicialComplex& sigma,
                       const SimplicialComplex& tau);

// Join with two fresh isolated points.
SimplicialComplex suspension(const SimplicialComplex& sigma);

// All d-subsets of [n] outside sigma, ascending by mask. These index the
// canonical monomial basis of the degree-d piece of the face ideal.
std::vector<Face> nonfaces_of_degree(const SimplicialComplex& sigma, int d);

// (f_-1, f_0, ...): face counts by cardinality, trailing zeros trimmed.
std::vector<std::size_t> f_vector(const SimplicialComplex& sigma);

// Identity on [n] with phi written into rows/cols offset+1 .. offset+k.
FieldMatrix block_embed(const FieldMatrix& phi, std::size_t n,
                        std::size_t offset);

}  // namespace exshift
