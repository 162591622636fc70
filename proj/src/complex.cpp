#include "exshift/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace exshift {

SimplicialComplex::SimplicialComplex(int n, std::set<Face> faces)
    : n_(n), faces_(std::move(faces)) {
    if (n < 0 || n > kMaxGroundSize)
        throw std::invalid_argument("ground-set size out of range");
    faces_.insert(Face{0});
    std::uint64_t top = full_mask(n);
    for (Face f : faces_)
        if (f.mask & ~top)
            throw std::invalid_argument("face exceeds the ground set");
}

std::vector<Face> SimplicialComplex::faces_of_size(int d) const {
    std::vector<Face> out;
    for (Face f : faces_)
        if (card(f) == d) out.push_back(f);
    return out;
}

std::vector<Face> SimplicialComplex::facets() const {
    std::vector<Face> out;
    for (Face f : faces_) {
        bool maximal = true;
        for (Face g : faces_)
            if (f != g && is_subset(f, g)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(f);
    }
    return out;
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (Face f : faces_) d = std::max(d, card(f) - 1);
    return d;
}

SimplicialComplex from_facets(int n, const std::vector<Face>& facets) {
    std::set<Face> faces{Face{0}};
    std::uint64_t top = full_mask(n);
    for (Face f : facets) {
        if (f.mask & ~top)
            throw std::invalid_argument("facet vertex out of range");
        // enumerate all submasks
        std::uint64_t sub = f.mask;
        for (;;) {
            faces.insert(Face{sub});
            if (!sub) break;
            sub = (sub - 1) & f.mask;
        }
    }
    return SimplicialComplex(n, std::move(faces));
}

SimplicialComplex full_simplex(int n) {
    return from_facets(n, {Face{full_mask(n)}});
}

SimplicialComplex join(const SimplicialComplex& sigma,
                       const SimplicialComplex& tau) {
    int k = sigma.ground_size();
    int n = k + tau.ground_size();
    if (n > kMaxGroundSize)
        throw std::invalid_argument("join exceeds the ground-set cap");
    std::set<Face> faces;
    for (Face s : sigma.faces())
        for (Face t : tau.faces())
            faces.insert(Face{s.mask | (t.mask << k)});
    return SimplicialComplex(n, std::move(faces));
}

SimplicialComplex suspension(const SimplicialComplex& sigma) {
    SimplicialComplex two_points(2, {Face{0}, Face{1}, Face{2}});
    return join(sigma, two_points);
}

std::vector<Face> nonfaces_of_degree(const SimplicialComplex& sigma, int d) {
    std::vector<Face> out;
    for (Face s : enumerate_subsets(sigma.ground_size(), d, TermOrder::revlex,
                                    true))
        if (!sigma.has_face(s)) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> f_vector(const SimplicialComplex& sigma) {
    std::vector<std::size_t> f(sigma.dimension() + 2, 0);
    for (Face face : sigma.faces()) ++f[card(face)];
    return f;
}

FieldMatrix block_embed(const FieldMatrix& phi, std::size_t n,
                        std::size_t offset) {
    if (phi.rows() != phi.cols() || offset + phi.rows() > n)
        throw std::invalid_argument("block does not fit in the target size");
    FieldMatrix out = FieldMatrix::identity(phi.field(), n);
    for (std::size_t i = 0; i < phi.rows(); ++i) {
        out(offset + i, offset + i) = 0;
        for (std::size_t j = 0; j < phi.cols(); ++j)
            out(offset + i, offset + j) = phi(i, j);
    }
    return out;
}

}  // namespace exshift
