#include "exshift/exterior.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace exshift {

Face face_of(std::initializer_list<int> vertices) {
    Face f;
    for (int v : vertices) {
        if (v < 1 || v > kMaxGroundSize)
            throw std::invalid_argument("vertex label out of range");
        f.mask |= 1ULL << (v - 1);
    }
    return f;
}

Face face_from_vertices(const std::vector<int>& vertices) {
    Face f;
    for (int v : vertices) {
        if (v < 1 || v > kMaxGroundSize)
            throw std::invalid_argument("vertex label out of range");
        f.mask |= 1ULL << (v - 1);
    }
    return f;
}

std::vector<int> vertices_of(Face f) {
    std::vector<int> out;
    std::uint64_t m = f.mask;
    while (m) {
        int b = __builtin_ctzll(m);
        out.push_back(b + 1);
        m &= m - 1;
    }
    return out;
}

std::string face_to_string(Face f) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : vertices_of(f)) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

TermOrder term_order_from_string(const std::string& s) {
    if (s == "revlex") return TermOrder::revlex;
    if (s == "lex") return TermOrder::lex;
    throw std::invalid_argument("unknown term order: " + s);
}

std::string to_string(TermOrder order) {
    return order == TermOrder::revlex ? "revlex" : "lex";
}

int compare(TermOrder order, Face s, Face r) {
    int cs = card(s), cr = card(r);
    if (cs != cr) return cs < cr ? -1 : 1;
    std::uint64_t diff = s.mask ^ r.mask;
    if (!diff) return 0;
    if (order == TermOrder::revlex) {
        // minimal element of the symdiff in S makes S smaller
        std::uint64_t low = diff & -diff;
        return (s.mask & low) ? -1 : 1;
    }
    // lex: maximal element of the symdiff in S makes S larger; this is the
    // reading that reproduces the published counts at {1,3,4}
    std::uint64_t high = 1ULL << (63 - __builtin_clzll(diff));
    return (s.mask & high) ? 1 : -1;
}

std::vector<Face> enumerate_subsets(int n, int d, TermOrder order,
                                    bool ascending) {
    if (d < 0 || d > n || n > kMaxGroundSize)
        throw std::invalid_argument("enumerate_subsets: bad n or d");
    std::vector<Face> out;
    out.reserve(binomial(n, d));
    if (d == 0) {
        out.push_back(Face{0});
    } else {
        // Gosper's hack over masks, then sort by the term order.
        std::uint64_t m = (1ULL << d) - 1;
        std::uint64_t top = full_mask(n);
        while (m <= top) {
            out.push_back(Face{m});
            std::uint64_t c = m & -m;
            std::uint64_t r = m + c;
            if (r > top) break;
            m = (((m ^ r) >> 2) / c) | r;
        }
    }
    std::sort(out.begin(), out.end(), [&](Face a, Face b) {
        return compare(order, a, b) < 0;
    });
    if (!ascending) std::reverse(out.begin(), out.end());
    return out;
}

int wedge_sign(Face s, Face t) {
    if (s.mask & t.mask) return 0;
    int inv = 0;
    std::uint64_t tm = t.mask;
    while (tm) {
        int b = __builtin_ctzll(tm);
        // elements of S strictly above this element of T
        inv += __builtin_popcountll(s.mask & ~((2ULL << b) - 1));
        tm &= tm - 1;
    }
    return inv & 1 ? -1 : 1;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::map<Face, std::uint64_t> transform_monomial(const FieldMatrix& phi,
                                                 Face s) {
    if (phi.rows() != phi.cols())
        throw std::invalid_argument("transform requires a square matrix");
    const PrimeField& f = phi.field();
    const std::size_t n = phi.rows();
    std::vector<int> cols = vertices_of(s);
    for (int v : cols)
        if (static_cast<std::size_t>(v) > n)
            throw std::invalid_argument("monomial exceeds matrix dimension");

    // level[A] = det(phi[rows A, first k columns of S]) for |A| = k
    std::map<std::uint64_t, std::uint64_t> level{{0ULL, 1ULL}};
    int k = 0;
    for (int col : cols) {
        ++k;
        std::map<std::uint64_t, std::uint64_t> next;
        for (const auto& [rows, val] : level) {
            if (!val) continue;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t bit = 1ULL << i;
                if (rows & bit) continue;
                std::uint64_t entry = phi(i, col - 1);
                if (!entry) continue;
                // position of row i within the enlarged sorted subset
                int pos = 1 + __builtin_popcountll(rows & (bit - 1));
                std::uint64_t term = f.mul(val, entry);
                if ((pos + k) & 1) term = f.neg(term);
                auto [it, inserted] = next.try_emplace(rows | bit, term);
                if (!inserted) it->second = f.add(it->second, term);
            }
        }
        level = std::move(next);
    }

    std::map<Face, std::uint64_t> out;
    for (const auto& [rows, val] : level)
        if (val) out.emplace(Face{rows}, val);
    return out;
}

ExteriorElement apply_transform(const FieldMatrix& phi,
                                const ExteriorElement& x) {
    const PrimeField& f = phi.field();
    ExteriorElement out;
    out.degree = x.degree;
    for (const auto& [s, coeff] : x.terms) {
        if (card(s) != x.degree)
            throw std::invalid_argument("element is not homogeneous");
        if (!coeff) continue;
        for (const auto& [r, minor] : transform_monomial(phi, s)) {
            std::uint64_t term = f.mul(coeff, minor);
            auto [it, inserted] = out.terms.try_emplace(r, term);
            if (!inserted) it->second = f.add(it->second, term);
        }
    }
    std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace exshift
