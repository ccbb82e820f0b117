#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <arc/homology.hpp>
#include <arc/simplicial.hpp>
#include <arc/smith.hpp>

namespace support {

using arc::Int;

// finitely generated abelian group as free rank plus torsion multiset
struct AbGroup {
    long rank = 0;
    std::vector<Int> torsion;
};

inline std::map<Int, int> primary_decomposition(const std::vector<Int>& torsion) {
    std::map<Int, int> powers;
    for (Int t : torsion) {
        for (Int p = 2; p * p <= t; ++p) {
            if (t % p != 0) continue;
            Int q = 1;
            while (t % p == 0) {
                q *= p;
                t /= p;
            }
            ++powers[q];
        }
        if (t > 1) ++powers[t];
    }
    return powers;
}

inline bool same_group(const AbGroup& a, const AbGroup& b) {
    return a.rank == b.rank &&
           primary_decomposition(a.torsion) == primary_decomposition(b.torsion);
}

inline AbGroup tensor(const AbGroup& a, const AbGroup& b) {
    AbGroup out;
    out.rank = a.rank * b.rank;
    for (const Int& t : a.torsion)
        for (long i = 0; i < b.rank; ++i) out.torsion.push_back(t);
    for (const Int& t : b.torsion)
        for (long i = 0; i < a.rank; ++i) out.torsion.push_back(t);
    for (const Int& s : a.torsion)
        for (const Int& t : b.torsion) {
            Int g = boost::multiprecision::gcd(s, t);
            if (g > 1) out.torsion.push_back(g);
        }
    return out;
}

inline AbGroup tor_product(const AbGroup& a, const AbGroup& b) {
    AbGroup out;
    for (const Int& s : a.torsion)
        for (const Int& t : b.torsion) {
            Int g = boost::multiprecision::gcd(s, t);
            if (g > 1) out.torsion.push_back(g);
        }
    return out;
}

inline AbGroup direct_sum(const AbGroup& a, const AbGroup& b) {
    AbGroup out = a;
    out.rank += b.rank;
    out.torsion.insert(out.torsion.end(), b.torsion.begin(), b.torsion.end());
    return out;
}

// reduced homology in dimension p, valid for nonempty complexes
inline AbGroup reduced(const arc::HomologyResult& h, int p) {
    if (p < 0 || p > h.top_dim()) return {};
    AbGroup g{h.betti[static_cast<std::size_t>(p)], h.torsion[static_cast<std::size_t>(p)]};
    if (p == 0) --g.rank;
    return g;
}

/**
 * Reduced homology of a join of nonempty complexes:
 *
 *   H~_n(X*Y) = sum over i+j=n-1 of H~_i(X) (x) H~_j(Y)
 *             + sum over i+j=n-2 of Tor(H~_i(X), H~_j(Y))
 */
inline AbGroup join_oracle(const arc::HomologyResult& x, const arc::HomologyResult& y, int n) {
    AbGroup out;
    for (int i = -1; i <= x.top_dim(); ++i) {
        out = direct_sum(out, tensor(reduced(x, i), reduced(y, n - 1 - i)));
        out = direct_sum(out, tor_product(reduced(x, i), reduced(y, n - 2 - i)));
    }
    return out;
}

inline unsigned rnd(std::mt19937& eng, unsigned n) { return eng() % n; }

inline arc::SimplicialComplex random_simplicial(std::mt19937& eng, unsigned max_facets = 4,
                                                unsigned max_facet_size = 3,
                                                unsigned vertex_pool = 7) {
    arc::SimplicialComplex sc;
    unsigned facets = 1 + rnd(eng, max_facets);
    for (unsigned f = 0; f < facets; ++f) {
        unsigned size = 1 + rnd(eng, max_facet_size);
        std::set<std::string> verts;
        while (verts.size() < size) verts.insert("v" + std::to_string(rnd(eng, vertex_pool)));
        sc.insert_closed({verts.begin(), verts.end()});
    }
    return sc;
}

// determinant by fraction-free elimination, for unimodularity checks
inline Int determinant(const arc::SparseIntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant needs a square matrix");
    int n = m.rows;
    if (n == 0) return 1;
    std::vector<std::vector<Int>> a(static_cast<std::size_t>(n),
                                    std::vector<Int>(static_cast<std::size_t>(n), 0));
    for (int r = 0; r < n; ++r)
        for (const auto& [c, v] : m.row[static_cast<std::size_t>(r)])
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;

    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c)
                a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
        prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    return sign > 0 ? a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)]
                    : -a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
}

}  // namespace support
