#pragma once

#include <string>
#include <vector>

#include "complex.hpp"
#include "smith.hpp"

namespace arc {

/**
 * Integral homology of a finite cell complex, one entry per dimension.
 *
 * betti[p] is the free rank of H_p and torsion[p] the list of invariant
 * factors > 1, each dividing the next.
 */
struct HomologyResult {
    std::vector<long> betti;
    std::vector<std::vector<Int>> torsion;

    int top_dim() const { return static_cast<int>(betti.size()) - 1; }
};

inline HomologyResult homology(const CellComplex& k) {
    HomologyResult h;
    int d = k.dimension();
    if (d < 0) return h;
    h.betti.assign(static_cast<std::size_t>(d + 1), 0);
    h.torsion.assign(static_cast<std::size_t>(d + 1), {});

    std::vector<long> cells_in(static_cast<std::size_t>(d + 1), 0);
    for (const auto& c : k.cells) ++cells_in[static_cast<std::size_t>(c.dim)];

    // snf[p] covers the boundary map from dimension p; index d+1 is empty
    std::vector<std::vector<Int>> snf(static_cast<std::size_t>(d + 2));
    for (int p = 1; p <= d; ++p)
        snf[static_cast<std::size_t>(p)] = smith_normal_form(k.boundary_matrix(p)).diagonal;

    for (int p = 0; p <= d; ++p) {
        long rank_in = static_cast<long>(snf[static_cast<std::size_t>(p + 1)].size());
        long rank_out = p == 0 ? 0 : static_cast<long>(snf[static_cast<std::size_t>(p)].size());
        h.betti[static_cast<std::size_t>(p)] = cells_in[static_cast<std::size_t>(p)] - rank_out - rank_in;
        for (const Int& v : snf[static_cast<std::size_t>(p + 1)])
            if (v > 1) h.torsion[static_cast<std::size_t>(p)].push_back(v);
    }
    return h;
}

/**
 * True when the homology matches the n-sphere for the given n.
 *
 * n = -1 stands for the empty complex (reduced homology zero, no cells) and
 * n = 0 for two points (H_0 of rank two).  Dimensions above the top of the
 * result are implicitly zero, so a complex of dimension > n can still
 * qualify.
 */
inline bool is_homology_sphere(const HomologyResult& h, int n) {
    if (n < -1) return false;
    if (n == -1) return h.betti.empty();
    if (h.betti.empty()) return false;
    for (const auto& t : h.torsion)
        if (!t.empty()) return false;
    for (int p = 0; p <= h.top_dim(); ++p) {
        long want = 0;
        if (p == 0) want = (n == 0) ? 2 : 1;
        if (p == n && n > 0) want = 1;
        if (h.betti[static_cast<std::size_t>(p)] != want) return false;
    }
    return n <= h.top_dim();
}

inline std::string format_homology(const HomologyResult& h) {
    if (h.betti.empty()) return "trivial";
    std::string out;
    for (int p = 0; p <= h.top_dim(); ++p) {
        std::string group;
        long b = h.betti[static_cast<std::size_t>(p)];
        if (b > 0) group = b == 1 ? "Z" : "Z^" + std::to_string(b);
        for (const Int& t : h.torsion[static_cast<std::size_t>(p)]) {
            if (!group.empty()) group += "+";
            group += "Z/" + t.str();
        }
        if (group.empty()) continue;
        if (!out.empty()) out += " ";
        out += "H" + std::to_string(p) + "=" + group;
    }
    return out.empty() ? "trivial" : out;
}

}  // namespace arc
