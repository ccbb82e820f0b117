#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"

namespace arc {

/**
 * Decomposition of the boundary operator by complementary-surface rank.
 *
 * Incidences that keep the h1 rank go into d1, incidences that raise it by
 * one go into d2; any other rank change is rejected.  The bigrading assigns
 * each p-cell (u, v) with v = -rank and u = p - v.  In that grading d1
 * preserves v and d2 lowers it by one, so both squares and the mixed
 * anticommutator vanish automatically whenever the full boundary squares to
 * zero.
 */
struct BigradedSplit {
    std::vector<SparseIntMatrix> d1, d2;
    std::map<std::string, std::pair<long long, long long>> bigrading;
};

inline BigradedSplit split_boundary(const CellComplex& k) {
    std::map<std::string, long long> rank;
    for (const auto& c : k.cells) {
        if (!c.h1_rank)
            throw std::invalid_argument("cell '" + c.id + "' carries no h1_rank metadata");
        rank[c.id] = *c.h1_rank;
    }

    BigradedSplit out;
    for (const auto& c : k.cells) {
        long long v = -rank[c.id];
        out.bigrading[c.id] = {c.dim - v, v};
        for (const auto& [fid, coeff] : c.boundary) {
            (void)coeff;
            long long jump = rank[fid] - rank[c.id];
            if (jump != 0 && jump != 1)
                throw std::runtime_error("incidence " + c.id + " -> " + fid +
                                         " changes h1 rank by " + std::to_string(jump));
        }
    }

    int d = k.dimension();
    out.d1.assign(static_cast<std::size_t>(d + 1), SparseIntMatrix(0, 0));
    out.d2.assign(static_cast<std::size_t>(d + 1), SparseIntMatrix(0, 0));
    for (int p = 1; p <= d; ++p) {
        std::vector<std::string> dom = k.ids_of_dim(p), cod = k.ids_of_dim(p - 1);
        std::map<std::string, int> dom_index, cod_index;
        for (std::size_t i = 0; i < dom.size(); ++i) dom_index[dom[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < cod.size(); ++i) cod_index[cod[i]] = static_cast<int>(i);
        SparseIntMatrix m1(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
        SparseIntMatrix m2 = m1;
        for (const auto& c : k.cells) {
            if (c.dim != p) continue;
            for (const auto& [fid, coeff] : c.boundary) {
                SparseIntMatrix& target = rank[fid] == rank[c.id] ? m1 : m2;
                target.add(cod_index.at(fid), dom_index.at(c.id), Int(coeff));
            }
        }
        out.d1[static_cast<std::size_t>(p)] = m1;
        out.d2[static_cast<std::size_t>(p)] = m2;
    }
    return out;
}

// Checks d1 + d2 = d, both squares zero, and the anticommutator zero;
// returns human-readable problems, empty when everything holds.
inline std::vector<std::string> check_split_identities(const CellComplex& k,
                                                       const BigradedSplit& s) {
    std::vector<std::string> problems;
    int d = k.dimension();
    for (int p = 1; p <= d; ++p) {
        SparseIntMatrix full = k.boundary_matrix(p);
        SparseIntMatrix sum = s.d1[static_cast<std::size_t>(p)];
        for (int r = 0; r < sum.rows; ++r)
            for (const auto& [c, v] : s.d2[static_cast<std::size_t>(p)].row[static_cast<std::size_t>(r)])
                sum.add(r, c, v);
        for (int r = 0; r < full.rows; ++r)
            if (sum.row[static_cast<std::size_t>(r)] != full.row[static_cast<std::size_t>(r)]) {
                problems.push_back("d1 + d2 differs from the boundary in dimension " +
                                   std::to_string(p));
                break;
            }
    }
    for (int p = 2; p <= d; ++p) {
        const auto& a1 = s.d1[static_cast<std::size_t>(p - 1)];
        const auto& a2 = s.d2[static_cast<std::size_t>(p - 1)];
        const auto& b1 = s.d1[static_cast<std::size_t>(p)];
        const auto& b2 = s.d2[static_cast<std::size_t>(p)];
        if (!sparse_mul(a1, b1).is_zero())
            problems.push_back("d1*d1 nonzero from dimension " + std::to_string(p));
        if (!sparse_mul(a2, b2).is_zero())
            problems.push_back("d2*d2 nonzero from dimension " + std::to_string(p));
        SparseIntMatrix mixed = sparse_mul(a1, b2);
        SparseIntMatrix mixed2 = sparse_mul(a2, b1);
        for (int r = 0; r < mixed.rows; ++r)
            for (const auto& [c, v] : mixed2.row[static_cast<std::size_t>(r)]) mixed.add(r, c, v);
        if (!mixed.is_zero())
            problems.push_back("d1*d2 + d2*d1 nonzero from dimension " + std::to_string(p));
    }
    return problems;
}

}  // namespace arc
