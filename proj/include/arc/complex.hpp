#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "smith.hpp"

namespace arc {

/**
 * One cell of a finite cell complex.
 *
 * The boundary is a formal integer combination of cells one dimension lower,
 * stored as (face id, coefficient) pairs with each face id appearing at most
 * once.  An optional h1_rank records the first-homology rank of the
 * complementary surface the cell came from; it drives the boundary splitting.
 */
struct Cell {
    std::string id;
    int dim = 0;
    std::vector<std::pair<std::string, long long>> boundary;
    std::optional<long long> h1_rank;
};

/**
 * Finite cell complex with integer boundary coefficients.
 *
 * Cells are kept in canonical order: ascending dimension, then id.  All
 * operations assume (and validate_complex checks) that boundaries only name
 * existing cells of one dimension lower and that the composite boundary
 * vanishes.
 */
struct CellComplex {
    std::string name;
    std::vector<Cell> cells;

    bool empty() const { return cells.empty(); }

    // top dimension, -1 for the empty complex
    int dimension() const {
        int d = -1;
        for (const auto& c : cells) d = std::max(d, c.dim);
        return d;
    }

    std::vector<long> f_vector() const {
        std::vector<long> f(static_cast<std::size_t>(dimension() + 1), 0);
        for (const auto& c : cells) ++f[static_cast<std::size_t>(c.dim)];
        return f;
    }

    const Cell* find(const std::string& id) const {
        for (const auto& c : cells)
            if (c.id == id) return &c;
        return nullptr;
    }

    void canonicalize() {
        std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
            return a.dim != b.dim ? a.dim < b.dim : a.id < b.id;
        });
        for (auto& c : cells)
            std::sort(c.boundary.begin(), c.boundary.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
    }

    // ids of cells in dimension p, canonical order
    std::vector<std::string> ids_of_dim(int p) const {
        std::vector<std::string> out;
        for (const auto& c : cells)
            if (c.dim == p) out.push_back(c.id);
        std::sort(out.begin(), out.end());
        return out;
    }

    // boundary operator from dimension p to p-1 over the canonical bases
    SparseIntMatrix boundary_matrix(int p) const {
        std::vector<std::string> dom = ids_of_dim(p), cod = ids_of_dim(p - 1);
        std::map<std::string, int> cod_index;
        for (std::size_t i = 0; i < cod.size(); ++i) cod_index[cod[i]] = static_cast<int>(i);
        std::map<std::string, int> dom_index;
        for (std::size_t i = 0; i < dom.size(); ++i) dom_index[dom[i]] = static_cast<int>(i);

        SparseIntMatrix m(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
        for (const auto& c : cells) {
            if (c.dim != p) continue;
            for (const auto& [fid, coeff] : c.boundary) {
                auto it = cod_index.find(fid);
                if (it != cod_index.end())
                    m.add(it->second, dom_index.at(c.id), Int(coeff));
            }
        }
        return m;
    }
};

inline long long euler_characteristic(const CellComplex& k) {
    long long chi = 0;
    for (const auto& c : k.cells) chi += (c.dim % 2 == 0) ? 1 : -1;
    return chi;
}

// Structural checks, reported rather than thrown: duplicate ids, dangling or
// wrong-dimension faces, duplicate faces within one boundary list, nonzero
// composite boundary.
inline std::vector<std::string> validate_complex(const CellComplex& k) {
    std::vector<std::string> problems;
    std::map<std::string, const Cell*> by_id;
    for (const auto& c : k.cells) {
        if (c.dim < 0) problems.push_back("cell '" + c.id + "' has negative dimension");
        if (!by_id.emplace(c.id, &c).second)
            problems.push_back("duplicate cell id '" + c.id + "'");
    }
    for (const auto& c : k.cells) {
        std::set<std::string> seen;
        for (const auto& [fid, coeff] : c.boundary) {
            if (!seen.insert(fid).second)
                problems.push_back("cell '" + c.id + "' lists face '" + fid + "' twice");
            auto it = by_id.find(fid);
            if (it == by_id.end()) {
                problems.push_back("cell '" + c.id + "' names missing face '" + fid + "'");
            } else if (it->second->dim != c.dim - 1) {
                problems.push_back("cell '" + c.id + "' face '" + fid +
                                   "' is not one dimension lower");
            }
            if (coeff == 0)
                problems.push_back("cell '" + c.id + "' carries face '" + fid +
                                   "' with zero coefficient");
        }
    }
    if (!problems.empty()) return problems;

    for (int p = 2; p <= k.dimension(); ++p) {
        SparseIntMatrix dd = sparse_mul(k.boundary_matrix(p - 1), k.boundary_matrix(p));
        if (!dd.is_zero())
            problems.push_back("composite boundary from dimension " + std::to_string(p) +
                               " is nonzero");
    }
    return problems;
}

// Regular CW structures are only certified by proxy: every coefficient is a
// unit and the composite boundary vanishes.
inline bool is_regular_proxy(const CellComplex& k) {
    if (!validate_complex(k).empty()) return false;
    for (const auto& c : k.cells)
        for (const auto& [fid, coeff] : c.boundary) {
            (void)fid;
            if (coeff != 1 && coeff != -1) return false;
        }
    return true;
}

}  // namespace arc
