#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "complex.hpp"

namespace arc {

/**
 * Abstract simplicial complex over string vertex labels.
 *
 * Simplices are stored as sorted label vectors and the family is closed
 * under taking nonempty subsets.
 */
struct SimplicialComplex {
    std::set<std::vector<std::string>> simplices;

    bool empty() const { return simplices.empty(); }

    int dimension() const {
        int d = -1;
        for (const auto& s : simplices) d = std::max(d, static_cast<int>(s.size()) - 1);
        return d;
    }

    std::vector<long> f_vector() const {
        std::vector<long> f(static_cast<std::size_t>(dimension() + 1), 0);
        for (const auto& s : simplices) ++f[s.size() - 1];
        return f;
    }

    // inserts the simplex together with all its nonempty faces
    void insert_closed(std::vector<std::string> simplex) {
        if (simplex.empty()) throw std::invalid_argument("empty simplex");
        std::sort(simplex.begin(), simplex.end());
        simplex.erase(std::unique(simplex.begin(), simplex.end()), simplex.end());
        std::size_t n = simplex.size();
        for (std::size_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<std::string> face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) face.push_back(simplex[i]);
            simplices.insert(face);
        }
    }

    bool contains(std::vector<std::string> simplex) const {
        std::sort(simplex.begin(), simplex.end());
        return simplices.count(simplex) > 0;
    }
};

inline std::string default_simplex_id(const std::vector<std::string>& verts) {
    std::string id = "s(";
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i) id += "|";
        id += verts[i];
    }
    return id + ")";
}

// Cell complex over the same simplices, with the alternating sign convention
// on the sorted vertex order.
inline CellComplex to_cell_complex(
    const SimplicialComplex& sc, const std::string& name = "simplicial",
    const std::function<std::string(const std::vector<std::string>&)>& namer = default_simplex_id) {
    CellComplex k;
    k.name = name;
    for (const auto& s : sc.simplices) {
        Cell c{namer(s), static_cast<int>(s.size()) - 1, {}, {}};
        if (s.size() > 1) {
            for (std::size_t omit = 0; omit < s.size(); ++omit) {
                std::vector<std::string> face;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != omit) face.push_back(s[i]);
                c.boundary.push_back({namer(face), omit % 2 == 0 ? 1 : -1});
            }
        }
        k.cells.push_back(c);
    }
    k.canonicalize();
    return k;
}

/**
 * First barycentric subdivision: one vertex per simplex, one simplex per
 * chain of simplices strictly ordered by inclusion.
 */
inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& sc) {
    auto label_of = [](const std::vector<std::string>& s) {
        std::string l = "[";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) l += "|";
            l += s[i];
        }
        return l + "]";
    };

    std::vector<std::vector<std::string>> faces(sc.simplices.begin(), sc.simplices.end());
    std::sort(faces.begin(), faces.end(),
              [](const auto& a, const auto& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });

    auto subset_of = [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };

    SimplicialComplex out;
    std::vector<std::size_t> chain;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
        if (!chain.empty()) {
            std::vector<std::string> simplex;
            for (std::size_t idx : chain) simplex.push_back(label_of(faces[idx]));
            out.insert_closed(simplex);
        }
        for (std::size_t i = from; i < faces.size(); ++i) {
            if (!chain.empty()) {
                const auto& prev = faces[chain.back()];
                if (faces[i].size() <= prev.size() || !subset_of(prev, faces[i])) continue;
            }
            chain.push_back(i);
            grow(i + 1);
            chain.pop_back();
        }
    };
    grow(0);
    return out;
}

/**
 * Attempts to read a cell complex back as a simplicial complex.
 *
 * Succeeds when every p-cell has exactly p+1 faces, all coefficients are
 * units, and the recovered vertex sets have the right cardinalities; returns
 * nothing otherwise.  Vertex labels are the ids of the 0-cells.
 */
inline std::optional<SimplicialComplex> recover_simplicial(const CellComplex& k) {
    std::map<std::string, std::set<std::string>> verts;
    std::set<std::set<std::string>> seen;
    CellComplex sorted = k;
    sorted.canonicalize();
    for (const auto& c : sorted.cells) {
        if (c.dim == 0) {
            if (!c.boundary.empty()) return std::nullopt;
            verts[c.id] = {c.id};
            if (!seen.insert({c.id}).second) return std::nullopt;
            continue;
        }
        if (static_cast<int>(c.boundary.size()) != c.dim + 1) return std::nullopt;
        std::set<std::string> v;
        std::set<std::set<std::string>> face_sets;
        for (const auto& [fid, coeff] : c.boundary) {
            if (coeff != 1 && coeff != -1) return std::nullopt;
            auto it = verts.find(fid);
            if (it == verts.end()) return std::nullopt;
            if (!face_sets.insert(it->second).second) return std::nullopt;
            v.insert(it->second.begin(), it->second.end());
        }
        if (static_cast<int>(v.size()) != c.dim + 1) return std::nullopt;
        if (!seen.insert(v).second) return std::nullopt;
        verts[c.id] = v;
    }
    SimplicialComplex sc;
    for (const auto& [id, v] : verts) {
        (void)id;
        sc.simplices.insert(std::vector<std::string>(v.begin(), v.end()));
    }
    // every recovered simplex must actually be present with all its faces
    SimplicialComplex closed;
    for (const auto& s : sc.simplices) closed.insert_closed(s);
    if (closed.simplices != sc.simplices) return std::nullopt;
    return sc;
}

}  // namespace arc
