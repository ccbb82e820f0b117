#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "complex.hpp"

namespace arc {

inline CellComplex make_point(const std::string& id = "pt") {
    CellComplex k;
    k.name = "point";
    k.cells.push_back({id, 0, {}, {}});
    return k;
}

inline CellComplex make_sphere0(const std::string& a = "n", const std::string& b = "s") {
    if (a == b) throw std::invalid_argument("sphere0 needs two distinct ids");
    CellComplex k;
    k.name = "S0";
    k.cells.push_back({a, 0, {}, {}});
    k.cells.push_back({b, 0, {}, {}});
    k.canonicalize();
    return k;
}

// circle with n vertices and n edges; n = 1 gives a single loop cell
inline CellComplex make_circle(int n = 3, const std::string& prefix = "") {
    if (n < 1) throw std::invalid_argument("circle needs at least one vertex");
    CellComplex k;
    k.name = "S1";
    for (int i = 0; i < n; ++i) k.cells.push_back({prefix + "v" + std::to_string(i), 0, {}, {}});
    for (int i = 0; i < n; ++i) {
        Cell e{prefix + "e" + std::to_string(i), 1, {}, {}};
        std::string from = prefix + "v" + std::to_string(i);
        std::string to = prefix + "v" + std::to_string((i + 1) % n);
        if (from != to) e.boundary = {{to, 1}, {from, -1}};
        k.cells.push_back(e);
    }
    k.canonicalize();
    return k;
}

/**
 * Join of two cell complexes.
 *
 * The result contains a copy of each factor plus one cell per pair, of
 * dimension d1 + d2 + 1, with boundary
 *
 *   d(a * b) = (da) * b + (-1)^{d1+1} a * (db)
 *
 * where a vertex contributes its bare join partner in place of the boundary
 * term.  Joining with the empty complex returns the other factor unchanged.
 * Ids from the right factor are prefixed when they would collide with ids
 * from the left.
 */
inline CellComplex join(const CellComplex& left, const CellComplex& right) {
    if (left.empty()) {
        CellComplex k = right;
        k.canonicalize();
        return k;
    }
    if (right.empty()) {
        CellComplex k = left;
        k.canonicalize();
        return k;
    }

    std::set<std::string> left_ids;
    for (const auto& c : left.cells) left_ids.insert(c.id);

    std::string prefix;
    for (;;) {
        bool clash = false;
        for (const auto& c : right.cells)
            if (left_ids.count(prefix + c.id)) clash = true;
        if (!clash) break;
        prefix += "r:";
    }
    auto rid = [&prefix](const std::string& id) { return prefix + id; };

    CellComplex k;
    k.name = left.name + "*" + right.name;
    for (const auto& c : left.cells) k.cells.push_back(c);
    for (const auto& c : right.cells) {
        Cell copy{rid(c.id), c.dim, {}, c.h1_rank};
        for (const auto& [fid, coeff] : c.boundary) copy.boundary.push_back({rid(fid), coeff});
        k.cells.push_back(copy);
    }

    for (const auto& a : left.cells) {
        long long sign = (a.dim % 2 == 0) ? -1 : 1;
        for (const auto& b : right.cells) {
            Cell cell{a.id + "*" + rid(b.id), a.dim + b.dim + 1, {}, {}};
            if (a.dim == 0)
                cell.boundary.push_back({rid(b.id), 1});
            else
                for (const auto& [fid, coeff] : a.boundary)
                    cell.boundary.push_back({fid + "*" + rid(b.id), coeff});
            if (b.dim == 0)
                cell.boundary.push_back({a.id, sign});
            else
                for (const auto& [fid, coeff] : b.boundary)
                    cell.boundary.push_back({a.id + "*" + rid(fid), sign * coeff});
            if (a.h1_rank && b.h1_rank) cell.h1_rank = *a.h1_rank + *b.h1_rank;
            k.cells.push_back(cell);
        }
    }

    k.canonicalize();
    std::set<std::string> all;
    for (const auto& c : k.cells)
        if (!all.insert(c.id).second)
            throw std::runtime_error("join produced colliding cell id '" + c.id + "'");
    return k;
}

inline CellComplex suspension(const CellComplex& k) {
    CellComplex s = join(k, make_sphere0());
    s.name = "susp(" + k.name + ")";
    return s;
}

}  // namespace arc
