#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "complex.hpp"
#include "simplicial.hpp"

namespace arc {

/**
 * Chord of a convex n-gon between two vertices, excluding polygon sides.
 * Stored with i < j.
 */
struct Chord {
    int i = 0, j = 0;

    bool operator<(const Chord& o) const { return i != o.i ? i < o.i : j < o.j; }
    bool operator==(const Chord& o) const { return i == o.i && j == o.j; }
};

inline bool chord_essential(const Chord& c, int n) {
    if (c.i < 0 || c.j >= n || c.i >= c.j) return false;
    return c.j - c.i >= 2 && !(c.i == 0 && c.j == n - 1);
}

inline std::vector<Chord> enumerate_chords(int n) {
    if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    std::vector<Chord> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            if (!(i == 0 && j == n - 1)) out.push_back({i, j});
    return out;
}

// true when the chords do not cross; sharing an endpoint is allowed
inline bool chords_compatible(const Chord& a, const Chord& b, int n) {
    if (!chord_essential(a, n) || !chord_essential(b, n))
        throw std::invalid_argument("chord is not essential for this polygon");
    auto strictly_inside = [](int x, int lo, int hi) { return lo < x && x < hi; };
    bool b_split = strictly_inside(b.i, a.i, a.j) != strictly_inside(b.j, a.i, a.j);
    bool shared = a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j;
    return shared || !b_split;
}

inline std::string chord_label(const Chord& c) {
    return std::to_string(c.i) + "-" + std::to_string(c.j);
}

inline std::string polygon_cell_id(const std::vector<std::string>& chords) {
    std::string id = "c(";
    for (std::size_t i = 0; i < chords.size(); ++i) {
        if (i) id += "|";
        id += chords[i];
    }
    return id + ")";
}

/**
 * Simplicial complex of pairwise non-crossing chord families, one vertex per
 * chord.  Families are generated canonically by growing with lexicographically
 * larger chords only.
 */
inline SimplicialComplex polygon_simplicial(int n, int cap = 9) {
    if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    if (n > cap)
        throw std::invalid_argument("polygon size " + std::to_string(n) +
                                    " exceeds the cap of " + std::to_string(cap));
    SimplicialComplex sc;
    if (n == 3) return sc;
    std::vector<Chord> chords = enumerate_chords(n);
    std::vector<std::size_t> family;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
        if (!family.empty()) {
            std::vector<std::string> labels;
            for (std::size_t idx : family) labels.push_back(chord_label(chords[idx]));
            sc.simplices.insert(labels);
        }
        for (std::size_t next = from; next < chords.size(); ++next) {
            bool ok = true;
            for (std::size_t idx : family)
                if (!chords_compatible(chords[idx], chords[next], n)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            family.push_back(next);
            grow(next + 1);
            family.pop_back();
        }
    };
    grow(0);
    return sc;
}

inline CellComplex build_polygon_complex(int n, int cap = 9) {
    SimplicialComplex sc = polygon_simplicial(n, cap);
    CellComplex k = to_cell_complex(sc, "polygon" + std::to_string(n), polygon_cell_id);
    for (auto& c : k.cells) c.h1_rank = 0;
    return k;
}

/**
 * Side counts of the regions a non-crossing chord family cuts the n-gon
 * into, counting both polygon sides and chords.
 */
inline std::vector<int> complementary_regions(int n, std::vector<Chord> family) {
    if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    std::sort(family.begin(), family.end());
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (!chord_essential(family[i], n))
            throw std::invalid_argument("chord " + chord_label(family[i]) + " is not essential");
        if (i + 1 < family.size() && family[i] == family[i + 1])
            throw std::invalid_argument("duplicate chord " + chord_label(family[i]));
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (!chords_compatible(family[i], family[j], n))
                throw std::invalid_argument("chords " + chord_label(family[i]) + " and " +
                                            chord_label(family[j]) + " cross");
    }

    std::vector<int> sizes;
    std::function<void(std::vector<int>, std::vector<Chord>)> cut =
        [&](std::vector<int> region, std::vector<Chord> inside) {
            if (inside.empty()) {
                sizes.push_back(static_cast<int>(region.size()));
                return;
            }
            Chord c = inside.front();
            std::vector<int> left, right;
            for (int v : region) {
                if (v >= c.i && v <= c.j) left.push_back(v);
                if (v <= c.i || v >= c.j) right.push_back(v);
            }
            std::vector<Chord> left_in, right_in;
            for (std::size_t idx = 1; idx < inside.size(); ++idx) {
                const Chord& d = inside[idx];
                if (d.i >= c.i && d.j <= c.j)
                    left_in.push_back(d);
                else
                    right_in.push_back(d);
            }
            cut(left, left_in);
            cut(right, right_in);
        };

    std::vector<int> whole(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) whole[static_cast<std::size_t>(v)] = v;
    cut(whole, family);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace arc
