#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "homology.hpp"
#include "join.hpp"
#include "pants.hpp"
#include "polygon.hpp"
#include "surface.hpp"
#include "tableau.hpp"

namespace arc {

namespace detail {

// parity of the permutation taking `folded` to its stable-sorted order
inline long long stable_sort_sign(const std::vector<int>& folded) {
    std::vector<std::size_t> idx(folded.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&folded](std::size_t a, std::size_t b) { return folded[a] < folded[b]; });
    int inversions = 0;
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (idx[a] > idx[b]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace detail

/**
 * Builds the one-holed torus complex from the solid 3-simplex.
 *
 * Vertices v0,v3 and v1,v2 of the simplex are identified pairwise.  Cells of
 * the quotient are keyed by how many vertices a simplex meets in each pair;
 * orientations transport along the fold v3 -> v0, v2 -> v1.  The unique edge
 * with distinct endpoints is then collapsed.  Every intermediate count the
 * construction relies on is asserted, as is the final homology.
 */
inline CellComplex derive_F110_boundaries() {
    auto fold = [](int v) { return v == 3 ? 0 : v == 2 ? 1 : v; };
    auto fold_sign = [&fold](const std::vector<int>& simplex) {
        std::vector<int> folded;
        for (int v : simplex) folded.push_back(fold(v));
        return detail::stable_sort_sign(folded);
    };
    auto class_key = [](const std::vector<int>& simplex) {
        int a = 0, b = 0;
        for (int v : simplex) (v == 0 || v == 3) ? ++a : ++b;
        return std::make_pair(a, b);
    };

    const std::map<std::pair<int, int>, std::string> class_names = {
        {{1, 0}, "u1"}, {{0, 1}, "u2"}, {{2, 0}, "e1"}, {{0, 2}, "e2"},
        {{1, 1}, "j"},  {{2, 1}, "E1"}, {{1, 2}, "E2"}, {{2, 2}, "T"}};

    std::map<std::string, std::vector<int>> rep;
    std::map<std::string, int> class_dim;
    for (int mask = 1; mask < 16; ++mask) {
        std::vector<int> simplex;
        for (int v = 0; v < 4; ++v)
            if (mask & (1 << v)) simplex.push_back(v);
        std::string name = class_names.at(class_key(simplex));
        if (!rep.count(name)) {
            rep[name] = simplex;
            class_dim[name] = static_cast<int>(simplex.size()) - 1;
        }
    }

    std::vector<int> count_by_dim(4, 0);
    for (const auto& [name, dim] : class_dim) {
        (void)name;
        ++count_by_dim[static_cast<std::size_t>(dim)];
    }
    if (count_by_dim != std::vector<int>{2, 3, 2, 1})
        throw std::runtime_error("quotient cell counts differ from (2,3,2,1)");

    std::map<std::string, std::map<std::string, long long>> bnd;
    for (const auto& [name, simplex] : rep) {
        auto& coeffs = bnd[name];
        if (simplex.size() < 2) continue;
        for (std::size_t omit = 0; omit < simplex.size(); ++omit) {
            std::vector<int> face;
            for (std::size_t i = 0; i < simplex.size(); ++i)
                if (i != omit) face.push_back(simplex[i]);
            std::string fname = class_names.at(class_key(face));
            long long sign = (omit % 2 == 0 ? 1 : -1) * fold_sign(face) * fold_sign(rep.at(fname));
            coeffs[fname] += sign;
        }
        for (auto it = coeffs.begin(); it != coeffs.end();)
            it = it->second == 0 ? coeffs.erase(it) : std::next(it);
    }

    auto expect = [&bnd](const std::string& cell, const std::map<std::string, long long>& want,
                         bool up_to_sign) {
        const auto& got = bnd.at(cell);
        bool ok = got.size() == want.size();
        if (ok)
            for (const auto& [fname, coeff] : want) {
                auto it = got.find(fname);
                if (it == got.end() || (up_to_sign ? (it->second != coeff && it->second != -coeff)
                                                   : it->second != coeff))
                    ok = false;
            }
        if (!ok) throw std::runtime_error("quotient boundary of " + cell + " has unexpected form");
    };
    expect("e1", {}, false);
    expect("e2", {}, false);
    expect("j", {{"u1", -1}, {"u2", 1}}, true);
    expect("E1", {{"e1", 1}}, true);
    expect("E2", {{"e2", 1}}, true);
    expect("T", {}, false);

    CellComplex k;
    k.name = "F110";
    k.cells.push_back({"a", 0, {}, 1});
    k.cells.push_back({"alpha1", 1, {}, 1});
    k.cells.push_back({"alpha2", 1, {}, 0});
    k.cells.push_back({"beta1", 2, {{"alpha1", bnd.at("E1").at("e1")}}, 0});
    k.cells.push_back({"beta2", 2, {{"alpha2", bnd.at("E2").at("e2")}}, 0});
    k.cells.push_back({"gamma", 3, {}, 0});
    k.canonicalize();

    if (!is_homology_sphere(homology(k), 3))
        throw std::runtime_error("one-holed torus complex is not a homology 3-sphere");
    return k;
}

/**
 * Attaching-map degrees of the one-holed torus complex: how many
 * codimension-one faces of each cell land on each face cell.  The net chain
 * coefficients only see these degrees modulo orientation cancellation.
 */
inline std::map<std::pair<std::string, std::string>, long long> f110_incidence_degrees() {
    return {{{"alpha1", "a"}, 2},     {{"alpha2", "a"}, 2},     {{"beta1", "alpha1"}, 1},
            {{"beta1", "alpha2"}, 2}, {{"beta2", "alpha2"}, 3}, {{"gamma", "beta1"}, 2},
            {{"gamma", "beta2"}, 2}};
}

struct CatalogEntry {
    std::string name;
    SurfaceSpec surface;
    CellComplex complex;
    long long expected_dim = 0;
    std::string note;
};

inline std::vector<std::string> catalog_names() {
    return {"quadrilateral", "pentagon", "punctured_bigon", "annulus",      "F012",
            "F021_join",     "F013",     "F110",            "F110_blowup", "pants"};
}

inline CatalogEntry build_catalog(const std::string& name) {
    CatalogEntry e;
    e.name = name;
    if (name == "quadrilateral") {
        e.surface = {0, 0, {4}};
        e.complex = build_polygon_complex(4);
        e.note = "two crossing diagonals";
    } else if (name == "pentagon") {
        e.surface = {0, 0, {5}};
        e.complex = build_polygon_complex(5);
        e.note = "chord pentagon";
    } else if (name == "punctured_bigon") {
        e.surface = {0, 1, {2}};
        e.complex.name = "punctured_bigon";
        e.complex.cells.push_back({"b0", 0, {}, 1});
        e.complex.cells.push_back({"b1", 0, {}, 1});
        e.note = "two arcs around the puncture";
    } else if (name == "annulus") {
        e.surface = {0, 0, {1, 1}};
        e.complex = make_circle(1);
        e.complex.name = "annulus";
        for (auto& c : e.complex.cells) c.h1_rank = 0;
        e.note = "spanning arcs modulo the core twist";
    } else if (name == "F012") {
        e.surface = {0, 2, {1}};
        e.complex.name = "F012";
        e.complex.cells.push_back({"a0", 0, {}, 2});
        e.complex.cells.push_back({"a1", 0, {}, 2});
        e.complex.cells.push_back({"e0", 1, {{"a1", 1}, {"a0", -1}}, 2});
        e.complex.cells.push_back({"e1", 1, {{"a0", 1}, {"a1", -1}}, 2});
        e.complex.canonicalize();
        e.note = "arcs separating the punctures, vertices indexed by parity";
    } else if (name == "F021_join") {
        e.surface = {0, 1, {1, 1}};
        e.complex = join(make_circle(1, "c1."), make_circle(1, "c2."));
        e.complex.name = "F021_join";
        e.note = "join model of the once-punctured annulus";
    } else if (name == "F013") {
        e.surface = {0, 3, {1}};
        e.complex = build_F013();
        e.note = "tableau cells of the thrice-punctured monogon";
    } else if (name == "F110") {
        e.surface = {1, 0, {1}};
        e.complex = derive_F110_boundaries();
        e.note = "one-holed torus via the simplex quotient";
    } else if (name == "F110_blowup") {
        e.surface = {1, 0, {1}};
        e.complex = join(make_circle(1, "C1."), make_circle(1, "C2."));
        e.complex.name = "F110_blowup";
        e.note = "vertex blow-up, the join of the two arc circles";
    } else if (name == "pants") {
        e.surface = {0, 0, {1, 1, 1}};
        e.complex = pants_complex();
        e.note = "join of three boundary circles";
    } else {
        throw std::invalid_argument("unknown catalog entry '" + name + "'");
    }
    e.expected_dim = dimension(e.surface);
    return e;
}

// per-entry invariants; empty result means the entry is sound
inline std::vector<std::string> verify_catalog_entry(const CatalogEntry& e) {
    std::vector<std::string> problems = validate_complex(e.complex);
    if (e.complex.dimension() != e.expected_dim)
        problems.push_back(e.name + ": complex dimension " +
                           std::to_string(e.complex.dimension()) + " differs from N=" +
                           std::to_string(e.expected_dim));
    SphericityVerdict v = classify(e.surface);
    if (v.kind != Verdict::Spherical)
        problems.push_back(e.name + ": surface no longer classifies as spherical");
    else if (!is_homology_sphere(homology(e.complex), static_cast<int>(e.expected_dim)))
        problems.push_back(e.name + ": not a homology " + std::to_string(e.expected_dim) +
                           "-sphere");
    return problems;
}

}  // namespace arc
