#pragma once

#include <array>
#include <chrono>
#include <climits>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "complex.hpp"
#include "counting.hpp"
#include "homology.hpp"
#include "join.hpp"
#include "pants.hpp"
#include "polygon.hpp"
#include "simplicial.hpp"
#include "split.hpp"
#include "surface.hpp"
#include "tableau.hpp"

namespace arc {

struct CheckResult {
    int index = 0;
    std::string claim;
    std::string expected;
    std::string got;
    bool pass = false;
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

namespace verify_detail {

inline unsigned rnd(std::mt19937& eng, unsigned n) { return eng() % n; }

inline SimplicialComplex random_simplicial(std::mt19937& eng) {
    SimplicialComplex sc;
    unsigned facets = 1 + rnd(eng, 4);
    for (unsigned f = 0; f < facets; ++f) {
        unsigned size = 1 + rnd(eng, 3);
        std::set<std::string> verts;
        while (verts.size() < size) verts.insert("v" + std::to_string(rnd(eng, 7)));
        sc.insert_closed({verts.begin(), verts.end()});
    }
    return sc;
}

inline std::pair<long, std::vector<Int>> reduced_at(const HomologyResult& h, int p) {
    if (p < 0 || p > h.top_dim()) return {0, {}};
    long r = h.betti[static_cast<std::size_t>(p)];
    if (p == 0) r -= 1;
    return {r, h.torsion[static_cast<std::size_t>(p)]};
}

// reduced homology of the suspension is the base's shifted up by one
inline bool suspension_shift_ok(const HomologyResult& base, const HomologyResult& susp) {
    if (reduced_at(susp, 0) != std::make_pair(0L, std::vector<Int>{})) return false;
    int top = std::max(base.top_dim() + 1, susp.top_dim());
    for (int p = 0; p <= top; ++p)
        if (reduced_at(susp, p + 1) != reduced_at(base, p)) return false;
    return true;
}

inline bool homology_equal(const HomologyResult& a, const HomologyResult& b) {
    int top = std::max(a.top_dim(), b.top_dim());
    for (int p = 0; p <= top; ++p) {
        auto rank = [p](const HomologyResult& h) {
            return p <= h.top_dim() ? h.betti[static_cast<std::size_t>(p)] : 0L;
        };
        auto tors = [p](const HomologyResult& h) {
            return p <= h.top_dim() ? h.torsion[static_cast<std::size_t>(p)]
                                    : std::vector<Int>{};
        };
        if (rank(a) != rank(b) || tors(a) != tors(b)) return false;
    }
    return true;
}

inline bool same_coords(const DTCoords& a, const DTCoords& b) {
    return a.m == b.m && a.t == b.t;
}

inline Rational random_nonneg_rational(std::mt19937& eng, unsigned numerators) {
    return Rational(rnd(eng, numerators), 1 + rnd(eng, 6));
}

inline std::string fail_at(const std::string& where) { return "failed: " + where; }

}  // namespace verify_detail

inline void check_polygon_spheres(CheckResult& r) {
    using namespace verify_detail;
    for (int n = 4; n <= 9; ++n) {
        CellComplex k = build_polygon_complex(n);
        if (!validate_complex(k).empty()) {
            r.got = fail_at("polygon " + std::to_string(n) + " invalid");
            return;
        }
        if (!is_homology_sphere(homology(k), n - 4)) {
            r.got = fail_at("polygon " + std::to_string(n) + " homology");
            return;
        }
        long long chi = euler_characteristic(k);
        if (chi != (n % 2 == 0 ? 2 : 0)) {
            r.got = fail_at("polygon " + std::to_string(n) + " euler characteristic");
            return;
        }
        std::vector<long> f = k.f_vector();
        if (static_cast<int>(f.size()) != n - 3) {
            r.got = fail_at("polygon " + std::to_string(n) + " top dimension");
            return;
        }
        for (int p = 0; p <= n - 4; ++p)
            if (Int(f[static_cast<std::size_t>(p)]) != dissection_count(n, p + 1)) {
                r.got = fail_at("polygon " + std::to_string(n) + " f-vector at dim " +
                                std::to_string(p));
                return;
            }
        if (Int(f.back()) != catalan(n - 2)) {
            r.got = fail_at("polygon " + std::to_string(n) + " top cell count");
            return;
        }
    }
    r.pass = true;
    r.got = "all n=4..9 verified";
}

inline void check_suspension_law(CheckResult& r, unsigned seed) {
    using namespace verify_detail;
    for (int n = 4; n <= 8; ++n) {
        HomologyResult lifted = homology(suspension(build_polygon_complex(n)));
        HomologyResult next = homology(build_polygon_complex(n + 1));
        if (!homology_equal(lifted, next)) {
            r.got = fail_at("susp(polygon " + std::to_string(n) + ") vs polygon " +
                            std::to_string(n + 1));
            return;
        }
    }
    std::mt19937 eng(seed);
    for (int i = 0; i < 100; ++i) {
        SimplicialComplex sc = random_simplicial(eng);
        CellComplex k = to_cell_complex(sc, "rand");
        if (!suspension_shift_ok(homology(k), homology(suspension(k)))) {
            r.got = fail_at("random complex " + std::to_string(i));
            return;
        }
    }
    r.pass = true;
    r.got = "5 polygon pairs and 100 random complexes shifted";
}

inline void check_tableaux(CheckResult& r) {
    using namespace verify_detail;
    auto by_dim = enumerate_tableaux();
    std::vector<long> counts;
    for (const auto& group : by_dim) counts.push_back(static_cast<long>(group.size()));
    if (counts != std::vector<long>{6, 18, 24, 12}) {
        std::ostringstream os;
        os << "tableau counts";
        for (long c : counts) os << " " << c;
        r.got = fail_at(os.str());
        return;
    }
    CellComplex k = build_F013();
    if (!validate_complex(k).empty()) {
        r.got = fail_at("boundary table violates dd=0");
        return;
    }
    if (k.f_vector() != std::vector<long>{6, 18, 24, 12}) {
        r.got = fail_at("cell counts differ from tableau counts");
        return;
    }
    if (!is_homology_sphere(homology(k), 3)) {
        r.got = fail_at("homology is not the 3-sphere pattern");
        return;
    }
    if (euler_characteristic(k) != 0) {
        r.got = fail_at("euler characteristic");
        return;
    }
    r.pass = true;
    r.got = "counts (6,18,24,12), dd=0, S^3, chi=0";
}

inline void check_torus_models(CheckResult& r) {
    using namespace verify_detail;
    CellComplex k = derive_F110_boundaries();
    if (k.f_vector() != std::vector<long>{1, 2, 2, 1}) {
        r.got = fail_at("final cell counts");
        return;
    }
    if (!is_homology_sphere(homology(k), 3)) {
        r.got = fail_at("quotient model homology");
        return;
    }
    CellComplex blowup = build_catalog("F110_blowup").complex;
    if (blowup.f_vector() != std::vector<long>{2, 3, 2, 1} ||
        !is_homology_sphere(homology(blowup), 3)) {
        r.got = fail_at("join model");
        return;
    }

    auto deg = f110_incidence_degrees();
    if (deg.at({"beta1", "alpha1"}) != 1 || deg.at({"beta2", "alpha2"}) != 3 ||
        deg.at({"gamma", "beta1"}) != 2) {
        r.got = fail_at("prose incidence degrees");
        return;
    }
    const std::map<std::string, long long> face_total = {
        {"alpha1", 2}, {"alpha2", 2}, {"beta1", 3}, {"beta2", 3}, {"gamma", 4}};
    for (const auto& [cell, want] : face_total) {
        long long sum = 0;
        for (const auto& [pair, d] : deg)
            if (pair.first == cell) sum += d;
        if (sum != want) {
            r.got = fail_at("degree sum of " + cell);
            return;
        }
    }
    for (const auto& c : k.cells) {
        if (c.dim == 0) continue;
        std::map<std::string, long long> net;
        for (const auto& [fid, coeff] : c.boundary) net[fid] += coeff;
        for (const auto& [pair, d] : deg) {
            if (pair.first != c.id) continue;
            long long n = net.count(pair.second) ? net.at(pair.second) : 0;
            if (n < 0) n = -n;
            if (d < n || (d - n) % 2 != 0) {
                r.got = fail_at("degree vs chain coefficient " + pair.first + "->" + pair.second);
                return;
            }
        }
        for (const auto& [fid, coeff] : net)
            if (coeff != 0 && !deg.count({c.id, fid})) {
                r.got = fail_at("chain coefficient without a degree entry " + c.id + "->" + fid);
                return;
            }
    }
    r.pass = true;
    r.got = "quotient and join models are S^3; degree table consistent";
}

inline void check_pants_examples(CheckResult& r) {
    using namespace verify_detail;
    CellComplex p = pants_complex();
    if (!validate_complex(p).empty() || !is_homology_sphere(homology(p), 5)) {
        r.got = fail_at("pants complex");
        return;
    }
    if (!is_homology_sphere(homology(pants_subcomplex({1})), 3)) {
        r.got = fail_at("one-leg zero set");
        return;
    }
    if (!is_homology_sphere(homology(pants_subcomplex({1, 2})), 1)) {
        r.got = fail_at("two-leg zero set");
        return;
    }
    const std::vector<std::pair<std::string, int>> small = {
        {"annulus", 1}, {"punctured_bigon", 0}, {"F012", 1}};
    for (const auto& [name, dim] : small)
        if (!is_homology_sphere(homology(build_catalog(name).complex), dim)) {
            r.got = fail_at(name);
            return;
        }
    r.pass = true;
    r.got = "S^5, S^3, S^1 chain and the three small catalog spheres";
}

inline void check_classification_scan(CheckResult& r) {
    using namespace verify_detail;
    long long min_nonspherical = LLONG_MAX, min_nonmanifold = LLONG_MAX;
    for (const SurfaceSpec& f : enumerate_signatures(6)) {
        SphericityVerdict v = classify(f);
        long long n = dimension(f);
        if (v.kind == Verdict::EmptyComplex) {
            if (has_essential_arc(f)) {
                r.got = fail_at("empty verdict on " + format_surface(f));
                return;
            }
            continue;
        }
        if (n <= 4 && v.kind != Verdict::Spherical) {
            r.got = fail_at("low-dimensional non-sphere " + format_surface(f));
            return;
        }
        if (v.kind != Verdict::Spherical) min_nonspherical = std::min(min_nonspherical, n);
        if (v.kind == Verdict::NonManifold) min_nonmanifold = std::min(min_nonmanifold, n);
        if (contains_type1(f).has_value() != (v.kind == Verdict::NonManifold)) {
            r.got = fail_at("witness mismatch on " + format_surface(f));
            return;
        }
    }
    if (min_nonspherical != 5) {
        r.got = fail_at("min non-spherical dimension " + std::to_string(min_nonspherical));
        return;
    }
    SphericityVerdict twice = classify({0, 2, {1, 1}});
    if (twice.kind != Verdict::NonSphereManifold || twice.dimension != 5) {
        r.got = fail_at("twice-punctured annulus verdict");
        return;
    }
    if (min_nonmanifold != 6) {
        r.got = fail_at("min non-manifold dimension " + std::to_string(min_nonmanifold));
        return;
    }
    r.pass = true;
    r.got = "scan matches: 5 via F g=0 s=2 d=1,1 and non-manifold floor 6";
}

inline void check_dt_suite(CheckResult& r, unsigned seed) {
    using namespace verify_detail;
    bool threw = false;
    try {
        DTCoords bad;
        bad.m[0] = -1;
        validate_dt(bad);
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    if (!threw) {
        r.got = fail_at("negative weight accepted");
        return;
    }

    std::mt19937 eng(seed);
    for (int iter = 0; iter < 1000; ++iter) {
        bool integral = iter % 2 == 0;
        DTCoords c;
        c.integral = integral;
        for (std::size_t i = 0; i < 3; ++i)
            c.m[i] = integral ? Rational(rnd(eng, 8)) : random_nonneg_rational(eng, 8);
        if (c.m[0] + c.m[1] + c.m[2] == 0)
            c.m[rnd(eng, 3)] = integral ? Rational(2) : Rational(1, 2);
        if (integral && rat_num(c.m[0] + c.m[1] + c.m[2]) % 2 != 0) c.m[rnd(eng, 3)] += 1;
        for (std::size_t i = 0; i < 3; ++i) {
            if (c.m[i] == 0) continue;
            c.t[i] = integral ? Rational(static_cast<long long>(rnd(eng, 21)) - 10)
                              : Rational(static_cast<long long>(rnd(eng, 21)) - 10,
                                         1 + rnd(eng, 6));
        }
        std::string tag = " at iteration " + std::to_string(iter);
        if (validate_dt(c)) {
            r.got = fail_at("valid coordinates rejected" + tag);
            return;
        }

        DTCoords zero;
        zero.integral = integral;
        if (validate_dt(zero) != DTError::ZeroTotalWeight) {
            r.got = fail_at("zero weight accepted" + tag);
            return;
        }
        DTCoords ghost = c;
        ghost.m[0] = 0;
        ghost.t[0] = integral ? Rational(1) : Rational(1, 2);
        if (ghost.integral && rat_num(ghost.m[1] + ghost.m[2]) % 2 != 0) ghost.m[1] += 1;
        if (ghost.m[1] + ghost.m[2] == 0) ghost.m[1] = integral ? Rational(2) : Rational(1, 2);
        if (validate_dt(ghost) != DTError::TwistWithoutIntersection) {
            r.got = fail_at("twist without intersection accepted" + tag);
            return;
        }
        if (integral) {
            DTCoords odd = c;
            odd.m[2] += 1;
            if (validate_dt(odd) != DTError::ParityViolation) {
                r.got = fail_at("odd weight sum accepted" + tag);
                return;
            }
        }

        NormalizedDT n1 = normalize_dt(c);
        NormalizedDT n2 = normalize_dt(n1.coords);
        if (!same_coords(n1.coords, n2.coords) || n2.k != std::array<Int, 3>{0, 0, 0}) {
            r.got = fail_at("normalize not idempotent" + tag);
            return;
        }
        for (std::size_t i = 0; i < 3; ++i) {
            if (c.m[i] == 0) continue;
            const Rational& t = n1.coords.t[i];
            if (!(t * 2 > -c.m[i] && t * 2 <= c.m[i])) {
                r.got = fail_at("canonical twist outside window" + tag);
                return;
            }
        }

        std::array<Rational, 3> whole;
        for (auto& th : whole) th = Rational(static_cast<long long>(rnd(eng, 7)) - 3);
        NormalizedDT twisted = normalize_dt(torus_act(c, whole));
        if (!same_coords(twisted.coords, n1.coords)) {
            r.got = fail_at("integer twists changed the canonical form" + tag);
            return;
        }
        for (std::size_t i = 0; i < 3; ++i)
            if (c.m[i] != 0 && twisted.k[i] != n1.k[i] + rat_num(whole[i])) {
                r.got = fail_at("twist counts off" + tag);
                return;
            }

        DTCoords loose = c;
        loose.integral = false;
        unsigned den = 2 + rnd(eng, 5);
        Rational lambda(1 + rnd(eng, den - 1), den);
        NormalizedDT moved = normalize_dt(torus_act(loose, {lambda, lambda, lambda}));
        if (same_coords(moved.coords, normalize_dt(loose).coords)) {
            r.got = fail_at("fractional diagonal twist fixed a point" + tag);
            return;
        }

        JoinPoint jp = to_join_point(loose);
        if (!same_coords(from_join_point(jp), normalize_dt(loose).coords)) {
            r.got = fail_at("join chart round trip" + tag);
            return;
        }
        JoinPoint jp2 = to_join_point(from_join_point(jp));
        if (jp2.L != jp.L || jp2.s != jp.s) {
            r.got = fail_at("join point round trip" + tag);
            return;
        }

        if (integral) {
            PantsArcTypes a = arc_types_from_m(c.m[0], c.m[1], c.m[2], true);
            for (const Rational& w : {a.x12, a.x13, a.x23, a.l1, a.l2, a.l3})
                if (w < 0 || rat_den(w) != 1) {
                    r.got = fail_at("arc weights not non-negative integers" + tag);
                    return;
                }
            bool eq = c.m[0] == a.x12 + a.x13 + 2 * a.l1 &&
                      c.m[1] == a.x12 + a.x23 + 2 * a.l2 &&
                      c.m[2] == a.x13 + a.x23 + 2 * a.l3;
            if (!eq) {
                r.got = fail_at("endpoint equations" + tag);
                return;
            }
        }
    }
    r.pass = true;
    r.got = "1000 coordinate triples passed every property";
}

inline void check_splitting(CheckResult& r) {
    using namespace verify_detail;
    for (int n = 4; n <= 9; ++n) {
        CellComplex k = build_polygon_complex(n);
        BigradedSplit s = split_boundary(k);
        if (!check_split_identities(k, s).empty()) {
            r.got = fail_at("identities on polygon " + std::to_string(n));
            return;
        }
        for (const auto& m : s.d2)
            if (!m.is_zero()) {
                r.got = fail_at("nonzero rank-raising part on polygon " + std::to_string(n));
                return;
            }
    }
    CellComplex torus = build_catalog("F110").complex;
    BigradedSplit s = split_boundary(torus);
    if (!check_split_identities(torus, s).empty()) {
        r.got = fail_at("identities on the one-holed torus");
        return;
    }
    std::size_t raising = 0;
    for (const auto& m : s.d2) raising += m.nnz();
    if (raising == 0) {
        r.got = fail_at("torus split has no rank-raising incidence");
        return;
    }
    r.pass = true;
    r.got = "identities hold; polygon d2 vanishes; torus d2 does not";
}

inline void check_subdivision(CheckResult& r, unsigned seed) {
    using namespace verify_detail;
    for (int n = 4; n <= 7; ++n) {
        CellComplex k = build_polygon_complex(n);
        auto sc = recover_simplicial(k);
        if (!sc) {
            r.got = fail_at("polygon " + std::to_string(n) + " not recognized as simplicial");
            return;
        }
        CellComplex sd = to_cell_complex(barycentric_subdivision(*sc), "sd");
        if (!homology_equal(homology(sd), homology(k))) {
            r.got = fail_at("polygon " + std::to_string(n) + " homology changed");
            return;
        }
    }
    std::mt19937 eng(seed + 9);
    for (int i = 0; i < 50; ++i) {
        SimplicialComplex sc = random_simplicial(eng);
        CellComplex base = to_cell_complex(sc, "rand");
        CellComplex sd = to_cell_complex(barycentric_subdivision(sc), "sd");
        if (!homology_equal(homology(sd), homology(base))) {
            r.got = fail_at("random complex " + std::to_string(i));
            return;
        }
    }
    r.pass = true;
    r.got = "polygons n=4..7 and 50 random complexes preserved";
}

inline std::vector<CheckResult> run_all_checks(unsigned seed = 12345) {
    struct Item {
        int index;
        const char* claim;
        const char* expected;
        double budget;
        std::function<void(CheckResult&)> fn;
    };
    const std::vector<Item> items = {
        {1, "polygon complexes n=4..9", "S^(n-4), chi parity, f[k]=D(n,k+1), tops Catalan",
         60.0, [](CheckResult& r) { check_polygon_spheres(r); }},
        {2, "suspension shifts homology",
         "susp(polygon n)=polygon n+1 for n=4..8; 100 random complexes", 0.0,
         [seed](CheckResult& r) { check_suspension_law(r, seed); }},
        {3, "tableau census and boundary table", "(6,18,24,12), dd=0, S^3, chi=0", 1.0,
         [](CheckResult& r) { check_tableaux(r); }},
        {4, "one-holed torus models", "quotient (1,2,2,1) and join model S^3; degrees 1/3/2",
         0.0, [](CheckResult& r) { check_torus_models(r); }},
        {5, "pants complex and small examples", "S^5; zero sets S^3, S^1; S^1, S^0, S^1", 0.0,
         [](CheckResult& r) { check_pants_examples(r); }},
        {6, "classification scan N<=6",
         "N<=4 all spherical; min non-spherical 5; min non-manifold 6", 1.0,
         [](CheckResult& r) { check_classification_scan(r); }},
        {7, "Dehn-Thurston property suite",
         "validation, idempotence, twist invariance, freeness, join chart, integral arcs",
         5.0, [seed](CheckResult& r) { check_dt_suite(r, seed); }},
        {8, "boundary splitting identities",
         "d1+d2=d, squares and anticommutator zero; polygon d2=0", 0.0,
         [](CheckResult& r) { check_splitting(r); }},
        {9, "barycentric subdivision preserves homology",
         "polygons n=4..7 and 50 random complexes", 0.0,
         [seed](CheckResult& r) { check_subdivision(r, seed); }},
    };

    std::vector<CheckResult> out;
    for (const auto& item : items) {
        CheckResult r;
        r.index = item.index;
        r.claim = item.claim;
        r.expected = item.expected;
        r.budget_seconds = item.budget;
        auto start = std::chrono::steady_clock::now();
        try {
            item.fn(r);
        } catch (const std::exception& e) {
            r.pass = false;
            r.got = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.pass && r.budget_seconds > 0 && r.seconds >= r.budget_seconds) {
            r.pass = false;
            r.got += " [budget of " + std::to_string(r.budget_seconds) + "s exceeded]";
        }
        out.push_back(std::move(r));
    }
    return out;
}

inline bool all_passed(const std::vector<CheckResult>& rows) {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return true;
}

inline std::string format_check_table(const std::vector<CheckResult>& rows) {
    std::ostringstream os;
    os << "# | claim | expected | got | status\n";
    for (const auto& r : rows)
        os << r.index << " | " << r.claim << " | " << r.expected << " | " << r.got << " | "
           << (r.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace arc
