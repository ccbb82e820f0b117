#include <cstdint>
#include <map>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <arc/counting.hpp>
#include <arc/homology.hpp>
#include <arc/join.hpp>
#include <arc/polygon.hpp>

using arc::Chord;

namespace {

// independent oracle: test every chord subset for pairwise compatibility
std::map<int, long> family_counts_by_size(int n) {
    std::vector<Chord> chords = arc::enumerate_chords(n);
    const std::size_t m = chords.size();
    REQUIRE(m < 20);
    std::map<int, long> counts;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<Chord> fam;
        for (std::size_t b = 0; b < m; ++b)
            if (mask >> b & 1u) fam.push_back(chords[b]);
        bool ok = true;
        for (std::size_t x = 0; x < fam.size() && ok; ++x)
            for (std::size_t y = x + 1; y < fam.size() && ok; ++y)
                ok = arc::chords_compatible(fam[x], fam[y], n);
        if (ok) ++counts[static_cast<int>(fam.size())];
    }
    return counts;
}

}  // namespace

TEST_CASE("chord enumeration and essentiality") {
    REQUIRE(arc::enumerate_chords(4) == std::vector<Chord>{{0, 2}, {1, 3}});
    REQUIRE(arc::enumerate_chords(5).size() == 5);
    REQUIRE(arc::enumerate_chords(6).size() == 9);
    REQUIRE(arc::enumerate_chords(3).empty());
    REQUIRE_THROWS_AS(arc::enumerate_chords(2), std::invalid_argument);

    for (const Chord& c : arc::enumerate_chords(7)) REQUIRE(arc::chord_essential(c, 7));
    REQUIRE_FALSE(arc::chord_essential({0, 1}, 5));
    REQUIRE_FALSE(arc::chord_essential({0, 4}, 5));
    REQUIRE_FALSE(arc::chord_essential({2, 2}, 5));
    REQUIRE(arc::chord_essential({0, 4}, 6));
}

TEST_CASE("chord compatibility") {
    REQUIRE_FALSE(arc::chords_compatible({0, 2}, {1, 3}, 4));
    REQUIRE_FALSE(arc::chords_compatible({0, 2}, {1, 3}, 6));
    REQUIRE_FALSE(arc::chords_compatible({0, 3}, {1, 5}, 6));
    REQUIRE(arc::chords_compatible({0, 2}, {2, 4}, 6));
    REQUIRE(arc::chords_compatible({0, 2}, {3, 5}, 6));
    REQUIRE(arc::chords_compatible({0, 4}, {1, 3}, 6));
    REQUIRE(arc::chords_compatible({1, 3}, {0, 4}, 6));
    REQUIRE_THROWS_AS(arc::chords_compatible({0, 1}, {0, 2}, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(arc::chords_compatible({0, 2}, {0, 4}, 5), std::invalid_argument);
}

TEST_CASE("counting helpers") {
    REQUIRE(arc::binomial(5, 2) == 10);
    REQUIRE(arc::binomial(5, 0) == 1);
    REQUIRE(arc::binomial(3, 5) == 0);
    REQUIRE(arc::binomial(3, -1) == 0);

    REQUIRE(arc::catalan(0) == 1);
    REQUIRE(arc::catalan(3) == 5);
    REQUIRE(arc::catalan(6) == 132);
    REQUIRE(arc::catalan(8) == 1430);

    REQUIRE(arc::dissection_count(6, 0) == 1);
    REQUIRE(arc::dissection_count(6, 1) == 9);
    REQUIRE(arc::dissection_count(6, 2) == 21);
    REQUIRE(arc::dissection_count(6, 3) == 14);
    REQUIRE_THROWS_AS(arc::dissection_count(2, 1), std::invalid_argument);
}

TEST_CASE("polygon complexes match the subset oracle") {
    for (int n = 4; n <= 7; ++n) {
        arc::CellComplex k = arc::build_polygon_complex(n);
        REQUIRE(arc::validate_complex(k).empty());

        std::vector<long> f = k.f_vector();
        REQUIRE(f.size() == static_cast<std::size_t>(n - 3));

        std::map<int, long> oracle = family_counts_by_size(n);
        REQUIRE(oracle.size() == f.size());
        for (std::size_t p = 0; p < f.size(); ++p) {
            REQUIRE(f[p] == oracle.at(static_cast<int>(p) + 1));
            REQUIRE(arc::Int(f[p]) == arc::dissection_count(n, static_cast<long long>(p) + 1));
        }
        REQUIRE(arc::Int(f.back()) == arc::catalan(n - 2));
    }
}

TEST_CASE("small polygon f-vectors") {
    REQUIRE(arc::build_polygon_complex(4).f_vector() == std::vector<long>{2});
    REQUIRE(arc::build_polygon_complex(5).f_vector() == std::vector<long>{5, 5});
    REQUIRE(arc::build_polygon_complex(6).f_vector() == std::vector<long>{9, 21, 14});
}

TEST_CASE("polygon homology spheres") {
    for (int n = 4; n <= 7; ++n) {
        arc::CellComplex k = arc::build_polygon_complex(n);
        arc::HomologyResult h = arc::homology(k);
        REQUIRE(arc::is_homology_sphere(h, n - 4));
        REQUIRE(arc::euler_characteristic(k) == (n % 2 == 0 ? 2 : 0));
        for (const auto& c : k.cells) REQUIRE(c.h1_rank == 0);
    }
}

TEST_CASE("suspending a polygon complex matches the next polygon") {
    for (int n = 4; n <= 6; ++n) {
        arc::HomologyResult hs = arc::homology(arc::suspension(arc::build_polygon_complex(n)));
        arc::HomologyResult hn = arc::homology(arc::build_polygon_complex(n + 1));
        REQUIRE(hs.betti == hn.betti);
        REQUIRE(hs.torsion == hn.torsion);
    }
}

TEST_CASE("triangle and degenerate polygons") {
    arc::CellComplex k = arc::build_polygon_complex(3);
    REQUIRE(k.cells.empty());
    REQUIRE(k.dimension() == -1);
    REQUIRE(arc::is_homology_sphere(arc::homology(k), -1));
    REQUIRE_THROWS_AS(arc::build_polygon_complex(2), std::invalid_argument);
}

TEST_CASE("size cap") {
    REQUIRE_THROWS_AS(arc::build_polygon_complex(10), std::invalid_argument);
    REQUIRE_THROWS_AS(arc::polygon_simplicial(12, 9), std::invalid_argument);

    arc::CellComplex k = arc::build_polygon_complex(10, 10);
    REQUIRE(k.f_vector().size() == 7);
    REQUIRE(k.f_vector()[6] == 1430);
}

TEST_CASE("complementary regions") {
    REQUIRE(arc::complementary_regions(6, {}) == std::vector<int>{6});
    REQUIRE(arc::complementary_regions(6, {{0, 3}}) == std::vector<int>{4, 4});
    REQUIRE(arc::complementary_regions(6, {{0, 2}, {0, 4}, {2, 4}}) ==
            std::vector<int>{3, 3, 3, 3});
    REQUIRE(arc::complementary_regions(5, {{1, 3}}) == std::vector<int>{3, 4});

    REQUIRE_THROWS_AS(arc::complementary_regions(6, {{0, 2}, {0, 2}}), std::invalid_argument);
    REQUIRE_THROWS_AS(arc::complementary_regions(6, {{0, 2}, {1, 3}}), std::invalid_argument);
    REQUIRE_THROWS_AS(arc::complementary_regions(6, {{0, 5}}), std::invalid_argument);

    SECTION("every family of the hexagon cuts off polygons with total defect 4") {
        std::vector<Chord> chords = arc::enumerate_chords(6);
        for (std::uint32_t mask = 0; mask < (1u << chords.size()); ++mask) {
            std::vector<Chord> fam;
            for (std::size_t b = 0; b < chords.size(); ++b)
                if (mask >> b & 1u) fam.push_back(chords[b]);
            bool ok = true;
            for (std::size_t x = 0; x < fam.size() && ok; ++x)
                for (std::size_t y = x + 1; y < fam.size() && ok; ++y)
                    ok = arc::chords_compatible(fam[x], fam[y], 6);
            if (!ok) continue;
            int defect = 0;
            for (int size : arc::complementary_regions(6, fam)) {
                REQUIRE(size >= 3);
                defect += size - 2;
            }
            REQUIRE(defect == 4);
        }
    }
}
