#include <set>

#include <catch2/catch_amalgamated.hpp>

#include <arc/surface.hpp>

using arc::SurfaceSpec;
using arc::Verdict;

TEST_CASE("complex dimension from the signature") {
    REQUIRE(arc::dimension({0, 0, {4}}) == 0);
    REQUIRE(arc::dimension({0, 3, {1}}) == 0 * 6 - 7 + 3 + 6 + 1);
    REQUIRE(arc::dimension({0, 0, {1, 1, 1}}) == 5);
    REQUIRE(arc::dimension({1, 0, {1}}) == 3);
    REQUIRE(arc::dimension({0, 2, {1}}) == 1);
}

TEST_CASE("emptiness of the arc complex") {
    REQUIRE_FALSE(arc::has_essential_arc({0, 0, {1}}));
    REQUIRE_FALSE(arc::has_essential_arc({0, 0, {2}}));
    REQUIRE_FALSE(arc::has_essential_arc({0, 0, {3}}));
    REQUIRE_FALSE(arc::has_essential_arc({0, 1, {1}}));
    REQUIRE(arc::has_essential_arc({0, 1, {2}}));
    REQUIRE(arc::has_essential_arc({0, 0, {4}}));
    REQUIRE(arc::has_essential_arc({0, 0, {1, 1}}));
    REQUIRE(arc::has_essential_arc({1, 0, {1}}));
    REQUIRE(arc::has_essential_arc({0, 2, {1}}));
}

TEST_CASE("classification verdicts") {
    SECTION("empty complexes") {
        REQUIRE(arc::classify({0, 0, {3}}).kind == Verdict::EmptyComplex);
        REQUIRE(arc::classify({0, 1, {1}}).kind == Verdict::EmptyComplex);
        REQUIRE(arc::classify({0, 0, {3}}).dimension == -1);
    }

    SECTION("spheres") {
        arc::SphericityVerdict v = arc::classify({0, 0, {7}});
        REQUIRE(v.kind == Verdict::Spherical);
        REQUIRE(v.dimension == 3);

        REQUIRE(arc::classify({0, 0, {1, 1}}).kind == Verdict::Spherical);
        REQUIRE(arc::classify({0, 0, {1, 1}}).dimension == 1);
        REQUIRE(arc::classify({0, 0, {2, 3}}).kind == Verdict::Spherical);
        REQUIRE(arc::classify({0, 0, {1, 1, 1}}).kind == Verdict::Spherical);
        REQUIRE(arc::classify({0, 1, {1, 1}}).kind == Verdict::Spherical);
        REQUIRE(arc::classify({0, 2, {5}}).kind == Verdict::Spherical);
        REQUIRE(arc::classify({1, 0, {1}}).kind == Verdict::Spherical);
        REQUIRE(arc::classify({1, 1, {4}}).kind == Verdict::Spherical);
    }

    SECTION("manifolds that are not spheres") {
        arc::SphericityVerdict v = arc::classify({0, 2, {1, 1}});
        REQUIRE(v.kind == Verdict::NonSphereManifold);
        REQUIRE(v.dimension == 5);

        REQUIRE(arc::classify({0, 0, {1, 1, 1, 1}}).kind == Verdict::NonSphereManifold);
        REQUIRE(arc::classify({0, 1, {1, 1, 1}}).kind == Verdict::NonSphereManifold);
        REQUIRE(arc::classify({1, 0, {1, 1}}).kind == Verdict::NonSphereManifold);
    }

    SECTION("everything else is not a manifold") {
        arc::SphericityVerdict v = arc::classify({2, 0, {1}});
        REQUIRE(v.kind == Verdict::NonManifold);
        REQUIRE(v.dimension == 9);

        REQUIRE(arc::classify({0, 2, {2, 1}}).kind == Verdict::NonManifold);
        REQUIRE(arc::classify({0, 0, {2, 1, 1, 1}}).kind == Verdict::NonManifold);
        REQUIRE(arc::classify({1, 2, {1}}).kind == Verdict::NonManifold);
    }

    SECTION("invalid signatures throw") {
        REQUIRE_THROWS_AS(arc::classify({-1, 0, {1}}), std::invalid_argument);
        REQUIRE_THROWS_AS(arc::classify({0, 0, {}}), std::invalid_argument);
        REQUIRE_THROWS_AS(arc::classify({0, 0, {0}}), std::invalid_argument);
    }
}

TEST_CASE("witness surfaces for the non-manifold verdict") {
    REQUIRE_FALSE(arc::contains_type1({0, 0, {5}}).has_value());
    REQUIRE_FALSE(arc::contains_type1({0, 2, {1, 1}}).has_value());

    REQUIRE(arc::contains_type1({3, 0, {1}}) == arc::Type1Id::F040);
    REQUIRE(arc::contains_type1({1, 2, {1}}) == arc::Type1Id::F022);
    REQUIRE(arc::contains_type1({0, 0, {2, 1, 1, 1}}) == arc::Type1Id::F040);
    REQUIRE(arc::contains_type1({0, 1, {2, 1, 1}}) == arc::Type1Id::F031);
    REQUIRE(arc::contains_type1({0, 2, {2, 1}}) == arc::Type1Id::F022);
    REQUIRE(arc::contains_type1({2, 0, {1}}) == arc::Type1Id::F120);

    SECTION("witnesses appear exactly on non-manifold signatures") {
        for (const SurfaceSpec& f : arc::enumerate_signatures(8)) {
            bool witnessed = arc::contains_type1(f).has_value();
            REQUIRE(witnessed == (arc::classify(f).kind == Verdict::NonManifold));
        }
    }

    SECTION("the four witness surfaces classify as non-sphere manifolds") {
        for (arc::Type1Id t : {arc::Type1Id::F040, arc::Type1Id::F031, arc::Type1Id::F022,
                               arc::Type1Id::F120}) {
            REQUIRE(arc::classify(arc::type1_spec(t)).kind == Verdict::NonSphereManifold);
            REQUIRE_FALSE(arc::type1_name(t).empty());
        }
    }
}

TEST_CASE("arc counts of quasi-triangulations") {
    REQUIRE(arc::quasi_triangulation_arc_count({0, 0, {6}}) == 3);
    REQUIRE(arc::quasi_triangulation_arc_count({1, 0, {1}}) == 4);
    REQUIRE(arc::quasi_triangulation_arc_count({0, 0, {1, 1, 1}}) == 6);
    REQUIRE_THROWS_AS(arc::quasi_triangulation_arc_count({0, 0, {3}}), std::invalid_argument);
}

TEST_CASE("first homology rank of complementary pieces") {
    REQUIRE(arc::h1_rank(0, 1, 0) == 0);
    REQUIRE(arc::h1_rank(0, 1, 2) == 2);
    REQUIRE(arc::h1_rank(1, 1, 0) == 2);
    REQUIRE(arc::h1_rank(0, 2, 0) == 1);
    REQUIRE_THROWS_AS(arc::h1_rank(0, 0, 0), std::invalid_argument);
}

TEST_CASE("signature text form") {
    SECTION("formatting") {
        REQUIRE(arc::format_surface({0, 2, {1, 1}}) == "F g=0 s=2 d=1,1");
        REQUIRE(arc::format_surface({1, 0, {4}}) == "F g=1 s=0 d=4");
    }

    SECTION("parsing ignores whitespace") {
        SurfaceSpec f = arc::parse_surface("F  g = 1  s=0  d = 1 , 2");
        REQUIRE(f == SurfaceSpec{1, 0, {1, 2}});
        REQUIRE(arc::parse_surface("Fg=0s=2d=1,1") == SurfaceSpec{0, 2, {1, 1}});
    }

    SECTION("round trip") {
        for (const SurfaceSpec& f : arc::enumerate_signatures(6))
            REQUIRE(arc::parse_surface(arc::format_surface(f)) == f);
    }

    SECTION("malformed text is rejected") {
        REQUIRE_THROWS_AS(arc::parse_surface("F g=1 s=0"), std::invalid_argument);
        REQUIRE_THROWS_AS(arc::parse_surface("G g=1 s=0 d=1"), std::invalid_argument);
        REQUIRE_THROWS_AS(arc::parse_surface("F g=1 s=0 d=1 extra"), std::invalid_argument);
        REQUIRE_THROWS_AS(arc::parse_surface("F g=1 s=0 d=0"), std::invalid_argument);
        REQUIRE_THROWS_AS(arc::parse_surface("F g=-1 s=0 d=1"), std::invalid_argument);
        REQUIRE_THROWS_AS(arc::parse_surface("F g=1 s=0 d=1,"), std::invalid_argument);
        REQUIRE_THROWS_AS(arc::parse_surface(""), std::invalid_argument);
    }
}

TEST_CASE("signature enumeration") {
    std::vector<SurfaceSpec> sigs = arc::enumerate_signatures(6);

    SECTION("all signatures fit the bound and are normalized") {
        std::set<std::string> seen;
        for (const SurfaceSpec& f : sigs) {
            REQUIRE(arc::dimension(f) <= 6);
            REQUIRE(seen.insert(arc::format_surface(f)).second);
            for (std::size_t i = 1; i < f.cusps.size(); ++i)
                REQUIRE(f.cusps[i - 1] >= f.cusps[i]);
        }
    }

    SECTION("known members are present") {
        auto contains = [&sigs](const SurfaceSpec& f) {
            for (const SurfaceSpec& g : sigs)
                if (f == g) return true;
            return false;
        };
        REQUIRE(contains({0, 0, {4}}));
        REQUIRE(contains({0, 2, {1, 1}}));
        REQUIRE(contains({1, 0, {1}}));
        REQUIRE(contains({0, 0, {2, 1}}));
        REQUIRE_FALSE(contains({0, 0, {1, 2}}));
    }

    SECTION("the twice-punctured annulus is the lone non-sphere manifold") {
        std::set<std::string> nsm;
        for (const SurfaceSpec& f : sigs)
            if (arc::classify(f).kind == Verdict::NonSphereManifold)
                nsm.insert(arc::format_surface(f));
        REQUIRE(nsm == std::set<std::string>{"F g=0 s=2 d=1,1"});
    }

    SECTION("growing the bound only adds signatures") {
        std::vector<SurfaceSpec> more = arc::enumerate_signatures(8);
        REQUIRE(more.size() > sigs.size());
    }
}
