#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arc {

/**
 * Signature of a bordered surface: genus g, puncture count s, and one
 * positive entry per boundary circle giving its number of distinguished
 * points.  Classification treats the distinguished-point vector as a
 * multiset; normalize() sorts it descending.
 */
struct SurfaceSpec {
    long long genus = 0;
    long long punctures = 0;
    std::vector<long long> cusps;

    long long boundary_count() const { return static_cast<long long>(cusps.size()); }
    long long cusp_total() const {
        return std::accumulate(cusps.begin(), cusps.end(), 0LL);
    }
    void normalize() { std::sort(cusps.begin(), cusps.end(), std::greater<>()); }

    bool operator==(const SurfaceSpec& o) const {
        return genus == o.genus && punctures == o.punctures && cusps == o.cusps;
    }
};

inline void validate_spec(const SurfaceSpec& f) {
    if (f.genus < 0) throw std::invalid_argument("negative genus");
    if (f.punctures < 0) throw std::invalid_argument("negative puncture count");
    if (f.cusps.empty()) throw std::invalid_argument("at least one boundary circle required");
    for (long long d : f.cusps)
        if (d < 1) throw std::invalid_argument("each boundary circle needs at least one distinguished point");
}

inline long long dimension(const SurfaceSpec& f) {
    return 6 * f.genus - 7 + 3 * f.boundary_count() + 2 * f.punctures + f.cusp_total();
}

// The arc complex is empty exactly for the unpunctured monogon, bigon and
// triangle, and for the once-punctured monogon.
inline bool has_essential_arc(const SurfaceSpec& f) {
    if (f.genus == 0 && f.punctures == 0 && f.boundary_count() == 1 && f.cusps[0] <= 3)
        return false;
    if (f.genus == 0 && f.punctures == 1 && f.boundary_count() == 1 && f.cusps[0] == 1)
        return false;
    return true;
}

enum class Verdict { EmptyComplex, Spherical, NonSphereManifold, NonManifold };

struct SphericityVerdict {
    Verdict kind = Verdict::EmptyComplex;
    long long dimension = -1;
};

inline bool all_cusps_single(const SurfaceSpec& f) {
    for (long long d : f.cusps)
        if (d != 1) return false;
    return true;
}

inline bool is_type1(const SurfaceSpec& f) {
    if (!all_cusps_single(f)) return false;
    long long g = f.genus, r = f.boundary_count(), s = f.punctures;
    return (g == 0 && r == 4 && s == 0) || (g == 0 && r == 3 && s == 1) ||
           (g == 0 && r == 2 && s == 2) || (g == 1 && r == 2 && s == 0);
}

inline SphericityVerdict classify(const SurfaceSpec& f) {
    validate_spec(f);
    if (!has_essential_arc(f)) return {Verdict::EmptyComplex, -1};
    long long g = f.genus, r = f.boundary_count(), s = f.punctures, n = dimension(f);
    bool spherical = (g == 0 && r == 1) || (g == 0 && r == 2 && s == 0) ||
                     (g == 0 && r + s == 3) || (g == 1 && r == 1 && s <= 1);
    if (spherical) return {Verdict::Spherical, n};
    if (is_type1(f)) return {Verdict::NonSphereManifold, n};
    return {Verdict::NonManifold, n};
}

enum class Type1Id { F040, F031, F022, F120 };

inline SurfaceSpec type1_spec(Type1Id t) {
    switch (t) {
        case Type1Id::F040: return {0, 0, {1, 1, 1, 1}};
        case Type1Id::F031: return {0, 1, {1, 1, 1}};
        case Type1Id::F022: return {0, 2, {1, 1}};
        case Type1Id::F120: return {1, 0, {1, 1}};
    }
    throw std::logic_error("unreachable");
}

inline std::string type1_name(Type1Id t) {
    switch (t) {
        case Type1Id::F040: return "F040";
        case Type1Id::F031: return "F031";
        case Type1Id::F022: return "F022";
        case Type1Id::F120: return "F120";
    }
    throw std::logic_error("unreachable");
}

/**
 * Witness for the non-manifold verdict: a four-holed sphere, three-holed
 * once-punctured sphere, twice-punctured annulus, or two-holed torus
 * embedded in the surface.  Present exactly when classify says NonManifold.
 */
inline std::optional<Type1Id> contains_type1(const SurfaceSpec& f) {
    if (classify(f).kind != Verdict::NonManifold) return std::nullopt;
    long long g = f.genus, r = f.boundary_count(), s = f.punctures;
    if (g >= 3 || (g == 2 && r > 1) || (g == 1 && r > 2)) return Type1Id::F040;
    if (g == 2 && s > 1) return Type1Id::F031;
    if (g == 1 && s > 1) return Type1Id::F022;
    if (g == 2) return Type1Id::F120;
    if (g == 0) {
        if (r >= 4) return Type1Id::F040;
        if (r == 3) return Type1Id::F031;
        return Type1Id::F022;
    }
    return Type1Id::F120;
}

inline long long quasi_triangulation_arc_count(const SurfaceSpec& f) {
    validate_spec(f);
    if (!has_essential_arc(f))
        throw std::invalid_argument("surface has no essential arc");
    return dimension(f) + 1;
}

// first-homology rank of an orientable surface with boundary
inline long long h1_rank(long long genus, long long boundary_count, long long punctures) {
    if (genus < 0 || boundary_count < 1 || punctures < 0)
        throw std::invalid_argument("invalid surface data");
    return 2 * genus + boundary_count + punctures - 1;
}

inline std::string format_surface(const SurfaceSpec& f) {
    std::string out = "F g=" + std::to_string(f.genus) + " s=" + std::to_string(f.punctures) + " d=";
    for (std::size_t i = 0; i < f.cusps.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(f.cusps[i]);
    }
    return out;
}

/**
 * Parses the textual signature form `F g=<int> s=<int> d=<int>[,<int>...]`.
 * Whitespace is ignored everywhere else; the field order is fixed.
 */
inline SurfaceSpec parse_surface(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);

    auto fail = [&text]() -> SurfaceSpec {
        throw std::invalid_argument("cannot parse surface signature '" + text + "'");
    };
    auto read_int = [&s, &fail](std::size_t& pos) {
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail();
        return std::stoll(s.substr(start, pos - start));
    };

    std::size_t pos = 0;
    auto expect = [&s, &pos, &fail](const std::string& tok) {
        if (s.compare(pos, tok.size(), tok) != 0) fail();
        pos += tok.size();
    };

    SurfaceSpec f;
    expect("Fg=");
    f.genus = read_int(pos);
    expect("s=");
    f.punctures = read_int(pos);
    expect("d=");
    f.cusps.push_back(read_int(pos));
    while (pos < s.size() && s[pos] == ',') {
        ++pos;
        f.cusps.push_back(read_int(pos));
    }
    if (pos != s.size()) fail();
    validate_spec(f);
    return f;
}

/**
 * All signatures with arc-complex dimension at most max_n, one
 * representative per multiset of distinguished-point counts (sorted
 * descending), in a fixed deterministic order.
 */
inline std::vector<SurfaceSpec> enumerate_signatures(long long max_n) {
    std::vector<SurfaceSpec> out;
    for (long long g = 0; 6 * g - 7 + 3 + 1 <= max_n; ++g)
        for (long long r = 1; 6 * g - 7 + 3 * r + r <= max_n; ++r)
            for (long long s = 0; 6 * g - 7 + 3 * r + 2 * s + r <= max_n; ++s) {
                long long base = 6 * g - 7 + 3 * r + 2 * s;
                // partitions of the distinguished-point total into exactly r
                // parts >= 1, descending
                std::vector<long long> parts;
                std::function<void(long long, long long, long long)> rec =
                    [&](long long remaining, long long slots, long long cap) {
                        if (slots == 0) {
                            if (remaining == 0) {
                                SurfaceSpec f{g, s, parts};
                                if (base + f.cusp_total() <= max_n) out.push_back(f);
                            }
                            return;
                        }
                        for (long long d = std::min(cap, remaining - (slots - 1)); d >= 1; --d) {
                            parts.push_back(d);
                            rec(remaining - d, slots - 1, d);
                            parts.pop_back();
                        }
                    };
                for (long long total = r; base + total <= max_n; ++total)
                    rec(total, r, total);
            }
    return out;
}

}  // namespace arc
