#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "complex.hpp"
#include "join.hpp"
#include "rational.hpp"

namespace arc {

/**
 * Dehn-Thurston coordinates on a pair of pants: per boundary circle an
 * intersection weight m_i >= 0 and a twisting number t_i, all exact
 * rationals.  Integral mode additionally demands integer entries with even
 * total weight.
 */
struct DTCoords {
    std::array<Rational, 3> m{};
    std::array<Rational, 3> t{};
    bool integral = false;
};

enum class DTError { ZeroTotalWeight, TwistWithoutIntersection, ParityViolation };

inline std::string dt_error_name(DTError e) {
    switch (e) {
        case DTError::ZeroTotalWeight: return "ZeroTotalWeight";
        case DTError::TwistWithoutIntersection: return "TwistWithoutIntersection";
        case DTError::ParityViolation: return "ParityViolation";
    }
    throw std::logic_error("unreachable");
}

inline std::optional<DTError> validate_dt(const DTCoords& c) {
    for (int i = 0; i < 3; ++i)
        if (c.m[static_cast<std::size_t>(i)] < 0)
            throw std::invalid_argument("negative intersection weight");
    Rational total = c.m[0] + c.m[1] + c.m[2];
    if (total == 0) return DTError::ZeroTotalWeight;
    for (int i = 0; i < 3; ++i)
        if (c.m[static_cast<std::size_t>(i)] == 0 && c.t[static_cast<std::size_t>(i)] != 0)
            return DTError::TwistWithoutIntersection;
    if (c.integral) {
        for (int i = 0; i < 3; ++i)
            if (rat_den(c.m[static_cast<std::size_t>(i)]) != 1 ||
                rat_den(c.t[static_cast<std::size_t>(i)]) != 1)
                return DTError::ParityViolation;
        if (rat_num(total) % 2 != 0) return DTError::ParityViolation;
    }
    return std::nullopt;
}

inline void require_valid(const DTCoords& c) {
    if (auto err = validate_dt(c))
        throw std::runtime_error("invalid coordinates: " + dt_error_name(*err));
}

/**
 * Canonical representative under the boundary Dehn twists t_i -> t_i + m_i:
 * each twist is brought into the window (-m_i/2, m_i/2], and k_i records how
 * many twists were removed.
 */
struct NormalizedDT {
    DTCoords coords;
    std::array<Int, 3> k{};
};

inline NormalizedDT normalize_dt(const DTCoords& c) {
    require_valid(c);
    NormalizedDT out{c, {}};
    for (std::size_t i = 0; i < 3; ++i) {
        const Rational& m = c.m[i];
        if (m == 0) continue;
        Int k = rat_ceil(c.t[i] / m - Rational(1, 2));
        out.coords.t[i] = c.t[i] - Rational(k) * m;
        out.k[i] = k;
    }
    return out;
}

/**
 * Arc-type weights in the pants determined by the intersection weights:
 * x_ij arcs connect boundary i to boundary j, and l_i arcs loop from
 * boundary i around the opposite cuff.  Unique non-negative solution of
 * m_i = sum_j x_ij + 2 l_i.
 */
struct PantsArcTypes {
    Rational x12, x13, x23;
    Rational l1, l2, l3;
};

inline PantsArcTypes arc_types_from_m(const Rational& m1, const Rational& m2, const Rational& m3,
                                      bool integral = false) {
    require_valid(DTCoords{{m1, m2, m3}, {}, integral});
    PantsArcTypes a{};
    if (m1 > m2 + m3) {
        a.x12 = m2;
        a.x13 = m3;
        a.l1 = (m1 - m2 - m3) / 2;
    } else if (m2 > m1 + m3) {
        a.x12 = m1;
        a.x23 = m3;
        a.l2 = (m2 - m1 - m3) / 2;
    } else if (m3 > m1 + m2) {
        a.x13 = m1;
        a.x23 = m2;
        a.l3 = (m3 - m1 - m2) / 2;
    } else {
        a.x12 = (m1 + m2 - m3) / 2;
        a.x13 = (m1 + m3 - m2) / 2;
        a.x23 = (m2 + m3 - m1) / 2;
    }
    return a;
}

// twists each leg by a fraction theta_i of its intersection weight
inline DTCoords torus_act(const DTCoords& c, const std::array<Rational, 3>& theta) {
    require_valid(c);
    DTCoords out = c;
    for (std::size_t i = 0; i < 3; ++i) out.t[i] = c.t[i] + theta[i] * c.m[i];
    return out;
}

/**
 * Chart on the join model S1*S1*S1: per circle a magnitude L_i = m_i and a
 * circle coordinate s_i in [0,1), with s_i = 0 on the glued twist rays.
 */
struct JoinPoint {
    std::array<Rational, 3> L{};
    std::array<Rational, 3> s{};
};

inline std::optional<DTError> validate_join_point(const JoinPoint& j) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (j.L[i] < 0) throw std::invalid_argument("negative magnitude");
        if (j.s[i] < 0 || j.s[i] >= 1)
            throw std::invalid_argument("circle coordinate outside [0,1)");
        if (j.L[i] == 0 && j.s[i] != 0) return DTError::TwistWithoutIntersection;
    }
    if (j.L[0] + j.L[1] + j.L[2] == 0) return DTError::ZeroTotalWeight;
    return std::nullopt;
}

inline JoinPoint to_join_point(const DTCoords& c) {
    require_valid(c);
    JoinPoint j;
    for (std::size_t i = 0; i < 3; ++i) {
        j.L[i] = c.m[i];
        if (c.m[i] != 0) j.s[i] = rat_mod1(c.t[i] / c.m[i] + Rational(1, 2));
    }
    return j;
}

inline DTCoords from_join_point(const JoinPoint& j, bool integral = false) {
    if (auto err = validate_join_point(j))
        throw std::runtime_error("invalid join point: " + dt_error_name(*err));
    DTCoords c;
    c.integral = integral;
    for (std::size_t i = 0; i < 3; ++i) {
        c.m[i] = j.L[i];
        if (j.L[i] == 0)
            c.t[i] = 0;
        else if (j.s[i] == 0)
            c.t[i] = j.L[i] / 2;
        else
            c.t[i] = j.L[i] * (j.s[i] - Rational(1, 2));
    }
    return c;
}

// join of three one-vertex circles
inline CellComplex pants_complex() {
    CellComplex k = join(join(make_circle(1, "p1."), make_circle(1, "p2.")), make_circle(1, "p3."));
    k.name = "pants";
    return k;
}

/**
 * Subcomplex of arc families missing the boundary circles named in
 * zero_set: the join of the remaining circles.
 */
inline CellComplex pants_subcomplex(const std::set<int>& zero_set) {
    for (int i : zero_set)
        if (i < 1 || i > 3) throw std::invalid_argument("boundary index out of range");
    if (zero_set.size() >= 3)
        throw std::invalid_argument("at least one boundary circle must remain");
    CellComplex k;
    for (int i = 1; i <= 3; ++i) {
        if (zero_set.count(i)) continue;
        CellComplex circle = make_circle(1, "p" + std::to_string(i) + ".");
        k = k.empty() ? circle : join(k, circle);
    }
    k.name = "pants-sub";
    return k;
}

inline std::string format_dt(const DTCoords& c) {
    std::string out = "m=";
    for (std::size_t i = 0; i < 3; ++i) {
        if (i) out += ",";
        out += format_rational(c.m[i]);
    }
    out += " t=";
    for (std::size_t i = 0; i < 3; ++i) {
        if (i) out += ",";
        out += format_rational(c.t[i]);
    }
    return out;
}

/**
 * Parses the text form `m1,m2,m3;t1,t2,t3` with rational entries.  The twist
 * block may be omitted, in which case all twists are zero.
 */
inline DTCoords parse_dt(const std::string& text, bool integral = false) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    DTCoords c;
    c.integral = integral;

    auto split3 = [](const std::string& part) {
        std::array<Rational, 3> vals;
        std::size_t pos = 0;
        for (int i = 0; i < 3; ++i) {
            std::size_t comma = part.find(',', pos);
            std::string tok = comma == std::string::npos ? part.substr(pos)
                                                         : part.substr(pos, comma - pos);
            if (tok.empty() || (comma == std::string::npos && i < 2) ||
                (comma != std::string::npos && i == 2))
                throw std::invalid_argument("expected three comma-separated values");
            vals[static_cast<std::size_t>(i)] = parse_rational(tok);
            pos = comma == std::string::npos ? part.size() : comma + 1;
        }
        return vals;
    };

    std::size_t semi = s.find(';');
    c.m = split3(semi == std::string::npos ? s : s.substr(0, semi));
    if (semi != std::string::npos) c.t = split3(s.substr(semi + 1));
    return c;
}

}  // namespace arc
