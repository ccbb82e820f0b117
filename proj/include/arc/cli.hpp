#pragma once

#include <cctype>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "json_io.hpp"
#include "verify.hpp"

namespace arc {

struct CliOptions {
    bool json = false;
    bool homology_flag = false;
    bool integral = false;
    int cap = 9;
    unsigned seed = 12345;
    std::vector<std::string> positional;
};

namespace cli_detail {

inline long long parse_int(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(text, &used);
    } catch (...) {
        throw std::invalid_argument("expected an integer for " + what + ", got '" + text + "'");
    }
    if (used != text.size())
        throw std::invalid_argument("expected an integer for " + what + ", got '" + text + "'");
    return v;
}

inline CliOptions parse_options(const std::vector<std::string>& args, std::size_t start) {
    CliOptions o;
    for (std::size_t i = start; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--json") {
            o.json = true;
        } else if (a == "--homology") {
            o.homology_flag = true;
        } else if (a == "--integral") {
            o.integral = true;
        } else if (a == "--cap" || a == "--seed") {
            if (i + 1 >= args.size()) throw std::invalid_argument(a + " needs a value");
            long long v = parse_int(args[++i], a);
            if (a == "--cap")
                o.cap = static_cast<int>(v);
            else
                o.seed = static_cast<unsigned>(v);
        } else if (a.rfind("--", 0) == 0) {
            throw std::invalid_argument("unknown flag '" + a + "'");
        } else {
            o.positional.push_back(a);
        }
    }
    return o;
}

inline void need_args(const CliOptions& o, std::size_t n, const std::string& usage) {
    if (o.positional.size() != n) throw std::invalid_argument("usage: " + usage);
}

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::EmptyComplex: return "EmptyComplex";
        case Verdict::Spherical: return "Spherical";
        case Verdict::NonSphereManifold: return "NonSphereManifold";
        case Verdict::NonManifold: return "NonManifold";
    }
    throw std::logic_error("unreachable");
}

inline std::string summary_line(const CellComplex& k) {
    if (k.empty()) return k.name + " empty";
    std::string s = k.name + " dim=" + std::to_string(k.dimension()) + " f=(";
    std::vector<long> f = k.f_vector();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f[i]);
    }
    return s + ") chi=" + std::to_string(euler_characteristic(k));
}

// a complex argument is a catalog name, polygon<n>, or a JSON file path
inline CellComplex resolve_complex(const std::string& src, int cap) {
    for (const std::string& name : catalog_names())
        if (src == name) return build_catalog(src).complex;
    if (src.rfind("polygon", 0) == 0 && src.size() > 7) {
        std::string digits = src.substr(7);
        bool numeric = true;
        for (char ch : digits)
            if (!std::isdigit(static_cast<unsigned char>(ch))) numeric = false;
        if (numeric) return build_polygon_complex(static_cast<int>(parse_int(digits, "n")), cap);
    }
    return read_complex_file(src);
}

inline ordered_json homology_to_json(const HomologyResult& h) {
    ordered_json j;
    j["betti"] = h.betti;
    ordered_json tors = ordered_json::array();
    for (const auto& t : h.torsion) {
        ordered_json dim = ordered_json::array();
        for (const Int& v : t) dim.push_back(v.str());
        tors.push_back(dim);
    }
    j["torsion"] = tors;
    return j;
}

inline ordered_json rationals_to_json(const std::array<Rational, 3>& v) {
    ordered_json j = ordered_json::array();
    for (const Rational& x : v) j.push_back(format_rational(x));
    return j;
}

inline std::string rationals_to_text(const std::array<Rational, 3>& v) {
    std::string s;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i) s += ",";
        s += format_rational(v[i]);
    }
    return s;
}

inline const std::string usage_text =
    "usage: arctool <verb> [arguments] [flags]\n"
    "verbs:\n"
    "  classify \"F g=<g> s=<s> d=<d1>[,<d2>...]\"   sphericity verdict and dimension\n"
    "  polygon <n> [--homology]                    chord complex of the n-gon\n"
    "  catalog list | build <name> | verify <name|all>\n"
    "  dt validate|normalize|arcs|tojoin|fromjoin \"<m1,m2,m3[;t1,t2,t3]>\"\n"
    "  dt act \"<coords>\" \"<th1,th2,th3>\"\n"
    "  homology <source>                           integral homology\n"
    "  join <source> <source>                      join of two complexes\n"
    "  suspend <source>                            suspension\n"
    "  subdivide <source>                          barycentric subdivision\n"
    "  split <source>                              rank-split of the boundary operator\n"
    "  verify-all                                  full acceptance suite\n"
    "flags: --json, --cap <n>, --seed <n>, --integral\n"
    "a <source> is a catalog name, polygon<n>, or a path to a complex JSON file\n";

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;
    try {
        if (args.empty()) {
            err << usage_text;
            return 2;
        }
        const std::string& verb = args[0];
        CliOptions o = parse_options(args, 1);

        if (verb == "classify") {
            need_args(o, 1, "classify \"<signature>\"");
            SphericityVerdict v = classify(parse_surface(o.positional[0]));
            if (o.json) {
                ordered_json j;
                j["kind"] = verdict_name(v.kind);
                j["dimension"] = v.dimension;
                out << j.dump(2) << "\n";
            } else if (v.kind == Verdict::EmptyComplex) {
                out << "EmptyComplex\n";
            } else {
                out << verdict_name(v.kind) << " dim=" << v.dimension << "\n";
            }
            return 0;
        }

        if (verb == "polygon") {
            need_args(o, 1, "polygon <n>");
            int n = static_cast<int>(parse_int(o.positional[0], "n"));
            CellComplex k = build_polygon_complex(n, o.cap);
            if (o.homology_flag) {
                HomologyResult h = homology(k);
                if (o.json)
                    out << homology_to_json(h).dump(2) << "\n";
                else
                    out << format_homology(h) << "\n";
            } else if (o.json) {
                out << complex_to_string(k);
            } else {
                out << summary_line(k) << "\n";
            }
            return 0;
        }

        if (verb == "catalog") {
            if (o.positional.empty())
                throw std::invalid_argument("usage: catalog list | build <name> | verify <name|all>");
            const std::string& sub = o.positional[0];
            if (sub == "list") {
                need_args(o, 1, "catalog list");
                if (o.json) {
                    ordered_json arr = ordered_json::array();
                    for (const std::string& name : catalog_names()) {
                        CatalogEntry e = build_catalog(name);
                        ordered_json j;
                        j["name"] = e.name;
                        j["surface"] = format_surface(e.surface);
                        j["dim"] = e.expected_dim;
                        j["verdict"] = verdict_name(classify(e.surface).kind);
                        j["note"] = e.note;
                        arr.push_back(j);
                    }
                    out << arr.dump(2) << "\n";
                } else {
                    for (const std::string& name : catalog_names()) {
                        CatalogEntry e = build_catalog(name);
                        out << e.name << "  " << format_surface(e.surface) << "  N="
                            << e.expected_dim << "  " << verdict_name(classify(e.surface).kind)
                            << "\n";
                    }
                }
                return 0;
            }
            if (sub == "build") {
                need_args(o, 2, "catalog build <name>");
                out << complex_to_string(build_catalog(o.positional[1]).complex);
                return 0;
            }
            if (sub == "verify") {
                need_args(o, 2, "catalog verify <name|all>");
                std::vector<std::string> names;
                if (o.positional[1] == "all")
                    names = catalog_names();
                else
                    names.push_back(o.positional[1]);
                bool ok = true;
                for (const std::string& name : names) {
                    std::vector<std::string> problems = verify_catalog_entry(build_catalog(name));
                    if (problems.empty()) {
                        out << "ok " << name << "\n";
                    } else {
                        ok = false;
                        for (const std::string& p : problems) out << "FAIL " << name << ": " << p << "\n";
                    }
                }
                return ok ? 0 : 1;
            }
            throw std::invalid_argument("unknown catalog subcommand '" + sub + "'");
        }

        if (verb == "dt") {
            if (o.positional.empty())
                throw std::invalid_argument(
                    "usage: dt validate|normalize|arcs|act|tojoin|fromjoin \"<coords>\"");
            const std::string& sub = o.positional[0];
            if (sub == "act")
                need_args(o, 3, "dt act \"<coords>\" \"<th1,th2,th3>\"");
            else
                need_args(o, 2, "dt " + sub + " \"<coords>\"");
            DTCoords c = parse_dt(o.positional[1], o.integral);

            if (sub == "validate") {
                auto verdict = validate_dt(c);
                if (o.json) {
                    ordered_json j;
                    j["ok"] = !verdict.has_value();
                    if (verdict) j["error"] = dt_error_name(*verdict);
                    out << j.dump(2) << "\n";
                } else {
                    out << (verdict ? dt_error_name(*verdict) : "ok") << "\n";
                }
                return verdict ? 1 : 0;
            }
            if (sub == "normalize") {
                NormalizedDT n = normalize_dt(c);
                if (o.json) {
                    ordered_json j;
                    j["m"] = rationals_to_json(n.coords.m);
                    j["t"] = rationals_to_json(n.coords.t);
                    ordered_json k = ordered_json::array();
                    for (const Int& v : n.k) k.push_back(v.str());
                    j["k"] = k;
                    out << j.dump(2) << "\n";
                } else {
                    out << format_dt(n.coords) << " k=";
                    for (std::size_t i = 0; i < 3; ++i) {
                        if (i) out << ",";
                        out << n.k[i].str();
                    }
                    out << "\n";
                }
                return 0;
            }
            if (sub == "arcs") {
                PantsArcTypes a = arc_types_from_m(c.m[0], c.m[1], c.m[2], o.integral);
                if (o.json) {
                    ordered_json j;
                    j["x12"] = format_rational(a.x12);
                    j["x13"] = format_rational(a.x13);
                    j["x23"] = format_rational(a.x23);
                    j["l1"] = format_rational(a.l1);
                    j["l2"] = format_rational(a.l2);
                    j["l3"] = format_rational(a.l3);
                    out << j.dump(2) << "\n";
                } else {
                    out << "x12=" << format_rational(a.x12) << " x13=" << format_rational(a.x13)
                        << " x23=" << format_rational(a.x23) << " l1=" << format_rational(a.l1)
                        << " l2=" << format_rational(a.l2) << " l3=" << format_rational(a.l3)
                        << "\n";
                }
                return 0;
            }
            if (sub == "act") {
                std::array<Rational, 3> theta = parse_dt(o.positional[2]).m;
                DTCoords moved = torus_act(c, theta);
                if (o.json) {
                    ordered_json j;
                    j["m"] = rationals_to_json(moved.m);
                    j["t"] = rationals_to_json(moved.t);
                    out << j.dump(2) << "\n";
                } else {
                    out << format_dt(moved) << "\n";
                }
                return 0;
            }
            if (sub == "tojoin") {
                JoinPoint jp = to_join_point(c);
                if (o.json) {
                    ordered_json j;
                    j["L"] = rationals_to_json(jp.L);
                    j["s"] = rationals_to_json(jp.s);
                    out << j.dump(2) << "\n";
                } else {
                    out << "L=" << rationals_to_text(jp.L) << " s=" << rationals_to_text(jp.s)
                        << "\n";
                }
                return 0;
            }
            if (sub == "fromjoin") {
                DTCoords parsed = parse_dt(o.positional[1]);
                JoinPoint jp{parsed.m, parsed.t};
                DTCoords back = from_join_point(jp, o.integral);
                if (o.json) {
                    ordered_json j;
                    j["m"] = rationals_to_json(back.m);
                    j["t"] = rationals_to_json(back.t);
                    out << j.dump(2) << "\n";
                } else {
                    out << format_dt(back) << "\n";
                }
                return 0;
            }
            throw std::invalid_argument("unknown dt subcommand '" + sub + "'");
        }

        if (verb == "homology") {
            need_args(o, 1, "homology <source>");
            CellComplex k = resolve_complex(o.positional[0], o.cap);
            std::vector<std::string> problems = validate_complex(k);
            if (!problems.empty()) {
                for (const std::string& p : problems) err << "invalid complex: " << p << "\n";
                return 1;
            }
            HomologyResult h = homology(k);
            if (o.json)
                out << homology_to_json(h).dump(2) << "\n";
            else
                out << format_homology(h) << "\n";
            return 0;
        }

        if (verb == "join" || verb == "suspend" || verb == "subdivide" || verb == "split") {
            if (verb == "join")
                need_args(o, 2, "join <source> <source>");
            else
                need_args(o, 1, verb + " <source>");
            CellComplex k = resolve_complex(o.positional[0], o.cap);

            if (verb == "join") {
                CellComplex result = join(k, resolve_complex(o.positional[1], o.cap));
                out << (o.json ? complex_to_string(result) : summary_line(result) + "\n");
                return 0;
            }
            if (verb == "suspend") {
                CellComplex result = suspension(k);
                out << (o.json ? complex_to_string(result) : summary_line(result) + "\n");
                return 0;
            }
            if (verb == "subdivide") {
                auto sc = recover_simplicial(k);
                if (!sc) throw std::runtime_error("complex '" + k.name + "' is not simplicial");
                CellComplex result =
                    to_cell_complex(barycentric_subdivision(*sc), "sd(" + k.name + ")");
                out << (o.json ? complex_to_string(result) : summary_line(result) + "\n");
                return 0;
            }
            BigradedSplit s = split_boundary(k);
            std::vector<std::string> problems = check_split_identities(k, s);
            if (!problems.empty()) {
                for (const std::string& p : problems) err << p << "\n";
                return 1;
            }
            if (o.json) {
                ordered_json j;
                j["name"] = k.name;
                ordered_json grading;
                for (const auto& [id, uv] : s.bigrading)
                    grading[id] = ordered_json::array({uv.first, uv.second});
                j["bigrading"] = grading;
                ordered_json d1 = ordered_json::array(), d2 = ordered_json::array();
                for (std::size_t p = 1; p < s.d1.size(); ++p) {
                    d1.push_back(s.d1[p].nnz());
                    d2.push_back(s.d2[p].nnz());
                }
                j["d1_nnz"] = d1;
                j["d2_nnz"] = d2;
                j["identities"] = "ok";
                out << j.dump(2) << "\n";
            } else {
                out << "split of " << k.name << ": cells=" << k.cells.size() << "\n";
                for (int p = 1; p <= k.dimension(); ++p)
                    out << "dim " << p << ": d1 nnz=" << s.d1[static_cast<std::size_t>(p)].nnz()
                        << " d2 nnz=" << s.d2[static_cast<std::size_t>(p)].nnz() << "\n";
                out << "identities ok\n";
            }
            return 0;
        }

        if (verb == "verify-all") {
            need_args(o, 0, "verify-all [--seed <n>]");
            std::vector<CheckResult> rows = run_all_checks(o.seed);
            out << format_check_table(rows);
            for (const CheckResult& r : rows)
                err << "# criterion " << r.index << ": " << r.seconds << "s\n";
            return all_passed(rows) ? 0 : 1;
        }

        err << usage_text;
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace arc
