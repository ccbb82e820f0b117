#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "complex.hpp"

namespace arc {

using ordered_json = nlohmann::ordered_json;

inline ordered_json complex_to_json(const CellComplex& input) {
    CellComplex k = input;
    k.canonicalize();
    ordered_json cells = ordered_json::array();
    for (const Cell& c : k.cells) {
        ordered_json jc;
        jc["id"] = c.id;
        jc["dim"] = c.dim;
        ordered_json bnd = ordered_json::array();
        for (const auto& [face, coeff] : c.boundary) bnd.push_back({face, coeff});
        jc["boundary"] = bnd;
        if (c.h1_rank) jc["meta"] = ordered_json{{"h1_rank", *c.h1_rank}};
        cells.push_back(jc);
    }
    ordered_json j;
    j["name"] = k.name;
    j["cells"] = cells;
    return j;
}

inline std::string complex_to_string(const CellComplex& k) {
    return complex_to_json(k).dump(2) + "\n";
}

inline CellComplex complex_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("name") || !j.contains("cells"))
        throw std::invalid_argument("complex JSON must be an object with 'name' and 'cells'");
    if (!j["name"].is_string()) throw std::invalid_argument("'name' must be a string");
    if (!j["cells"].is_array()) throw std::invalid_argument("'cells' must be an array");
    CellComplex k;
    k.name = j["name"].get<std::string>();
    for (const auto& jc : j["cells"]) {
        if (!jc.is_object() || !jc.contains("id") || !jc.contains("dim") ||
            !jc.contains("boundary"))
            throw std::invalid_argument("each cell needs 'id', 'dim' and 'boundary'");
        if (!jc["id"].is_string() || !jc["dim"].is_number_integer() || !jc["boundary"].is_array())
            throw std::invalid_argument("cell fields have the wrong types");
        Cell c;
        c.id = jc["id"].get<std::string>();
        c.dim = jc["dim"].get<int>();
        for (const auto& jb : jc["boundary"]) {
            if (!jb.is_array() || jb.size() != 2 || !jb[0].is_string() ||
                !jb[1].is_number_integer())
                throw std::invalid_argument("boundary entries must be [face_id, coefficient]");
            c.boundary.emplace_back(jb[0].get<std::string>(), jb[1].get<long long>());
        }
        if (jc.contains("meta")) {
            const auto& jm = jc["meta"];
            if (!jm.is_object()) throw std::invalid_argument("'meta' must be an object");
            if (jm.contains("h1_rank")) {
                if (!jm["h1_rank"].is_number_integer())
                    throw std::invalid_argument("'h1_rank' must be an integer");
                c.h1_rank = jm["h1_rank"].get<long long>();
            }
        }
        k.cells.push_back(std::move(c));
    }
    k.canonicalize();
    return k;
}

inline CellComplex complex_from_string(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    return complex_from_json(j);
}

inline CellComplex read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return complex_from_string(buf.str());
}

inline void write_complex_file(const std::string& path, const CellComplex& k) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << complex_to_string(k);
}

}  // namespace arc
