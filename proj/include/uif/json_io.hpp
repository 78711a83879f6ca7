#pragma once

// JSON boundary of the library.
//
// Family file format: a single JSON document with fields
//   n     ground-set size (integer)
//   sets  list of lists of integers, each inner list strictly increasing,
//         1-based
// Canonical emission orders sets by bit-vector value and is bit-exact:
// re-emitting a parsed canonical file reproduces it byte for byte.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "uif/bounds.hpp"
#include "uif/errors.hpp"
#include "uif/family.hpp"
#include "uif/matching.hpp"
#include "uif/search.hpp"
#include "uif/sunflower.hpp"

namespace uif {

inline nlohmann::json family_to_json(const Family& f) {
    nlohmann::json sets = nlohmann::json::array();
    for (std::size_t i = 0; i < f.size(); ++i) sets.push_back(f.member(i).elements());
    return nlohmann::json{{"n", f.n()}, {"sets", std::move(sets)}};
}

// Canonical bytes of a family file: compact JSON plus a trailing newline.
inline std::string emit_family(const Family& f) { return family_to_json(f).dump() + "\n"; }

inline Family family_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("sets"))
        throw FileFormatError("family file needs fields 'n' and 'sets'");
    if (!j["n"].is_number_integer()) throw FileFormatError("'n' must be an integer");
    const int n = j["n"].get<int>();
    if (!j["sets"].is_array()) throw FileFormatError("'sets' must be a list of lists");
    std::vector<std::vector<int>> sets;
    for (const auto& s : j["sets"]) {
        if (!s.is_array()) throw FileFormatError("'sets' must be a list of lists");
        std::vector<int> elems;
        for (const auto& e : s) {
            if (!e.is_number_integer()) throw FileFormatError("set elements must be integers");
            elems.push_back(e.get<int>());
        }
        for (std::size_t i = 1; i < elems.size(); ++i)
            if (elems[i] <= elems[i - 1])
                throw FileFormatError("set elements must be strictly increasing");
        sets.push_back(std::move(elems));
    }
    return make_family(n, sets);
}

inline Family parse_family(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FileFormatError(std::string("invalid JSON: ") + e.what());
    }
    return family_from_json(j);
}

inline Family load_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileFormatError("cannot open family file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_family(buf.str());
}

inline void save_family(const Family& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileFormatError("cannot write family file: " + path);
    out << emit_family(f);
}

inline nlohmann::json bound_to_json(const BoundReport& r) {
    nlohmann::json components = nlohmann::json::array();
    for (const auto& [label, v] : r.components)
        components.push_back(nlohmann::json{{"label", label}, {"value", v}});
    nlohmann::json j{{"case", r.case_tag}, {"components", std::move(components)}};
    if (r.exact()) {
        j["value"] = r.lower;
    } else {
        j["lower"] = r.lower;
        j["upper"] = nullptr;
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline nlohmann::json search_result_to_json(const SearchResult& r) {
    return nlohmann::json{{"optimum", r.optimum},
                          {"witness", family_to_json(r.witness)},
                          {"method", to_string(r.method)},
                          {"nodes", r.nodes},
                          {"elapsed_ms", r.elapsed_ms}};
}

inline nlohmann::json level_report_to_json(const LevelReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows)
        rows.push_back(nlohmann::json{{"i", row.i},
                                      {"j", row.j},
                                      {"pair_sum", row.pair_sum},
                                      {"bound", row.bound},
                                      {"pass", row.pass}});
    return nlohmann::json{{"rows", std::move(rows)}, {"all_pass", r.all_pass}};
}

inline nlohmann::json certificate_to_json(const MatchingCertificate& c) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [a, b] : c.pairs)
        pairs.push_back(nlohmann::json{{"lower", a.elements()}, {"upper", b.elements()}});
    return nlohmann::json{{"n", c.n},
                          {"i", c.i},
                          {"j", c.j},
                          {"pairs", std::move(pairs)},
                          {"covers_lower", c.covers_lower},
                          {"covers_upper", c.covers_upper}};
}

inline nlohmann::json sunflower_to_json(const Sunflower& s) {
    return nlohmann::json{{"center", s.center.elements()},
                          {"petals", family_to_json(s.petals)["sets"]}};
}

}  // namespace uif
