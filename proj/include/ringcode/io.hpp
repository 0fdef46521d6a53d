#pragma once

// File formats and report serialization.
//   code file: {"ring": <spec>, "n": <int>, "words": [[indices]...]}
//   weight table: CSV "index,label,weight" with rationals rendered as p/q
//   reports: JSON with stable key order; rationals as {"num","den"} strings
// Duplicate words in a code file are dropped with a warning flag, not an
// error.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "geometry.hpp"
#include "rational.hpp"
#include "ring.hpp"
#include "search.hpp"
#include "verify.hpp"
#include "weights.hpp"

namespace ringcode {

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rat& r) {
    return Json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

// ---- code files ----

inline Json code_to_json(const Code& code) {
    Json j;
    j["ring"] = code.ring->spec_text();
    j["n"] = code.n;
    Json words = Json::array();
    for (const Word& w : code.words) {
        Json word = Json::array();
        for (std::uint16_t x : w) word.push_back(x);
        words.push_back(std::move(word));
    }
    j["words"] = std::move(words);
    return j;
}

struct LoadedCode {
    FiniteRing ring;
    Code code;
    bool had_duplicates = false;
};

inline LoadedCode code_from_json(const Json& j, std::size_t order_cap = kDefaultOrderCap) {
    if (!j.contains("ring") || !j.contains("n") || !j.contains("words"))
        throw ParseError("code file needs fields ring, n, words");
    FiniteRing ring = FiniteRing::from_spec(j.at("ring").get<std::string>(), order_cap);
    const std::size_t n = j.at("n").get<std::size_t>();
    std::vector<Word> words;
    for (const auto& jw : j.at("words")) {
        Word w;
        for (const auto& jx : jw) {
            const std::uint64_t x = jx.get<std::uint64_t>();
            if (x >= ring.order()) throw ParseError("word index out of range in code file");
            w.push_back(static_cast<std::uint16_t>(x));
        }
        words.push_back(std::move(w));
    }
    bool dup = false;
    Code code = Code::make(ring, n, std::move(words), &dup);
    // Code keeps a pointer to the ring: re-point it at the copy we return.
    LoadedCode out{std::move(ring), std::move(code), dup};
    out.code.ring = &out.ring;
    return out;
}

inline void save_code_file(const Code& code, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << code_to_json(code).dump(2) << '\n';
}

inline LoadedCode load_code_file(const std::string& path,
                                 std::size_t order_cap = kDefaultOrderCap) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read " + path);
    Json j = Json::parse(f);
    return code_from_json(j, order_cap);
}

// ---- weight tables ----

inline std::string weight_table_csv(const WeightFunction& w) {
    std::ostringstream out;
    out << "index,label,weight\n";
    const FiniteRing& ring = w.ring();
    for (std::size_t x = 0; x < ring.order(); ++x)
        out << x << ',' << ring.label(static_cast<std::uint16_t>(x)) << ','
            << rat_to_string(w.weight(static_cast<std::uint16_t>(x))) << '\n';
    return out.str();
}

/// Reads a table in the emitted CSV format; labels are informational and
/// rows may appear in any order, keyed by index.
inline WeightFunction weight_table_from_csv(const FiniteRing& ring, std::istream& in,
                                            std::string name = "custom") {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty weight table");
    std::vector<Rat> table(ring.order());
    std::vector<char> seen(ring.order(), 0);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t c1 = line.find(',');
        std::size_t c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
        if (c2 == std::string::npos) throw ParseError("bad weight table row: " + line);
        const std::size_t index = std::stoul(line.substr(0, c1));
        if (index >= ring.order()) throw ParseError("weight table index out of range");
        table[index] = parse_rational(line.substr(c2 + 1));
        seen[index] = 1;
    }
    for (char s : seen)
        if (!s) throw ParseError("weight table is missing rows");
    return WeightFunction::custom(ring, std::move(name), std::move(table));
}

// ---- reports ----

inline Json bound_report_json(const BoundReport& r) {
    Json j;
    j["name"] = r.name;
    Json params = Json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = std::move(params);
    j["applicable"] = r.applicable;
    j["reason"] = r.reason;
    j["value"] = r.value ? rational_json(*r.value) : Json(nullptr);
    j["integer_bound"] = r.integer_bound ? Json(r.integer_bound->str()) : Json(nullptr);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline Json check_report_json(const CheckReport& r) {
    Json j;
    j["name"] = r.name;
    Json params = Json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = std::move(params);
    j["applicable"] = r.applicable;
    j["reason"] = r.reason;
    if (r.applicable) {
        j["lhs"] = rational_json(r.lhs);
        j["mid"] = r.mid ? rational_json(*r.mid) : Json(nullptr);
        j["rhs"] = rational_json(r.rhs);
        j["status"] = r.pass ? "pass" : "violated";
    } else {
        j["status"] = "not-applicable";
    }
    return j;
}

/// Certification sidecar for a search result. Wall time is deliberately
/// omitted so identical runs emit identical bytes.
inline Json search_report_json(const SearchResult& r) {
    Json j;
    j["size"] = r.code.size();
    j["certified_optimal"] = r.certified_optimal;
    j["max_size_found"] = r.max_size_found;
    j["nodes_explored"] = r.nodes_explored;
    j["ordering"] = r.ordering;
    j["gv_guarantee"] = r.gv_guarantee ? Json(r.gv_guarantee->str()) : Json(nullptr);
    return j;
}

inline Json trial_summary_json(const TrialSummary& s) {
    Json j;
    j["name"] = s.name;
    j["trials"] = s.trials;
    j["checked"] = s.checked;
    j["passed"] = s.passed;
    j["violations"] = s.violations;
    j["skipped"] = s.skipped;
    j["first_violation"] = s.first_violation ? Json(*s.first_violation) : Json(nullptr);
    return j;
}

// ---- plain-text tables ----

/// Renders rows as an aligned table; the first row is the header.
inline std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return "";
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += "  ";
            line += row[i];
            if (i + 1 < row.size()) line.append(width[i] - row[i].size(), ' ');
        }
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace ringcode
