#pragma once

#include "equimetric/elliptic.hpp"
#include "equimetric/families.hpp"
#include "equimetric/oracle.hpp"

#include <json.hpp>

#include <fstream>
#include <string>

namespace equimetric {

// Rational values travel as exact "num/den" strings everywhere.

inline void to_json(nlohmann::json& j, const Rat& x) { j = x.str(); }
inline void from_json(const nlohmann::json& j, Rat& x) { x = Rat(j.get<std::string>()); }

inline void to_json(nlohmann::json& j, const SideTriple& s) {
    j = nlohmann::json::array({s[0].str(), s[1].str(), s[2].str()});
}

inline SideTriple side_triple_from_json(const nlohmann::json& j) {
    return SideTriple(Rat(j.at(0).get<std::string>()), Rat(j.at(1).get<std::string>()),
                      Rat(j.at(2).get<std::string>()));
}

inline void to_json(nlohmann::json& j, const Parallelogram& p) {
    j = nlohmann::json{{"base", p.base.str()}, {"offset", p.sx.str()}, {"height", p.sy.str()}};
    if (auto g = p.side())
        j["side"] = g->str();
}

inline void to_json(nlohmann::json& j, const Curve& c) {
    j = nlohmann::json{{"A", c.A.str()}, {"B", c.B.str()}};
}

inline void to_json(nlohmann::json& j, const CurvePoint& pt) {
    if (pt.is_infinity())
        j = nlohmann::json{{"inf", true}};
    else
        j = nlohmann::json{{"X", pt.x().str()}, {"Y", pt.y().str()}};
}

inline void to_json(nlohmann::json& j, const SolutionTuple& c) {
    nlohmann::json w = nlohmann::json::array();
    size_t nw = c.uses_w4() ? 4 : 3;
    for (size_t i = 0; i < nw; ++i)
        w.push_back(c.w[i].str());
    j = nlohmann::json{{"system", to_string(c.system)},
                       {"a", c.a.str()},
                       {"b", c.b.str()},
                       {"r", c.r.str()},
                       {"s", c.s.str()},
                       {"t", c.t.str()},
                       {"w", w},
                       {"alpha", c.alpha.str()},
                       {"beta", c.beta.str()}};
}

inline SolutionTuple tuple_from_json(const nlohmann::json& j) {
    SolutionTuple c;
    c.system = system_from_string(j.at("system").get<std::string>());
    c.a = Rat(j.at("a").get<std::string>());
    c.b = Rat(j.at("b").get<std::string>());
    c.r = Rat(j.at("r").get<std::string>());
    c.s = Rat(j.at("s").get<std::string>());
    c.t = Rat(j.at("t").get<std::string>());
    const auto& w = j.at("w");
    if (w.size() != (c.uses_w4() ? 4u : 3u))
        throw std::invalid_argument("tuple_from_json: wrong number of w entries for " +
                                    std::string(to_string(c.system)));
    for (size_t i = 0; i < w.size(); ++i)
        c.w[i] = Rat(w.at(i).get<std::string>());
    if (j.contains("alpha"))
        c.alpha = Rat(j.at("alpha").get<std::string>());
    if (j.contains("beta"))
        c.beta = Rat(j.at("beta").get<std::string>());
    return c;
}

/// The documented pair schema: sides plus the shared exact invariants.
inline nlohmann::json pair_json(const SideTriple& s1, const std::optional<SideTriple>& s2,
                                const std::optional<Parallelogram>& para) {
    nlohmann::json j;
    j["sides1"] = s1;
    if (s2)
        j["sides2"] = *s2;
    if (para)
        j["para2"] = *para;
    j["perimeter"] = s1.perimeter().str();
    j["area16sq"] = heron_area_sq16(s1).str();
    return j;
}

inline void to_json(nlohmann::json& j, const FamilyOutput& out) {
    j = out.tuple;  // tuple fields at top level
    j["family"] = out.family;
    nlohmann::json params;
    for (const auto& [name, value] : out.params)
        params[name] = value.str();
    j["params"] = params;
    j["pair"] = pair_json(out.sides1, out.sides2, out.parallelogram2);
    if (!out.notes.empty())
        j["notes"] = out.notes;
}

inline void to_json(nlohmann::json& j, const PairRecord& rec) {
    j = nlohmann::json{{"kind", to_string(rec.kind)},
                       {"perimeter", rec.perimeter.str()},
                       {"area16sq", rec.area16sq.str()},
                       {"similarity_class_distinct", rec.similarity_class_distinct}};
    j["sides1"] = rec.sides1;
    if (rec.sides2)
        j["sides2"] = *rec.sides2;
    if (rec.para2)
        j["para2"] = *rec.para2;
}

inline std::string pair_records_to_jsonl(const std::vector<PairRecord>& records) {
    std::string out;
    for (const auto& rec : records) {
        nlohmann::json j = rec;
        out += j.dump();
        out += '\n';
    }
    return out;
}

/// Writes one JSON object per line plus a separate .summary file with the
/// record count; the two never interleave.
inline void write_pair_records(const std::string& path, const std::vector<PairRecord>& records,
                               const SearchConfig& cfg) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open output file: " + path);
    f << pair_records_to_jsonl(records);
    if (!f)
        throw std::runtime_error("write failed: " + path);
    f.close();
    std::ofstream s(path + ".summary", std::ios::binary);
    if (!s)
        throw std::runtime_error("cannot open summary file: " + path + ".summary");
    nlohmann::json summary{{"count", records.size()},
                           {"kind", to_string(cfg.kind)},
                           {"max_perimeter", cfg.max_perimeter},
                           {"dedup", cfg.dedup}};
    s << summary.dump() << "\n";
    if (!s)
        throw std::runtime_error("write failed: " + path + ".summary");
}

}  // namespace equimetric
