#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ellhodge/basechange.hpp"
#include "ellhodge/chi_engine.hpp"
#include "ellhodge/mw_bound.hpp"

namespace ellhodge {

// Insertion-ordered so reports serialize with stable key order.
using Json = nlohmann::ordered_json;

namespace json_io {

// ---- parsing (config -> domain types); all failures are config errors ----

[[noreturn]] inline void bad(const std::string& where, const std::string& what) {
    throw config_error(where + ": " + what);
}

inline const Json& need(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) bad(where, std::string("missing key '") + key + "'");
    return j.at(key);
}

// exact integers only; floating-point literals are rejected to keep the
// arithmetic honest
inline std::int64_t parse_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
        bad(where, "expected an integer, got " + j.dump());
    return j.get<std::int64_t>();
}

inline std::int64_t parse_int(const Json& j, const char* key, const std::string& where,
                              std::optional<std::int64_t> fallback = std::nullopt) {
    if (!j.is_object() || !j.contains(key)) {
        if (fallback) return *fallback;
        bad(where, std::string("missing key '") + key + "'");
    }
    return parse_int(j.at(key), where + "." + key);
}

inline bool parse_bool(const Json& j, const char* key, const std::string& where, bool fallback) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    if (!j.at(key).is_boolean()) bad(where + "." + key, "expected a boolean");
    return j.at(key).get<bool>();
}

// "num/den", "-3", or an integer literal
inline Rat parse_rat(const Json& j, const std::string& where) {
    if (j.is_number_integer() || j.is_number_unsigned()) return Rat(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const config_error& e) {
            bad(where, e.what());
        }
    }
    bad(where, "expected a rational (\"num/den\" or integer), got " + j.dump());
}

// coefficient array, low degree first; a bare rational is a constant
inline Poly parse_poly(const Json& j, const std::string& where) {
    if (!j.is_array()) return Poly::constant(parse_rat(j, where));
    std::vector<Rat> c;
    c.reserve(j.size());
    for (size_t i = 0; i < j.size(); ++i)
        c.push_back(parse_rat(j.at(i), where + "[" + std::to_string(i) + "]"));
    return Poly(std::move(c));
}

inline WeierstrassSurface parse_surface(const Json& j, const std::string& where = "surface") {
    if (!j.is_object()) bad(where, "expected an object {n, A, B}");
    WeierstrassSurface s;
    s.n = static_cast<int>(parse_int(j, "n", where));
    s.A = parse_poly(need(j, "A", where), where + ".A");
    s.B = parse_poly(need(j, "B", where), where + ".B");
    return s;
}

// {"cyclic": m} | {"dihedral": m} | {"table": Cayley table,
//  "characters": per-element character values (numbers or [re, im] pairs)}
inline TablePtr parse_group(const Json& j, const std::string& where) {
    if (!j.is_object()) bad(where, "expected a group descriptor object");
    if (j.contains("cyclic"))
        return std::make_shared<const CharacterTable>(
            CharacterTable::cyclic(static_cast<int>(parse_int(j.at("cyclic"), where + ".cyclic"))));
    if (j.contains("dihedral"))
        return std::make_shared<const CharacterTable>(CharacterTable::dihedral(
            static_cast<int>(parse_int(j.at("dihedral"), where + ".dihedral"))));
    if (j.contains("table")) {
        const Json& tj = j.at("table");
        if (!tj.is_array()) bad(where + ".table", "expected a Cayley table (array of rows)");
        std::vector<std::vector<int>> table;
        for (size_t a = 0; a < tj.size(); ++a) {
            if (!tj.at(a).is_array()) bad(where + ".table", "ragged row");
            std::vector<int> row;
            for (size_t b = 0; b < tj.at(a).size(); ++b)
                row.push_back(static_cast<int>(parse_int(tj.at(a).at(b), where + ".table")));
            table.push_back(std::move(row));
        }
        FiniteGroup g(std::move(table));

        const Json& cj = need(j, "characters", where);
        if (!cj.is_array()) bad(where + ".characters", "expected an array of character rows");
        const auto entry = [&](const Json& v, const std::string& at) -> Cx {
            if (v.is_number()) return Cx(v.get<double>(), 0);
            if (v.is_array() && v.size() == 2 && v.at(0).is_number() && v.at(1).is_number())
                return Cx(v.at(0).get<double>(), v.at(1).get<double>());
            bad(at, "character value must be a number or [re, im]");
        };
        // rows are given per element; compress to per-class and insist the
        // values are actually constant on conjugacy classes
        std::vector<std::vector<Cx>> chi;
        for (size_t i = 0; i < cj.size(); ++i) {
            const std::string at = where + ".characters[" + std::to_string(i) + "]";
            const Json& row = cj.at(i);
            if (!row.is_array() || static_cast<int>(row.size()) != g.order())
                bad(at, "expected one value per group element");
            std::vector<Cx> per_class(g.num_classes());
            for (int c = 0; c < g.num_classes(); ++c)
                per_class[c] = entry(row.at(g.class_rep(c)), at);
            for (int x = 0; x < g.order(); ++x)
                if (std::abs(entry(row.at(x), at) - per_class[g.class_of(x)]) > kOrthoTol)
                    bad(at, "character is not constant on conjugacy classes");
            chi.push_back(std::move(per_class));
        }
        return std::make_shared<const CharacterTable>(CharacterTable(std::move(g), std::move(chi)));
    }
    bad(where, "group must be {\"cyclic\": m}, {\"dihedral\": m}, or {\"table\",\"characters\"}");
}

// rational, "inf", coefficient array (one Galois packet of points), or
// {"label": name} for a coordinate-free branch point
inline BranchLocation parse_branch_location(const Json& j, const std::string& where) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return InfinitePlace{};
        try {
            return parse_rational(s);
        } catch (const config_error& e) {
            bad(where, e.what());
        }
    }
    if (j.is_number_integer() || j.is_number_unsigned()) return parse_rat(j, where);
    if (j.is_array()) return parse_poly(j, where);
    if (j.is_object() && j.contains("label") && j.at("label").is_string())
        return j.at("label").get<std::string>();
    bad(where, "branch point must be a rational, \"inf\", a coefficient array, or {\"label\"}");
}

// {"superelliptic": {"m", "f"}} |
// {"abstract": {"genus", "group", "branch": [{"point", "inertia", "multiplicity"?}]}} |
// {"trivial": true | {"genus"?}}
inline GaloisCover parse_cover(const Json& j, const std::string& where = "cover") {
    if (!j.is_object()) bad(where, "expected a cover descriptor object");
    if (j.contains("superelliptic")) {
        const Json& sj = j.at("superelliptic");
        const std::string at = where + ".superelliptic";
        return GaloisCover::superelliptic(static_cast<int>(parse_int(sj, "m", at)),
                                          parse_poly(need(sj, "f", at), at + ".f"));
    }
    if (j.contains("abstract")) {
        const Json& aj = j.at("abstract");
        const std::string at = where + ".abstract";
        TablePtr table = parse_group(need(aj, "group", at), at + ".group");
        std::vector<BranchEntry> branches;
        if (aj.contains("branch")) {
            const Json& bj = aj.at("branch");
            if (!bj.is_array()) bad(at + ".branch", "expected an array of branch entries");
            for (size_t i = 0; i < bj.size(); ++i) {
                const std::string bw = at + ".branch[" + std::to_string(i) + "]";
                BranchEntry e;
                e.multiplicity = static_cast<int>(parse_int(bj.at(i), "multiplicity", bw, 1));
                e.location = parse_branch_location(need(bj.at(i), "point", bw), bw + ".point");
                e.inertia_gen = static_cast<int>(parse_int(bj.at(i), "inertia", bw));
                branches.push_back(std::move(e));
            }
        }
        return GaloisCover::abstract_cover(std::move(table),
                                           static_cast<int>(parse_int(aj, "genus", at, 0)),
                                           std::move(branches));
    }
    if (j.contains("trivial")) {
        const Json& tj = j.at("trivial");
        int genus = 0;
        if (tj.is_object()) genus = static_cast<int>(parse_int(tj, "genus", where + ".trivial", 0));
        return GaloisCover::trivial_cover(genus);
    }
    bad(where, "cover must have one of \"superelliptic\", \"abstract\", \"trivial\"");
}

// {"weierstrass": n} | {"degrees": [...], "ell", "d", "asserted"?}
inline BundleSpec parse_bundle(const Json& j, const std::string& where = "bundle") {
    if (!j.is_object()) bad(where, "expected a bundle descriptor object");
    if (j.contains("weierstrass"))
        return BundleSpec::weierstrass(parse_int(j.at("weierstrass"), where + ".weierstrass"));
    BundleSpec b;
    const Json& dj = need(j, "degrees", where);
    if (!dj.is_array()) bad(where + ".degrees", "expected an array of summand degrees");
    for (size_t i = 0; i < dj.size(); ++i)
        b.summand_degrees.push_back(parse_int(dj.at(i), where + ".degrees"));
    b.ell = parse_int(j, "ell", where);
    b.d = parse_int(j, "d", where, 1);
    b.assumptions_asserted = parse_bool(j, "asserted", where, false);
    b.validate();
    return b;
}

// ---- serialization (reports -> JSON with stable key order) ----

inline Json valuation_to_json(int v) { return v == kValInfinity ? Json("inf") : Json(v); }

inline Json module_to_json(const VirtualModule& m) {
    Json mult = Json::array();
    for (auto x : m.mult()) mult.push_back(x);
    return Json{{"mult", std::move(mult)}, {"dim", m.dimension()}};
}

inline Json symbolic_class_to_json(const SymbolicClass& c) {
    return Json{{"a", c.a}, {"b", c.b}, {"c", c.c}, {"delta", c.delta}};
}

inline Json cover_to_json(const GaloisCover& cov) {
    Json branches = Json::array();
    for (const auto& b : cov.branches())
        branches.push_back(Json{{"point", format_branch_location(b.location)},
                                {"multiplicity", b.multiplicity},
                                {"e", b.e},
                                {"inertia", b.inertia_gen}});
    return Json{{"group_order", cov.group_order()},
                {"base_genus", cov.base_genus()},
                {"branch_points", cov.branch_point_count()},
                {"genus_upstairs", cov.genus_upstairs()},
                {"branch", std::move(branches)}};
}

inline Json surface_report_to_json(const SurfaceReport& rep) {
    Json fibers = Json::array();
    for (const auto& f : rep.fibers)
        fibers.push_back(Json{{"place", format_place(f.cluster.place)},
                              {"deg", f.cluster.deg},
                              {"vA", valuation_to_json(f.cluster.vA)},
                              {"vB", valuation_to_json(f.cluster.vB)},
                              {"vD", f.cluster.vD},
                              {"type", to_string(f.type)},
                              {"conductor", f.conductor},
                              {"milnor", f.milnor},
                              {"euler", f.euler}});
    return Json{{"n", rep.n},        {"isotrivial", rep.isotrivial},
                {"d_E", rep.d_E},    {"c_E", rep.c_E},
                {"mu", rep.mu},      {"fibers", std::move(fibers)}};
}

inline Json base_change_report_to_json(const BaseChangeReport& rep) {
    Json fibers = Json::array();
    for (const auto& u : rep.fibers_up)
        fibers.push_back(Json{{"place", format_place(u.place)},
                              {"count", u.count},
                              {"e", u.e},
                              {"type_down", to_string(u.type_down)},
                              {"type", to_string(u.type)},
                              {"vA", valuation_to_json(u.vA)},
                              {"vB", valuation_to_json(u.vB)},
                              {"vD", u.vD}});
    Json out{{"hypothesis", to_string(rep.hypothesis)},
             {"d_up", rep.d_up},
             {"c_up", rep.c_up},
             {"mu_up", rep.mu_up},
             {"fibers_up", std::move(fibers)}};
    out["tjurina"] = rep.tjurina ? module_to_json(*rep.tjurina) : Json(nullptr);
    return out;
}

inline Json mw_report_to_json(const MWReport& rep) {
    Json isotypic = Json::array();
    for (const auto& e : rep.isotypic)
        isotypic.push_back(Json{{"chi_index", e.chi_index},
                                {"chi_dim", e.chi_dim},
                                {"multiplicity", e.multiplicity}});
    return Json{{"M", module_to_json(rep.M)},
                {"rank_bound_dim", rep.rank_bound_dim},
                {"pal_bound", rep.pal_bound},
                {"epsilon", rep.epsilon},
                {"variant_form_value", rep.variant_form_value},
                {"discrepancy_note", rep.discrepancy_note},
                {"isotypic", std::move(isotypic)}};
}

}  // namespace json_io
}  // namespace ellhodge
