#pragma once

// Serialization: JSON schemas for posets, contexts, mergings, plane
// partitions, colorings and Galois connections; Burmeister .cxt contexts; DOT
// output for merged-order Hasse diagrams.

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "posetmerge/coloring.hpp"
#include "posetmerge/context.hpp"
#include "posetmerge/cross_relation.hpp"
#include "posetmerge/errors.hpp"
#include "posetmerge/galois.hpp"
#include "posetmerge/merging.hpp"
#include "posetmerge/plane_partition.hpp"
#include "posetmerge/poset.hpp"

namespace posetmerge {

using nlohmann::json;

// ---- posets: {"elements":[...], "le":[[0/1 ...] ...]} ----

inline json poset_to_json(const QuasiOrder& p) {
    json le = json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < p.size(); ++j) row.push_back(p.leq(i, j) ? 1 : 0);
        le.push_back(std::move(row));
    }
    return json{{"elements", p.labels()}, {"le", le}};
}

namespace detail {

inline std::pair<std::vector<std::string>, std::vector<std::vector<bool>>> relation_from_json(
    const json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("le"))
        throw ParseError("poset JSON needs 'elements' and 'le'");
    std::vector<std::string> labels = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::vector<bool>> rel;
    for (const auto& row : j.at("le")) {
        std::vector<bool> r;
        for (const auto& v : row) r.push_back(v.get<int>() != 0);
        rel.push_back(std::move(r));
    }
    return {std::move(labels), std::move(rel)};
}

} // namespace detail

inline QuasiOrder quasi_order_from_json(const json& j) {
    auto [labels, rel] = detail::relation_from_json(j);
    const RelationClassification c = classify_relation(labels, rel);
    if (!c.quasi_order) throw ParseError("'le' is not reflexive and transitive");
    return *c.quasi_order;
}

inline Poset poset_from_json(const json& j) {
    auto [labels, rel] = detail::relation_from_json(j);
    const RelationClassification c = classify_relation(labels, rel);
    if (!c.poset) throw ParseError("'le' is not a partial order");
    return *c.poset;
}

// ---- contexts: JSON and Burmeister .cxt ----

inline json context_to_json(const FormalContext& ctx) {
    json inc = json::array();
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        json row = json::array();
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
            row.push_back(ctx.incident(g, m) ? 1 : 0);
        inc.push_back(std::move(row));
    }
    return json{{"objects", ctx.objects()}, {"attributes", ctx.attributes()}, {"incidence", inc}};
}

inline FormalContext context_from_json(const json& j) {
    if (!j.is_object() || !j.contains("objects") || !j.contains("attributes") ||
        !j.contains("incidence"))
        throw ParseError("context JSON needs 'objects', 'attributes' and 'incidence'");
    auto objects = j.at("objects").get<std::vector<std::string>>();
    auto attributes = j.at("attributes").get<std::vector<std::string>>();
    if (objects.size() > Bitset::capacity() || attributes.size() > Bitset::capacity())
        throw CapacityError("context exceeds the bitset capacity");
    std::vector<Bitset> rows;
    for (const auto& row : j.at("incidence")) {
        Bitset r;
        std::size_t m = 0;
        for (const auto& v : row) {
            if (m >= attributes.size()) throw ParseError("incidence row longer than attribute list");
            if (v.get<int>() != 0) r.set(m);
            ++m;
        }
        if (m != attributes.size()) throw ParseError("incidence row shorter than attribute list");
        rows.push_back(r);
    }
    return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

inline std::string context_to_cxt(const FormalContext& ctx) {
    std::ostringstream out;
    out << "B\n\n" << ctx.object_count() << "\n" << ctx.attribute_count() << "\n\n";
    for (const auto& g : ctx.objects()) out << g << "\n";
    for (const auto& m : ctx.attributes()) out << m << "\n";
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
            out << (ctx.incident(g, m) ? 'X' : '.');
        out << "\n";
    }
    return out.str();
}

inline FormalContext context_from_cxt(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    std::size_t pos = 0;
    auto next = [&]() -> const std::string& {
        if (pos >= lines.size()) throw ParseError("unexpected end of .cxt input");
        return lines[pos++];
    };
    if (next() != "B") throw ParseError(".cxt input must start with 'B'");
    std::size_t ng = 0, nm = 0;
    try {
        ng = std::stoul(next());
        nm = std::stoul(next());
    } catch (const std::exception&) {
        throw ParseError(".cxt object/attribute counts must be integers");
    }
    if (ng > Bitset::capacity() || nm > Bitset::capacity())
        throw CapacityError("context exceeds the bitset capacity");
    std::vector<std::string> objects, attributes;
    for (std::size_t i = 0; i < ng; ++i) objects.push_back(next());
    for (std::size_t i = 0; i < nm; ++i) attributes.push_back(next());
    std::vector<Bitset> rows;
    for (std::size_t g = 0; g < ng; ++g) {
        const std::string& r = next();
        if (r.size() != nm)
            throw ParseError(".cxt incidence row " + std::to_string(g + 1) + " has length " +
                             std::to_string(r.size()) + ", expected " + std::to_string(nm));
        Bitset b;
        for (std::size_t m = 0; m < nm; ++m) {
            if (r[m] == 'X' || r[m] == 'x') b.set(m);
            else if (r[m] != '.')
                throw ParseError(".cxt incidence rows may only contain '.' and 'X'");
        }
        rows.push_back(b);
    }
    return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

inline FormalContext context_from_cxt(const std::string& text) {
    std::istringstream in(text);
    return context_from_cxt(in);
}

// ---- mergings: {"p":..., "q":..., "r":[[i,j]...], "s":[[j,i]...], "proper":bool} ----
// Pair entries are 0-based indices into the element lists of p and q.

inline json merging_to_json(const Merging& m) {
    json r = json::array(), s = json::array();
    for (auto [i, j] : m.r.pairs()) r.push_back(json::array({i, j}));
    for (auto [j, i] : m.s.pairs()) s.push_back(json::array({j, i}));
    return json{{"p", poset_to_json(m.p)},
                {"q", poset_to_json(m.q)},
                {"r", r},
                {"s", s},
                {"proper", m.proper}};
}

inline Merging merging_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("q") || !j.contains("r") ||
        !j.contains("s"))
        throw ParseError("merging JSON needs 'p', 'q', 'r' and 's'");
    const QuasiOrder p = quasi_order_from_json(j.at("p"));
    const QuasiOrder q = quasi_order_from_json(j.at("q"));
    CrossRelation r(p.labels(), q.labels());
    CrossRelation s(q.labels(), p.labels());
    auto read_pairs = [](const json& arr, CrossRelation& rel, const char* name) {
        for (const auto& pr : arr) {
            if (!pr.is_array() || pr.size() != 2)
                throw ParseError(std::string("'") + name + "' entries must be [i,j] pairs");
            const std::size_t a = pr[0].get<std::size_t>();
            const std::size_t b = pr[1].get<std::size_t>();
            if (a >= rel.rows.size() || b >= rel.right.size())
                throw ParseError(std::string("'") + name + "' pair out of range");
            rel.set(a, b);
        }
    };
    read_pairs(j.at("r"), r, "r");
    read_pairs(j.at("s"), s, "s");
    Merging m = classify_merging(p, q, r, s);
    if (!m.is_merging()) throw ParseError("relations do not form a merging of p and q");
    if (j.contains("proper") && j.at("proper").get<bool>() != m.proper)
        throw ParseError("stated 'proper' flag does not match the relations");
    return m;
}

// ---- plane partitions: {"rows":m,"cols":n,"max":l,"parts":[[...]]} ----

inline json pp_to_json(const PlanePartition& pp) {
    return json{{"rows", pp.rows}, {"cols", pp.cols}, {"max", pp.max_part}, {"parts", pp.parts}};
}

inline PlanePartition pp_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("max") ||
        !j.contains("parts"))
        throw ParseError("plane partition JSON needs 'rows', 'cols', 'max' and 'parts'");
    PlanePartition pp;
    pp.rows = j.at("rows").get<std::size_t>();
    pp.cols = j.at("cols").get<std::size_t>();
    pp.max_part = j.at("max").get<int>();
    pp.parts = j.at("parts").get<std::vector<std::vector<int>>>();
    validate_plane_partition(pp);
    return pp;
}

// ---- colorings: {"m":m,"k":k,"v1":[...],"v2":[...]} ----

inline json coloring_to_json(const MonotoneColoring& g) {
    return json{{"m", g.m}, {"k", g.k}, {"v1", g.v1}, {"v2", g.v2}};
}

inline MonotoneColoring coloring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("k") || !j.contains("v1") ||
        !j.contains("v2"))
        throw ParseError("coloring JSON needs 'm', 'k', 'v1' and 'v2'");
    MonotoneColoring g;
    g.m = j.at("m").get<std::size_t>();
    g.k = j.at("k").get<std::size_t>();
    g.v1 = j.at("v1").get<std::vector<int>>();
    g.v2 = j.at("v2").get<std::vector<int>>();
    validate_coloring(g);
    return g;
}

// ---- Galois connections: {"phi":{"<p>":"<q>"...}, "psi":{...}} ----

inline json galois_to_json(const GaloisConnection& g) {
    json phi = json::object(), psi = json::object();
    for (std::size_t i = 0; i < g.p.size(); ++i) phi[g.p.label(i)] = g.q.label(g.phi[i]);
    for (std::size_t j = 0; j < g.q.size(); ++j) psi[g.q.label(j)] = g.p.label(g.psi[j]);
    return json{{"phi", phi}, {"psi", psi}};
}

// One readable line per connection, mirroring the tabulated form.
inline std::string galois_to_table_row(const GaloisConnection& g) {
    std::ostringstream out;
    out << "psi:";
    for (std::size_t j = 0; j < g.q.size(); ++j)
        out << " " << g.q.label(j) << "->" << g.p.label(g.psi[j]);
    out << "  phi:";
    for (std::size_t i = 0; i < g.p.size(); ++i)
        out << " " << g.p.label(i) << "->" << g.q.label(g.phi[i]);
    return out.str();
}

// ---- DOT output ----

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace detail

// Hasse diagram of the merged order, edges pointing upward; P elements are
// drawn as circles, Q elements as boxes. Requires a proper merging of posets.
inline std::string merged_order_dot(const Merging& m, const std::string& name = "merging") {
    const auto poset = merged_poset(m);
    if (!poset) throw DomainError("DOT output needs a proper merging of posets");
    std::ostringstream out;
    out << "digraph " << name << " {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < poset->size(); ++i) {
        const bool left = i < m.p.size();
        out << "  " << detail::dot_quote(poset->label(i))
            << (left ? " [shape=circle, color=green]" : " [shape=box, color=black]") << ";\n";
    }
    for (auto [a, b] : hasse_edges(*poset))
        out << "  " << detail::dot_quote(poset->label(a)) << " -> "
            << detail::dot_quote(poset->label(b)) << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace posetmerge
