#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "zft/catalog.hpp"
#include "zft/graph6.hpp"
#include "zft/minor_script.hpp"

namespace zft {

using Json = nlohmann::ordered_json;

inline Json set_json(VertexSet s) {
    Json out = Json::array();
    for (int v : members(s)) out.push_back(v);
    return out;
}

inline VertexSet set_from_json(const Json& j) {
    VertexSet s = 0;
    for (const auto& v : j) {
        const int x = v.get<int>();
        if (x < 0 || x >= Graph::kMaxVertices) throw SchemaError("vertex " + std::to_string(x) + " out of range");
        s |= bit(x);
    }
    return s;
}

/// {rule, B, layers, forces: [{u, w, t, kind, lineage}]}
inline Json to_json(const ForcingSchedule& s) {
    Json j;
    j["rule"] = to_string(s.rule);
    j["B"] = set_json(s.initial);
    j["layers"] = Json::array();
    for (VertexSet l : s.layers) j["layers"].push_back(set_json(l));
    j["forces"] = Json::array();
    for (const auto& f : s.forces) {
        Json lineage = Json::array();
        for (VertexSet w : f.lineage) lineage.push_back(set_json(w));
        j["forces"].push_back(
            {{"u", f.source}, {"w", f.target}, {"t", f.time}, {"kind", to_string(f.kind)}, {"lineage", lineage}});
    }
    return j;
}

/// The schedule document plus th, pt, savings and witnessKind.
inline Json to_json(const ThrottlingCertificate& c) {
    Json j = to_json(c.schedule);
    j["th"] = c.th;
    j["pt"] = c.pt;
    j["savings"] = {{"total", c.savings()}, {"profile", c.savings_profile}};
    j["witnessKind"] = to_string(c.kind);
    return j;
}

namespace detail {

inline Json template_vertex(const ProductShape& shape, int v) {
    return Json::array({shape.clique_of(v), shape.tree_path(shape.node_of(v))});
}

inline int template_vertex_from(const ProductShape& shape, const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_string())
        throw SchemaError("template vertex must be [clique, path]");
    const int clique = j[0].get<int>();
    if (clique < 0 || clique >= shape.a()) throw ScriptError("clique index " + std::to_string(clique) + " out of range");
    return shape.vertex(clique, shape.node_from_path(j[1].get<std::string>()));
}

} // namespace detail

/// {a, k, b, flavor, contract: [[v, v]...], delete: [[v, v]...]}; a template
/// vertex is [clique index, tree path].
inline Json to_json(const MinorScript& s) {
    const ProductShape shape = s.shape();
    Json j;
    j["a"] = s.a;
    j["k"] = s.k;
    j["b"] = s.b;
    j["flavor"] = to_string(s.flavor);
    for (const char* key : {"contract", "delete"}) {
        const auto& list = std::string(key) == "contract" ? s.contract : s.remove;
        j[key] = Json::array();
        for (const auto& [u, v] : list)
            j[key].push_back(Json::array({detail::template_vertex(shape, u), detail::template_vertex(shape, v)}));
    }
    return j;
}

inline MinorScript script_from_json(const Json& j) {
    MinorScript s;
    try {
        s.a = j.at("a").get<int>();
        s.k = j.at("k").get<int>();
        s.b = j.at("b").get<int>();
        s.flavor = parse_flavor(j.at("flavor").get<std::string>());
        const ProductShape shape = s.shape();
        for (const auto& e : j.at("contract"))
            s.contract.emplace_back(detail::template_vertex_from(shape, e.at(0)), detail::template_vertex_from(shape, e.at(1)));
        for (const auto& e : j.at("delete"))
            s.remove.emplace_back(detail::template_vertex_from(shape, e.at(0)), detail::template_vertex_from(shape, e.at(1)));
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("malformed script: ") + e.what());
    }
    return s;
}

/// {g6, labels, copies, edges: [{u, v, kind}]}: labels[v] is the vertex of G
/// carried by extension vertex v.
inline Json to_json(const ExtensionGraph& ext, const Graph& g) {
    Json j;
    j["g6"] = emit_graph6(ext.to_graph(g));
    j["labels"] = Json::array();
    for (int v = 0; v < ext.vertex_count(); ++v) j["labels"].push_back(ext.label(v));
    j["roots"] = ext.roots;
    j["edges"] = Json::array();
    for (const auto& e : ext.edges) j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"kind", to_string(e.kind)}});
    return j;
}

/// {composition, S, T}: S[i][j] is matched to T[i][j].
inline Json to_json(const AcceleratorDecomposition& d) {
    return {{"composition", d.composition}, {"S", d.s}, {"T", d.t}};
}

inline Json to_json(const CertificateSubgraph& c) {
    Json j;
    j["k"] = c.k;
    j["witness"] = to_json(c.witness);
    j["r"] = c.r;
    j["layers"] = Json::array();
    j["sources"] = Json::array();
    for (VertexSet l : c.layers) j["layers"].push_back(set_json(l));
    for (VertexSet u : c.sources) j["sources"].push_back(set_json(u));
    j["X"] = set_json(c.x);
    j["g6"] = emit_graph6(c.h);
    return j;
}

/// One graph6 line per member; the sidecar gets one JSON line per member
/// ({g6, composition, decomposition}) in the same order.
inline void write_catalog(const std::vector<CatalogMember>& members, std::ostream& g6, std::ostream* sidecar = nullptr) {
    for (const auto& m : members) {
        const std::string line = emit_graph6(m.graph);
        g6 << line << '\n';
        if (sidecar)
            *sidecar << Json{{"g6", line},
                             {"composition", m.decomposition.composition},
                             {"decomposition", to_json(m.decomposition)}}
                            .dump()
                     << '\n';
    }
}

/// Structural checks for every document the library emits. Each throws
/// SchemaError naming the offending field.
namespace schema {

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw SchemaError("schema violation: " + what);
}

inline const Json& field(const Json& j, const char* key) {
    require(j.is_object(), std::string("expected an object holding '") + key + "'");
    require(j.contains(key), std::string("missing field '") + key + "'");
    return j.at(key);
}

inline void vertex_array(const Json& j, const std::string& name) {
    require(j.is_array(), name + " must be an array");
    for (const auto& v : j) require(v.is_number_integer() && v.get<int>() >= 0, name + " holds a non-vertex");
}

inline void array_of_vertex_arrays(const Json& j, const std::string& name) {
    require(j.is_array(), name + " must be an array");
    for (const auto& x : j) vertex_array(x, name + "[]");
}

inline void string_in(const Json& j, std::initializer_list<const char*> allowed, const std::string& name) {
    require(j.is_string(), name + " must be a string");
    for (const char* a : allowed)
        if (j.get<std::string>() == a) return;
    require(false, name + " has an unexpected value '" + j.get<std::string>() + "'");
}

inline void integer(const Json& j, const std::string& name) { require(j.is_number_integer(), name + " must be an integer"); }

} // namespace detail

inline void schedule(const Json& j) {
    using namespace detail;
    string_in(field(j, "rule"), {"z", "zfloor", "zplus", "zplusfloor"}, "rule");
    vertex_array(field(j, "B"), "B");
    array_of_vertex_arrays(field(j, "layers"), "layers");
    const Json& forces = field(j, "forces");
    require(forces.is_array(), "forces must be an array");
    for (const auto& f : forces) {
        integer(field(f, "u"), "u");
        integer(field(f, "w"), "w");
        integer(field(f, "t"), "t");
        string_in(field(f, "kind"), {"standard", "hop"}, "kind");
        array_of_vertex_arrays(field(f, "lineage"), "lineage");
    }
}

inline void certificate(const Json& j) {
    using namespace detail;
    schedule(j);
    integer(field(j, "th"), "th");
    integer(field(j, "pt"), "pt");
    const Json& s = field(j, "savings");
    integer(field(s, "total"), "savings.total");
    require(field(s, "profile").is_array(), "savings.profile must be an array");
    string_in(field(j, "witnessKind"), {"witness", "standard_witness"}, "witnessKind");
}

inline void script(const Json& j) {
    using namespace detail;
    for (const char* key : {"a", "k", "b"}) integer(field(j, key), key);
    string_in(field(j, "flavor"), {"psd", "psdfloor"}, "flavor");
    for (const char* key : {"contract", "delete"}) {
        const Json& list = field(j, key);
        require(list.is_array(), std::string(key) + " must be an array");
        for (const auto& e : list) {
            require(e.is_array() && e.size() == 2, std::string(key) + " entries are vertex pairs");
            for (const auto& v : e)
                require(v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_string(),
                        "template vertices are [clique, path]");
        }
    }
}

inline void extension(const Json& j) {
    using namespace detail;
    require(field(j, "g6").is_string(), "g6 must be a string");
    vertex_array(field(j, "labels"), "labels");
    vertex_array(field(j, "roots"), "roots");
    const Json& edges = field(j, "edges");
    require(edges.is_array(), "edges must be an array");
    for (const auto& e : edges) {
        integer(field(e, "u"), "u");
        integer(field(e, "v"), "v");
        string_in(field(e, "kind"), {"tree", "root", "cross"}, "kind");
    }
}

inline void decomposition(const Json& j) {
    using namespace detail;
    const Json& comp = field(j, "composition");
    require(comp.is_array() && !comp.empty(), "composition must be a nonempty array");
    for (const auto& a : comp) require(a.is_number_integer() && a.get<int>() >= 1, "composition parts are positive");
    array_of_vertex_arrays(field(j, "S"), "S");
    array_of_vertex_arrays(field(j, "T"), "T");
    require(j["S"].size() == comp.size() && j["T"].size() == comp.size(), "one S and one T block per part");
}

inline void catalog_entry(const Json& j) {
    using namespace detail;
    require(field(j, "g6").is_string(), "g6 must be a string");
    require(field(j, "composition").is_array(), "composition must be an array");
    decomposition(field(j, "decomposition"));
}

inline void report_record(const Json& j) {
    using namespace detail;
    require(field(j, "g6").is_string(), "g6 must be a string");
    string_in(field(j, "verdict"), {"pass", "fail", "info"}, "verdict");
    require(field(j, "data").is_object(), "data must be an object");
}

inline void report_summary(const Json& j) {
    using namespace detail;
    require(field(j, "summary").is_boolean(), "summary flag");
    require(field(j, "theorem").is_string(), "theorem must be a string");
    require(field(j, "corpus").is_object(), "corpus must be an object");
    const Json& totals = field(j, "totals");
    for (const char* key : {"graphs", "passed", "failed"}) integer(field(totals, key), key);
    string_in(field(j, "verdict"), {"pass", "fail", "info"}, "verdict");
    require(field(j, "counterexamples").is_array(), "counterexamples must be an array");
}

} // namespace schema

} // namespace zft
