#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "zft/canonical.hpp"
#include "zft/extension.hpp"
#include "zft/product.hpp"
#include "zft/throttle.hpp"

namespace zft {

inline constexpr int kCharacterizationMaxVertices = 12;

/// psd: deletions restricted to complete edges (th+ <= t).
/// psd_floor: any edge may be deleted (floor th+ <= t).
enum class Flavor { psd, psd_floor };

inline const char* to_string(Flavor f) { return f == Flavor::psd ? "psd" : "psdfloor"; }

inline Flavor parse_flavor(std::string_view s) {
    if (s == "psd") return Flavor::psd;
    if (s == "psdfloor" || s == "psd_floor") return Flavor::psd_floor;
    throw UsageError("unknown flavor '" + std::string(s) + "' (expected psd or psdfloor)");
}

/// Contractions and deletions on K_a x T_{k,b}. Template vertices are ids of
/// ProductShape(a, k, b).
struct MinorScript {
    int a = 1;
    int k = 1;
    int b = 0;
    Flavor flavor = Flavor::psd;
    std::vector<std::pair<int, int>> contract;
    std::vector<std::pair<int, int>> remove;

    ProductShape shape() const { return ProductShape(a, k, b); }
};

namespace detail {

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    }
    void join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) up[std::max(a, b)] = std::min(a, b);
    }
};

inline std::uint64_t pair_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

} // namespace detail

/// Applies the deletions, then contracts the listed tree edges and returns the
/// simple quotient. Result vertices are ordered by the smallest template
/// vertex of their class and labeled "clique:path" of that vertex.
inline Graph apply_script(const MinorScript& script) {
    const ProductShape shape = script.shape();
    const int total = shape.vertex_count();
    auto check_vertex = [&](int v) {
        if (v < 0 || v >= total) throw ScriptError("template vertex " + std::to_string(v) + " out of range");
    };
    std::unordered_set<std::uint64_t> removed;
    for (const auto& [u, v] : script.remove) {
        check_vertex(u);
        check_vertex(v);
        if (!shape.is_edge(u, v)) throw ScriptError("deleting a non-edge of the template");
        if (script.flavor == Flavor::psd && !shape.is_complete_edge(u, v))
            throw ScriptError("psd scripts may delete complete edges only");
        if (!removed.insert(detail::pair_key(u, v)).second) throw ScriptError("edge deleted twice");
    }
    detail::UnionFind uf(total);
    for (const auto& [u, v] : script.contract) {
        check_vertex(u);
        check_vertex(v);
        if (!shape.is_tree_edge(u, v)) throw ScriptError("contracting an edge that is not a tree edge");
        if (removed.contains(detail::pair_key(u, v))) throw ScriptError("contracting a deleted edge");
        uf.join(u, v);
    }
    std::vector<int> index(total, -1);
    int n = 0;
    std::vector<std::string> labels;
    for (int v = 0; v < total; ++v)
        if (uf.find(v) == v) {
            if (n == Graph::kMaxVertices) throw CapacityError("script result exceeds 32 vertices");
            index[v] = n++;
            labels.push_back(std::to_string(shape.clique_of(v)) + ":" + shape.tree_path(shape.node_of(v)));
        }
    std::set<std::pair<int, int>> edges;
    for (const auto& [e, cls] : shape.classified_edges()) {
        if (removed.contains(detail::pair_key(e.u, e.v))) continue;
        const int a = index[uf.find(e.u)];
        const int b = index[uf.find(e.v)];
        if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
    }
    std::vector<Edge> es;
    for (const auto& [a, b] : edges) es.push_back({a, b});
    return Graph(n, es).with_labels(std::move(labels));
}

namespace detail {

struct TemplateEmbedding {
    MinorScript script;
    std::vector<int> image; // template vertex -> vertex of G
};

/// Lays E+(G; B; F) into K_a x T_{k,t-a}: copy i of the component tree goes to
/// clique i, the j-th child of a node to the j-th template child. Complete
/// edges missing from E+ are deleted; unused template nodes are contracted
/// into their parents, and so are tree edges whose ends share a label.
inline TemplateEmbedding embed_extension(const Graph& g, const ForcingSchedule& s, int t) {
    const ExtensionGraph ext = build_extension(g, s);
    const int a = static_cast<int>(ext.roots.size());
    const int k = std::max(1, ext.tree.max_children());
    const int b = t - a;
    if (b < ext.tree.height()) throw InternalError("schedule is longer than the template height");
    TemplateEmbedding out;
    out.script = MinorScript{a, k, b, Flavor::psd, {}, {}};
    const ProductShape shape(a, k, b);

    std::vector<int> node_image(ext.tree_size(), -1); // component node -> template node
    std::vector<int> preimage(shape.tree_size(), -1);
    node_image[0] = 0;
    preimage[0] = 0;
    for (int x = 0; x < ext.tree_size(); ++x)
        for (std::size_t j = 0; j < ext.tree.nodes[x].children.size(); ++j) {
            const int c = ext.tree.nodes[x].children[j];
            node_image[c] = shape.tree_child(node_image[x], static_cast<int>(j));
            preimage[node_image[c]] = c;
        }

    // unused template nodes stand for their nearest used ancestor
    std::vector<int> stand_in(shape.tree_size(), -1);
    for (int y = 0; y < shape.tree_size(); ++y)
        stand_in[y] = preimage[y] >= 0 ? preimage[y] : stand_in[shape.tree_parent(y)];

    out.image.assign(shape.vertex_count(), -1);
    for (int i = 0; i < a; ++i)
        for (int y = 0; y < shape.tree_size(); ++y)
            out.image[shape.vertex(i, y)] = ext.copies[i].labels[stand_in[y]];

    std::unordered_set<std::uint64_t> kept;
    for (const auto& e : ext.edges) {
        if (e.kind == ExtensionEdgeKind::tree) continue;
        const int u = shape.vertex(ext.copy_of(e.u), node_image[ext.node_of(e.u)]);
        const int v = shape.vertex(ext.copy_of(e.v), node_image[ext.node_of(e.v)]);
        if (!shape.is_complete_edge(u, v)) throw InternalError("extension edge is not a complete edge of the template");
        kept.insert(pair_key(u, v));
    }
    for (const auto& [e, cls] : shape.classified_edges()) {
        if (cls == EdgeClass::complete) {
            if (!kept.contains(pair_key(e.u, e.v))) out.script.remove.emplace_back(e.u, e.v);
            continue;
        }
        // covers unused nodes too: they share their parent's label
        if (out.image[e.u] == out.image[e.v]) out.script.contract.emplace_back(e.u, e.v);
    }
    return out;
}

inline long template_size(int a, int k, int b) {
    long level = 1;
    long total = 0;
    for (int d = 0; d <= b; ++d) {
        total += level;
        level *= k;
        if (total > ProductShape::kMaxVertices) return ProductShape::kMaxVertices + 1;
    }
    return a * total;
}

/// The optimal certificate's schedule when its template fits; otherwise,
/// among initial sets with th+(G; B) <= t, the one whose template
/// K_a x T_{k,t-a} is smallest (ties: smallest bitmask). nullopt if none.
inline std::optional<ForcingSchedule> template_schedule(const Graph& g, int t) {
    auto opt = throttling_number(Rule::ZPlus, g);
    if (opt.th > t) return std::nullopt;
    auto size_of = [&](const ForcingSchedule& s) {
        const int a = popcount(s.initial);
        return template_size(a, std::max(1, component_tree(g, s).max_children()), t - a);
    };
    if (size_of(opt.schedule) <= ProductShape::kMaxVertices) return std::move(opt.schedule);
    std::optional<ForcingSchedule> best;
    long best_size = 0;
    for (VertexSet b = 1; b <= g.vertices(); ++b) {
        const int a = popcount(b);
        if (a > t) continue;
        const auto pt = deterministic_time(Rule::ZPlus, g, b);
        if (!pt || a + *pt > t) continue;
        auto s = schedule_of(propagate_deterministic(Rule::ZPlus, g, b));
        const long size = size_of(s);
        if (!best || size < best_size) {
            best = std::move(s);
            best_size = size;
        }
    }
    if (best_size > ProductShape::kMaxVertices) throw CapacityError("K_a x T_{k,b} is too large");
    return best;
}

inline std::optional<MinorScript> psd_script(const Graph& g, int t, std::vector<int>* image = nullptr) {
    auto s = template_schedule(g, t);
    if (!s) return std::nullopt;
    auto emb = embed_extension(g, *s, t);
    if (image) *image = std::move(emb.image);
    return emb.script;
}

/// A spanning supergraph H of G with th+(H) <= t, or nullopt. Tries G plus the
/// hop edges of a fastest floor schedule first, then (for small graphs) every
/// supergraph.
inline std::optional<Graph> floor_supergraph(const Graph& g, int t) {
    const auto opt = throttling_number(Rule::ZPlusFloor, g);
    if (opt.th > t) return std::nullopt;
    std::vector<Edge> edges = g.edges();
    for (const auto& f : opt.schedule.forces)
        if (f.kind == ForceKind::hop) edges.push_back({std::min(f.source, f.target), std::max(f.source, f.target)});
    std::ranges::sort(edges);
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Graph h(g.order(), edges);
    if (throttling_number(Rule::ZPlus, h).th <= t) return h;
    if (g.order() > kSupergraphOracleMaxVertices)
        throw CapacityError("no supergraph found from hop edges; exhaustive supergraph search stops at 6 vertices");
    return floor_throttling_via_supergraphs(Rule::ZPlusFloor, g).supergraph;
}

} // namespace detail

/// A script turning some K_a x T_{k,b} with a + b = t into G, or nullopt when
/// th+(G) > t (psd) or the floor throttling number exceeds t (psd_floor).
inline std::optional<MinorScript> characterization_certificate(const Graph& g, int t, Flavor flavor) {
    if (g.order() > kCharacterizationMaxVertices)
        throw CapacityError("characterization certificates support at most 12 vertices, got " + std::to_string(g.order()));
    if (t < 1) throw DomainError("t must be positive");
    if (g.order() == 0) throw DomainError("graph is empty");

    if (flavor == Flavor::psd) {
        return detail::psd_script(g, t);
    }
    const auto h = detail::floor_supergraph(g, t);
    if (!h) return std::nullopt;
    std::vector<int> image;
    auto found = detail::psd_script(*h, t, &image);
    if (!found) throw InternalError("supergraph does not meet the bound");
    MinorScript script = std::move(*found);
    script.flavor = Flavor::psd_floor;
    // drop every surviving template edge whose image is an added edge
    std::unordered_set<std::uint64_t> gone;
    for (const auto& [u, v] : script.remove) gone.insert(detail::pair_key(u, v));
    for (const auto& [u, v] : script.contract) gone.insert(detail::pair_key(u, v));
    for (const auto& [e, cls] : script.shape().classified_edges()) {
        if (gone.contains(detail::pair_key(e.u, e.v))) continue;
        const int x = image[e.u];
        const int y = image[e.v];
        if (x != y && !g.adjacent(x, y)) script.remove.emplace_back(e.u, e.v);
    }
    return script;
}

/// apply_script(script) is isomorphic to G.
inline bool script_produces(const MinorScript& script, const Graph& g) {
    const Graph r = apply_script(script);
    return isomorphic(r.without_labels(), g.without_labels());
}

} // namespace zft
