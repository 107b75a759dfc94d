#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "zft/trees.hpp"

namespace zft {

/// A copy of the component tree whose nodes carry vertices of G.
struct LabeledExtensionTree {
    int root = 0;
    std::vector<int> labels; // per component-tree node
};

/// Labels one copy of the component tree for the forcing tree rooted at b:
/// the root gets b, the node entered by W at depth t gets u when u in T_b was
/// forced at time t inside W, and every other node copies its parent.
inline LabeledExtensionTree build_labeled_tree(int b, const ComponentTree& ct, const ForcingSchedule& s) {
    if (!is_psd(s.rule)) throw UsageError("extension trees need a PSD schedule");
    if (!contains(s.initial, b)) throw UsageError("vertex " + std::to_string(b) + " is not in the initial set");
    std::vector<int> root(s.order, -1);
    for (int v : members(s.initial)) root[v] = v;
    for (const auto& f : s.forces) root[f.target] = root[f.source];

    LabeledExtensionTree out{b, std::vector<int>(ct.nodes.size(), -1)};
    out.labels[0] = b;
    for (const auto& f : s.forces) {
        if (root[f.target] != b) continue;
        const int x = ct.find(f.lineage);
        if (x < 0 || ct.nodes[x].depth != f.time) throw InternalError("force lineage is missing from the component tree");
        if (out.labels[x] >= 0 && out.labels[x] != f.target)
            throw InternalError("component-tree node labeled twice (" + std::to_string(out.labels[x]) + " and " +
                                std::to_string(f.target) + ")");
        out.labels[x] = f.target;
    }
    // nodes are stored parents first
    for (std::size_t x = 1; x < ct.nodes.size(); ++x)
        if (out.labels[x] < 0) out.labels[x] = out.labels[ct.nodes[x].parent];
    return out;
}

enum class ExtensionEdgeKind { tree, root, cross };

inline const char* to_string(ExtensionEdgeKind k) {
    switch (k) {
    case ExtensionEdgeKind::tree: return "tree";
    case ExtensionEdgeKind::root: return "root";
    case ExtensionEdgeKind::cross: return "cross";
    }
    return "?";
}

struct ExtensionEdge {
    int u = 0;
    int v = 0;
    ExtensionEdgeKind kind = ExtensionEdgeKind::tree;
};

/// E+(G; B; F): one labeled copy of the component tree per b in B (in
/// increasing order of b), joined by root edges and cross edges. Vertex
/// copy * tree_size() + node is the copy of component-tree node `node` for the
/// copy-th vertex of B.
struct ExtensionGraph {
    ComponentTree tree;
    std::vector<int> roots;
    std::vector<LabeledExtensionTree> copies;
    std::vector<ExtensionEdge> edges;

    int tree_size() const { return static_cast<int>(tree.nodes.size()); }
    int vertex_count() const { return static_cast<int>(roots.size()) * tree_size(); }
    int copy_of(int v) const { return v / tree_size(); }
    int node_of(int v) const { return v % tree_size(); }
    int label(int v) const { return copies[copy_of(v)].labels[node_of(v)]; }

    int count(ExtensionEdgeKind k) const {
        int c = 0;
        for (const auto& e : edges) c += e.kind == k;
        return c;
    }

    /// As a plain graph with vertices labeled by their G vertex.
    Graph to_graph(const Graph& g) const {
        if (vertex_count() > Graph::kMaxVertices)
            throw CapacityError("extension has " + std::to_string(vertex_count()) + " vertices; graphs hold at most 32");
        std::vector<Edge> es;
        for (const auto& e : edges) es.push_back({e.u, e.v});
        std::vector<std::string> names;
        for (int v = 0; v < vertex_count(); ++v) names.push_back(g.label(label(v)));
        return Graph(vertex_count(), es).with_labels(std::move(names));
    }
};

inline ExtensionGraph build_extension(const Graph& g, const ForcingSchedule& s) {
    if (s.rule != Rule::ZPlus) throw UsageError("the extension is built from a Z+ schedule");
    ExtensionGraph ext;
    ext.tree = component_tree(g, s);
    const int size = ext.tree_size();
    for (int b : members(s.initial)) {
        ext.roots.push_back(b);
        ext.copies.push_back(build_labeled_tree(b, ext.tree, s));
    }
    std::vector<int> copy_index(g.order(), -1);
    for (std::size_t i = 0; i < ext.roots.size(); ++i) copy_index[ext.roots[i]] = static_cast<int>(i);

    const auto trees = forcing_trees(g, s);
    const auto r = tree_roots(trees, g.order());
    std::vector<int> parent(g.order(), -1);
    for (const auto& t : trees)
        for (int v : members(t.vertices)) parent[v] = t.parent[v];
    std::vector<const Force*> forced_by(g.order(), nullptr);
    for (const auto& f : s.forces) forced_by[f.target] = &f;

    // step 1: tree edges of every copy
    for (std::size_t i = 0; i < ext.roots.size(); ++i)
        for (int x = 1; x < size; ++x)
            ext.edges.push_back({static_cast<int>(i) * size + ext.tree.nodes[x].parent, static_cast<int>(i) * size + x,
                                 ExtensionEdgeKind::tree});
    // step 2: edges inside B join roots
    for (const auto& e : g.edges())
        if (contains(s.initial, e.u) && contains(s.initial, e.v))
            ext.edges.push_back({copy_index[e.u] * size, copy_index[e.v] * size, ExtensionEdgeKind::root});
    // step 3: remaining non-tree edges at depth t(uv), following the later
    // vertex's component sequence
    for (const auto& e : g.edges()) {
        if (contains(s.initial, e.u) && contains(s.initial, e.v)) continue;
        if (parent[e.u] == e.v || parent[e.v] == e.u) continue;
        const int later = s.time_of(e.u) >= s.time_of(e.v) ? e.u : e.v;
        const int other = later == e.u ? e.v : e.u;
        const int x = ext.tree.find(forced_by[later]->lineage);
        const int cu = copy_index[r[later]];
        const int cv = copy_index[r[other]];
        if (x < 0 || ext.copies[cu].labels[x] != later || ext.copies[cv].labels[x] != other)
            throw InternalError("cross edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " has no endpoint copies");
        if (cu == cv) throw InternalError("cross edge inside one forcing tree");
        ext.edges.push_back({cv * size + x, cu * size + x, ExtensionEdgeKind::cross});
    }
    return ext;
}

/// Contracts every tree edge whose endpoints carry the same label. Vertex v of
/// the result is the class labeled v, so the result equals G when the
/// construction is sound.
inline Graph contract_same_label_tree_edges(const ExtensionGraph& ext, int n) {
    std::vector<Edge> out;
    for (const auto& e : ext.edges) {
        const int a = ext.label(e.u);
        const int b = ext.label(e.v);
        if (a == b) {
            if (e.kind != ExtensionEdgeKind::tree) throw InternalError("non-tree edge joins two copies of one vertex");
            continue;
        }
        out.push_back({std::min(a, b), std::max(a, b)});
    }
    std::ranges::sort(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return Graph(n, out);
}

} // namespace zft
