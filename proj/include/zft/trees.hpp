#pragma once

#include <vector>

#include "zft/schedule.hpp"

namespace zft {

/// Vertices reached by forcing chains from one initial blue vertex.
struct ForcingTree {
    int root = 0;
    VertexSet vertices = 0;
    /// parent[v] is the vertex that forced v, -1 for the root and for vertices
    /// outside this tree.
    std::vector<int> parent;

    std::vector<int> children(int v) const {
        std::vector<int> out;
        for (int w : members(vertices))
            if (parent[w] == v) out.push_back(w);
        return out;
    }

    /// (parent, child) pairs.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int w : members(vertices))
            if (parent[w] >= 0) out.push_back({parent[w], w});
        return out;
    }
};

/// One forcing tree per initial blue vertex, in increasing order of root.
inline std::vector<ForcingTree> forcing_trees(const Graph& g, const ForcingSchedule& s) {
    if (s.order != g.order()) throw UsageError("schedule belongs to a graph of a different order");
    if (!s.complete()) throw UsageError("forcing trees need a completed schedule");
    std::vector<int> forced_by(g.order(), -1);
    for (const auto& f : s.forces) forced_by[f.target] = f.source;
    std::vector<int> root(g.order(), -1);
    for (int b : members(s.initial)) root[b] = b;
    // forces are time ordered, so a source's root is known before its targets
    for (const auto& f : s.forces) root[f.target] = root[f.source];

    std::vector<ForcingTree> out;
    for (int b : members(s.initial)) {
        ForcingTree t{b, 0, std::vector<int>(g.order(), -1)};
        for (int v = 0; v < g.order(); ++v)
            if (root[v] == b) {
                t.vertices |= bit(v);
                if (v != b) t.parent[v] = forced_by[v];
            }
        out.push_back(std::move(t));
    }
    return out;
}

/// r(v): the root of the forcing tree containing v.
inline std::vector<int> tree_roots(const std::vector<ForcingTree>& trees, int n) {
    std::vector<int> r(n, -1);
    for (const auto& t : trees)
        for (int v : members(t.vertices)) r[v] = t.root;
    return r;
}

/// The rooted tree of white-component breakdowns of a PSD schedule. Node 0 is
/// the root; every other node is entered by an edge labeled with a white
/// component W at depth t (a component of G - B^[t-1]); `forced` holds the
/// vertices of W forced at step t.
struct ComponentTree {
    struct Node {
        int parent = -1;
        int depth = 0;
        VertexSet label = 0;
        VertexSet forced = 0;
        std::vector<int> children;
    };
    std::vector<Node> nodes;

    int height() const {
        int h = 0;
        for (const auto& x : nodes) h = std::max(h, x.depth);
        return h;
    }

    int max_children() const {
        std::size_t k = 0;
        for (const auto& x : nodes) k = std::max(k, x.children.size());
        return static_cast<int>(k);
    }

    /// Edge labels from the root down to node x.
    Lineage path(int x) const {
        Lineage out;
        for (; x > 0; x = nodes[x].parent) out.insert(out.begin(), nodes[x].label);
        return out;
    }

    /// The node reached by following a lineage from the root, or -1.
    int find(const Lineage& p) const {
        int x = 0;
        for (VertexSet w : p) {
            int next = -1;
            for (int c : nodes[x].children)
                if (nodes[c].label == w) next = c;
            if (next < 0) return -1;
            x = next;
        }
        return x;
    }
};

inline ComponentTree component_tree(const Graph& g, const ForcingSchedule& s) {
    if (!is_psd(s.rule)) throw UsageError("component trees are defined for PSD schedules only");
    if (s.order != g.order()) throw UsageError("schedule belongs to a graph of a different order");
    if (!s.complete()) throw UsageError("component tree needs a completed schedule");
    ComponentTree tree;
    tree.nodes.push_back({});
    std::vector<int> open;
    for (VertexSet w : connected_components(g, g.vertices() & ~s.initial)) {
        tree.nodes[0].children.push_back(static_cast<int>(tree.nodes.size()));
        open.push_back(static_cast<int>(tree.nodes.size()));
        tree.nodes.push_back({0, 1, w, 0, {}});
    }
    while (!open.empty()) {
        std::vector<int> next;
        for (int x : open) {
            const int t = tree.nodes[x].depth;
            const VertexSet w = tree.nodes[x].label;
            const VertexSet forced = w & s.layers[t - 1];
            if (!forced) throw InternalError("white component received no force in a completed PSD schedule");
            tree.nodes[x].forced = forced;
            for (VertexSet c : connected_components(g, w & ~forced)) {
                const int id = static_cast<int>(tree.nodes.size());
                tree.nodes[x].children.push_back(id);
                tree.nodes.push_back({x, t + 1, c, 0, {}});
                next.push_back(id);
            }
        }
        open = std::move(next);
    }
    return tree;
}

} // namespace zft
