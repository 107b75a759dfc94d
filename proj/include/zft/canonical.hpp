#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "zft/graph.hpp"
#include "zft/graph6.hpp"

namespace zft {

// Canonical labeling by individualization-refinement. Each search node holds an
// ordered partition (vertex -> cell index); refinement splits cells by counts of
// neighbors in every cell until equitable. Leaves are discrete partitions and
// the labeling with the lexicographically largest permuted adjacency wins.
//
// Branching skips a vertex when an already explored vertex of the same cell is
// its twin (N(u) - v == N(v) - u): the transposition is an automorphism fixing
// the node, so both subtrees yield the same leaf certificates. Disconnected
// graphs are labeled component by component and the components sorted.

inline constexpr int kCanonicalMaxVertices = 16;

namespace detail {

using Coloring = std::vector<int>;

inline int cell_count(const Coloring& c) { return c.empty() ? 0 : *std::ranges::max_element(c) + 1; }

/// Refines to the coarsest equitable partition finer than `colors`.
inline void refine(const Graph& g, Coloring& colors) {
    const int n = g.order();
    std::vector<int> order(n);
    std::vector<std::vector<int>> keys(n);
    int cells = cell_count(colors);
    while (true) {
        for (int v = 0; v < n; ++v) {
            auto& key = keys[v];
            key.assign(cells + 1, 0);
            key[0] = colors[v];
            for (int w : members(g.neighbors(v))) ++key[colors[w] + 1];
        }
        std::iota(order.begin(), order.end(), 0);
        std::ranges::sort(order, [&](int a, int b) { return keys[a] < keys[b]; });
        int next = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && keys[order[i]] != keys[order[i - 1]]) ++next;
            colors[order[i]] = next;
        }
        const int refined = n == 0 ? 0 : next + 1;
        if (refined == cells) return;
        cells = refined;
    }
}

inline bool twins(const Graph& g, int u, int v) {
    return (g.neighbors(u) & ~bit(v)) == (g.neighbors(v) & ~bit(u));
}

struct CanonSearch {
    const Graph& g;
    std::vector<VertexSet> best_cert;
    std::vector<int> best_perm;

    void leaf(const Coloring& colors) {
        const int n = g.order();
        std::vector<VertexSet> cert(n, 0);
        for (int v = 0; v < n; ++v)
            for (int w : members(g.neighbors(v))) cert[colors[v]] |= bit(colors[w]);
        if (best_perm.empty() || cert > best_cert) {
            best_cert = std::move(cert);
            best_perm = colors;
        }
    }

    void search(Coloring colors) {
        refine(g, colors);
        const int n = g.order();
        const int cells = cell_count(colors);
        if (cells == n) {
            leaf(colors);
            return;
        }
        std::vector<int> size(cells, 0);
        for (int c : colors) ++size[c];
        int target = -1;
        for (int c = 0; c < cells; ++c)
            if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;

        std::vector<int> explored;
        for (int v = 0; v < n; ++v) {
            if (colors[v] != target) continue;
            if (std::ranges::any_of(explored, [&](int u) { return twins(g, u, v); })) continue;
            explored.push_back(v);
            Coloring child(n);
            for (int w = 0; w < n; ++w) {
                const int c = colors[w];
                child[w] = 2 * c + (c == target && w != v ? 1 : 0);
            }
            // compress to consecutive cell indices, keeping order
            std::vector<int> used(2 * cells, 0);
            for (int c : child) used[c] = 1;
            std::vector<int> rank(2 * cells, 0);
            for (int c = 0, r = 0; c < 2 * cells; ++c)
                if (used[c]) rank[c] = r++;
            for (int& c : child) c = rank[c];
            search(std::move(child));
        }
    }
};

inline std::vector<int> canonical_labeling_connected(const Graph& g) {
    CanonSearch s{g, {}, {}};
    s.search(detail::Coloring(g.order(), 0));
    return s.best_perm;
}

} // namespace detail

/// Permutation perm with permute(g, perm) canonical: equal for isomorphic graphs.
inline std::vector<int> canonical_labeling(const Graph& g) {
    if (g.order() > kCanonicalMaxVertices)
        throw CapacityError("canonical form supports at most 16 vertices, got " + std::to_string(g.order()));
    const auto comps = connected_components(g);
    if (comps.size() <= 1) return detail::canonical_labeling_connected(g);

    struct Piece {
        VertexSet set;
        std::vector<int> local;
        std::string form;
    };
    std::vector<Piece> pieces;
    for (VertexSet c : comps) {
        Graph sub = induced_subgraph(g, c).without_labels();
        auto local = detail::canonical_labeling_connected(sub);
        pieces.push_back({c, local, emit_graph6(permute(sub, local))});
    }
    std::ranges::stable_sort(pieces, [](const Piece& a, const Piece& b) {
        if (a.form.size() != b.form.size()) return a.form.size() > b.form.size();
        return a.form > b.form;
    });
    std::vector<int> perm(g.order());
    int offset = 0;
    for (const auto& p : pieces) {
        int i = 0;
        for (int v : members(p.set)) perm[v] = offset + p.local[i++];
        offset += popcount(p.set);
    }
    return perm;
}

inline Graph canonical_graph(const Graph& g) {
    const auto perm = canonical_labeling(g);
    return permute(g.without_labels(), perm);
}

/// Byte string that is equal for two graphs iff they are isomorphic
/// (graph6 of the canonically relabeled graph).
inline std::string canonical_form(const Graph& g) { return emit_graph6(canonical_graph(g)); }

inline bool isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

} // namespace zft
