#pragma once

#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "zft/canonical.hpp"

namespace zft {

inline constexpr int kEnumerateMaxVertices = 7;

namespace detail {

// Every graph on k+1 vertices arises from a graph on k vertices by adding one
// vertex with some neighborhood; dedup by canonical form at each order.
inline std::vector<Graph> extend_by_vertex(const std::vector<Graph>& smaller, int k) {
    std::set<std::string> seen;
    std::vector<std::pair<std::string, Graph>> found;
    for (const auto& g : smaller) {
        std::vector<VertexSet> adj(g.adjacency().begin(), g.adjacency().end());
        adj.push_back(0);
        for (VertexSet nbrs = 0; nbrs < (VertexSet{1} << k); ++nbrs) {
            std::vector<VertexSet> a = adj;
            a[k] = nbrs;
            for (int v : members(nbrs)) a[v] |= bit(k);
            Graph h = canonical_graph(Graph::from_adjacency(k + 1, a));
            std::string form = emit_graph6(h);
            if (seen.insert(form).second) found.emplace_back(std::move(form), std::move(h));
        }
    }
    std::ranges::sort(found, [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(found.size());
    for (auto& [form, h] : found) out.push_back(std::move(h));
    return out;
}

/// All graphs (connected or not) on n vertices, one canonical representative
/// per isomorphism class, sorted by canonical form. Cached; callers may pass
/// n up to 8 (8 is used only by tests and catalog cross-checks).
inline const std::vector<Graph>& all_graphs_cached(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard lock(mu);
    if (cache.empty()) cache[0] = {Graph(0)};
    if (n <= 0) return cache[0];
    int have = n;
    while (!cache.contains(have)) --have;
    for (int k = have; k < n; ++k) cache[k + 1] = extend_by_vertex(cache[k], k);
    return cache[n];
}

} // namespace detail

/// One representative per isomorphism class of graphs on n vertices.
inline std::vector<Graph> enumerate_all(int n) {
    if (n < 0) throw DomainError("negative order");
    if (n > kEnumerateMaxVertices)
        throw CapacityError("built-in enumeration stops at 7 vertices; ingest larger corpora as graph6 (e.g. geng output)");
    return detail::all_graphs_cached(n);
}

/// One representative per isomorphism class of connected graphs on n vertices
/// (counts 1, 1, 2, 6, 21, 112, 853 for n = 1..7).
inline std::vector<Graph> enumerate_connected(int n) {
    if (n < 1) throw DomainError("connected enumeration needs n >= 1");
    std::vector<Graph> out;
    for (const auto& g : enumerate_all(n))
        if (is_connected(g)) out.push_back(g);
    return out;
}

/// Connected graphs with nmin <= n <= nmax, in order of n.
inline std::vector<Graph> connected_corpus(int nmin, int nmax) {
    std::vector<Graph> out;
    for (int n = std::max(nmin, 1); n <= nmax; ++n) {
        auto part = enumerate_connected(n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace zft
