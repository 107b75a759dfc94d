#pragma once

#include <algorithm>
#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zft/bits.hpp"
#include "zft/errors.hpp"

namespace zft {

struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on at most 32 vertices, stored as neighbor bitsets.
///
/// Values are immutable once built: every "mutating" operation returns a new
/// graph. Vertices may carry string labels; contraction and induced subgraphs
/// carry labels through. Equality compares structure only.
class Graph {
public:
    static constexpr int kMaxVertices = 32;

    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices)
            throw CapacityError("graph order " + std::to_string(n) + " outside [0, 32]");
    }

    Graph(int n, std::span<const Edge> edges) : Graph(n) {
        for (const auto& e : edges) connect(e.u, e.v);
    }

    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    /// Builds from raw neighbor sets; rejects asymmetric input, loops and out-of-range bits.
    static Graph from_adjacency(int n, std::span<const VertexSet> adj) {
        Graph g(n);
        if (static_cast<int>(adj.size()) < n)
            throw DomainError("adjacency has fewer rows than vertices");
        const VertexSet all = all_vertices(n);
        for (int v = 0; v < n; ++v) {
            if (!is_subset(adj[v], all) || contains(adj[v], v))
                throw DomainError("adjacency row " + std::to_string(v) + " has a loop or out-of-range bit");
            g.adj_[v] = adj[v];
        }
        for (int v = 0; v < n; ++v)
            for (int w : members(adj[v]))
                if (!contains(adj[w], v)) throw DomainError("adjacency is not symmetric");
        return g;
    }

    int order() const noexcept { return n_; }
    int size() const noexcept {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += popcount(adj_[v]);
        return twice / 2;
    }
    VertexSet vertices() const noexcept { return all_vertices(n_); }
    VertexSet neighbors(int v) const noexcept { return adj_[v]; }
    int degree(int v) const noexcept { return popcount(adj_[v]); }
    bool adjacent(int u, int v) const noexcept { return contains(adj_[u], v); }
    bool has_vertex(int v) const noexcept { return v >= 0 && v < n_; }

    std::span<const VertexSet> adjacency() const noexcept { return {adj_.data(), static_cast<std::size_t>(n_)}; }

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v : members(adj_[u] & ~all_vertices(u + 1))) out.push_back({u, v});
        return out;
    }

    bool labeled() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// The vertex label, or its decimal index when the graph is unlabeled.
    std::string label(int v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }

    Graph with_labels(std::vector<std::string> labels) const {
        if (!labels.empty() && static_cast<int>(labels.size()) != n_)
            throw DomainError("label count does not match graph order");
        Graph g = *this;
        g.labels_ = std::move(labels);
        return g;
    }

    Graph without_labels() const {
        Graph g = *this;
        g.labels_.clear();
        return g;
    }

    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        if (a.n_ != b.n_) return false;
        for (int v = 0; v < a.n_; ++v)
            if (a.adj_[v] != b.adj_[v]) return false;
        return true;
    }

private:
    void connect(int u, int v) {
        if (!has_vertex(u) || !has_vertex(v) || u == v)
            throw InvalidEdgeError("invalid edge " + std::to_string(u) + "-" + std::to_string(v));
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }

    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
    std::vector<std::string> labels_;
};

inline void require_edge(const Graph& g, int u, int v) {
    if (!g.has_vertex(u) || !g.has_vertex(v) || u == v || !g.adjacent(u, v))
        throw InvalidEdgeError(std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
}

inline Graph add_edge(const Graph& g, int u, int v) {
    if (!g.has_vertex(u) || !g.has_vertex(v) || u == v)
        throw InvalidEdgeError("cannot add edge " + std::to_string(u) + "-" + std::to_string(v));
    std::array<VertexSet, Graph::kMaxVertices> adj{};
    std::ranges::copy(g.adjacency(), adj.begin());
    adj[u] |= bit(v);
    adj[v] |= bit(u);
    return Graph::from_adjacency(g.order(), adj).with_labels(g.labels());
}

inline Graph delete_edge(const Graph& g, int u, int v) {
    require_edge(g, u, v);
    std::array<VertexSet, Graph::kMaxVertices> adj{};
    std::ranges::copy(g.adjacency(), adj.begin());
    adj[u] &= ~bit(v);
    adj[v] &= ~bit(u);
    return Graph::from_adjacency(g.order(), adj).with_labels(g.labels());
}

/// G[S], vertices renumbered in increasing order of their index in G.
inline Graph induced_subgraph(const Graph& g, VertexSet s) {
    s &= g.vertices();
    std::array<int, Graph::kMaxVertices> pos{};
    int m = 0;
    for (int v : members(s)) pos[v] = m++;
    std::array<VertexSet, Graph::kMaxVertices> adj{};
    std::vector<std::string> labels;
    for (int v : members(s)) {
        for (int w : members(g.neighbors(v) & s)) adj[pos[v]] |= bit(pos[w]);
        if (g.labeled()) labels.push_back(g.label(v));
    }
    return Graph::from_adjacency(m, adj).with_labels(std::move(labels));
}

/// Vertex set of the connected component of `within` containing `start`
/// (in the subgraph induced by `within`).
inline VertexSet component_of(const Graph& g, int start, VertexSet within) {
    VertexSet seen = bit(start);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (int v : members(frontier)) next |= g.neighbors(v);
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

/// Components of G[within], ordered by their smallest vertex.
inline std::vector<VertexSet> connected_components(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet rest = within & g.vertices();
    while (rest) {
        VertexSet c = component_of(g, lowest(rest), rest);
        out.push_back(c);
        rest &= ~c;
    }
    return out;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
    return connected_components(g, g.vertices());
}

inline bool is_connected(const Graph& g) {
    return g.order() == 0 || component_of(g, 0, g.vertices()) == g.vertices();
}

inline Graph complement(const Graph& g) {
    std::array<VertexSet, Graph::kMaxVertices> adj{};
    for (int v = 0; v < g.order(); ++v) adj[v] = g.vertices() & ~g.neighbors(v) & ~bit(v);
    return Graph::from_adjacency(g.order(), adj).with_labels(g.labels());
}

/// a followed by b; b's vertices are shifted by |a|.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    const int n = a.order() + b.order();
    if (n > Graph::kMaxVertices) throw CapacityError("disjoint union exceeds 32 vertices");
    std::array<VertexSet, Graph::kMaxVertices> adj{};
    for (int v = 0; v < a.order(); ++v) adj[v] = a.neighbors(v);
    for (int v = 0; v < b.order(); ++v) adj[a.order() + v] = b.neighbors(v) << a.order();
    Graph g = Graph::from_adjacency(n, adj);
    if (a.labeled() || b.labeled()) {
        std::vector<std::string> labels;
        for (int v = 0; v < a.order(); ++v) labels.push_back(a.label(v));
        for (int v = 0; v < b.order(); ++v) labels.push_back(b.label(v));
        g = g.with_labels(std::move(labels));
    }
    return g;
}

/// Renumbers vertices: vertex v of g becomes perm[v].
inline Graph permute(const Graph& g, std::span<const int> perm) {
    std::array<VertexSet, Graph::kMaxVertices> adj{};
    for (int v = 0; v < g.order(); ++v)
        for (int w : members(g.neighbors(v))) adj[perm[v]] |= bit(perm[w]);
    Graph out = Graph::from_adjacency(g.order(), adj);
    if (g.labeled()) {
        std::vector<std::string> labels(g.order());
        for (int v = 0; v < g.order(); ++v) labels[perm[v]] = g.label(v);
        out = out.with_labels(std::move(labels));
    }
    return out;
}

/// G/uv. The merged vertex takes index min(u, v) and the label of u; vertices
/// above max(u, v) shift down by one. Parallel edges and loops collapse.
inline Graph contract_edge(const Graph& g, int u, int v) {
    require_edge(g, u, v);
    const int keep = std::min(u, v);
    const int drop = std::max(u, v);
    auto renumber = [&](int x) { return x == drop ? keep : (x > drop ? x - 1 : x); };
    std::array<VertexSet, Graph::kMaxVertices> adj{};
    for (int x = 0; x < g.order(); ++x)
        for (int y : members(g.neighbors(x))) {
            const int a = renumber(x);
            const int b = renumber(y);
            if (a != b) adj[a] |= bit(b);
        }
    Graph out = Graph::from_adjacency(g.order() - 1, adj);
    if (g.labeled()) {
        std::vector<std::string> labels;
        for (int x = 0; x < g.order(); ++x) {
            if (x == drop) continue;
            labels.push_back(x == keep ? g.label(u) : g.label(x));
        }
        out = out.with_labels(std::move(labels));
    }
    return out;
}

/// Edge list text: "n m" header, then one "u v" pair per line (0-based).
inline std::string emit_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

} // namespace zft
