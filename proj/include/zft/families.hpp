#pragma once

#include <vector>

#include "zft/graph.hpp"

namespace zft {

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
    return Graph(n, e);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw DomainError("cycles need at least 3 vertices");
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
    return Graph(n, e);
}

inline Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph(n, e);
}

inline Graph complete_bipartite(int p, int q) {
    std::vector<Edge> e;
    for (int u = 0; u < p; ++u)
        for (int v = 0; v < q; ++v) e.push_back({u, p + v});
    return Graph(p + q, e);
}

/// K_{1,m} with center 0.
inline Graph star_graph(int m) { return complete_bipartite(1, m); }

/// G □ H with vertex (g, h) numbered g * |H| + h.
inline Graph cartesian_product(const Graph& a, const Graph& b) {
    const int n = a.order() * b.order();
    if (n > Graph::kMaxVertices) throw CapacityError("product exceeds 32 vertices");
    std::vector<Edge> e;
    for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < b.order(); ++y) {
            for (int y2 : members(b.neighbors(y)))
                if (y < y2) e.push_back({x * b.order() + y, x * b.order() + y2});
            for (int x2 : members(a.neighbors(x)))
                if (x < x2) e.push_back({x * b.order() + y, x2 * b.order() + y});
        }
    return Graph(n, e);
}

} // namespace zft
