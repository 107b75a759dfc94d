#pragma once

#include <array>
#include <optional>
#include <vector>

#include "zft/graph.hpp"

namespace zft {

/// Injective map pattern vertex -> host vertex preserving edges and non-edges.
using Embedding = std::vector<int>;

namespace detail {

struct InducedSearch {
    const Graph& pattern;
    const Graph& host;
    std::array<int, Graph::kMaxVertices> image{};

    bool extend(int i, VertexSet used) {
        if (i == pattern.order()) return true;
        VertexSet cand = host.vertices() & ~used;
        for (int j = 0; j < i; ++j) {
            if (pattern.adjacent(i, j))
                cand &= host.neighbors(image[j]);
            else
                cand &= ~host.neighbors(image[j]);
        }
        for (int h : members(cand)) {
            if (host.degree(h) < pattern.degree(i)) continue;
            image[i] = h;
            if (extend(i + 1, used | bit(h))) return true;
        }
        return false;
    }
};

} // namespace detail

/// First induced embedding in lexicographic order of (image[0], image[1], ...),
/// or nullopt when pattern is not an induced subgraph of host.
inline std::optional<Embedding> induced_subgraph_search(const Graph& pattern, const Graph& host) {
    if (pattern.order() > host.order()) return std::nullopt;
    detail::InducedSearch s{pattern, host, {}};
    if (!s.extend(0, 0)) return std::nullopt;
    return Embedding(s.image.begin(), s.image.begin() + pattern.order());
}

inline bool contains_induced(const Graph& pattern, const Graph& host) {
    return induced_subgraph_search(pattern, host).has_value();
}

} // namespace zft
