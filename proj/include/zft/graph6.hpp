#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "zft/graph.hpp"

namespace zft {

// graph6 as published with nauty: N(n) followed by the upper triangle of the
// adjacency matrix, column by column, packed six bits per byte, each byte
// offset by 63. Only n <= 32 is accepted here.

namespace detail {

inline std::string_view trim_line_end(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

} // namespace detail

inline Graph parse_graph6(std::string_view text) {
    text = detail::trim_line_end(text);
    std::size_t pos = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) pos = header.size();

    auto byte_at = [&](std::size_t i) -> int {
        if (i >= text.size()) throw ParseError("graph6 input truncated", i);
        const int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", i);
        return c - 63;
    };

    long n = 0;
    if (pos >= text.size()) throw ParseError("empty graph6 string", pos);
    if (static_cast<unsigned char>(text[pos]) == 126) {
        if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126)
            throw CapacityError("graph6 order exceeds 32 vertices");
        for (int k = 1; k <= 3; ++k) n = (n << 6) | byte_at(pos + k);
        pos += 4;
    } else {
        n = byte_at(pos);
        pos += 1;
    }
    if (n > Graph::kMaxVertices) throw CapacityError("graph6 order " + std::to_string(n) + " exceeds 32 vertices");

    const long bits = n * (n - 1) / 2;
    const long bytes = (bits + 5) / 6;
    if (static_cast<long>(text.size() - pos) < bytes) throw ParseError("graph6 input truncated", text.size());
    if (static_cast<long>(text.size() - pos) > bytes) throw ParseError("trailing garbage after graph6 data", pos + bytes);

    std::vector<Edge> edges;
    long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int chunk = byte_at(pos + k / 6);
            if ((chunk >> (5 - k % 6)) & 1) edges.push_back({i, j});
        }
    if (bits % 6 != 0) {
        const int last = byte_at(pos + bytes - 1);
        if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError("nonzero graph6 padding bits", pos + bytes - 1);
    }
    return Graph(static_cast<int>(n), edges);
}

inline std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out(1, static_cast<char>(63 + n));
    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(63 + chunk);
                chunk = filled = 0;
            }
        }
    if (filled > 0) out += static_cast<char>(63 + (chunk << (6 - filled)));
    return out;
}

/// Parses "n m" followed by m lines "u v" (0-based). Whitespace-separated.
inline Graph parse_edge_list(std::string_view text) {
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
            ++pos;
    };
    auto read_int = [&](const char* what) {
        skip_space();
        int value = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr == first) throw ParseError(std::string("expected ") + what, pos);
        const std::size_t start = pos;
        pos = static_cast<std::size_t>(ptr - text.data());
        if (value < 0) throw ParseError(std::string("negative ") + what, start);
        return std::pair{value, start};
    };

    const auto [n, n_at] = read_int("vertex count");
    if (n > Graph::kMaxVertices) throw CapacityError("edge list order " + std::to_string(n) + " exceeds 32 vertices");
    const auto [m, m_at] = read_int("edge count");
    (void)n_at;
    (void)m_at;
    std::vector<VertexSet> adj(n, 0);
    for (int e = 0; e < m; ++e) {
        const auto [u, u_at] = read_int("edge endpoint");
        const auto [v, v_at] = read_int("edge endpoint");
        if (u >= n) throw ParseError("vertex out of range", u_at);
        if (v >= n) throw ParseError("vertex out of range", v_at);
        if (u == v) throw ParseError("loop edge", u_at);
        if (contains(adj[u], v)) throw ParseError("duplicate edge", u_at);
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
    skip_space();
    if (pos != text.size()) throw ParseError("trailing garbage after edge list", pos);
    return Graph::from_adjacency(n, adj);
}

} // namespace zft
