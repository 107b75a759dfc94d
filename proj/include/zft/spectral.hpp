#pragma once

#include <cmath>
#include <vector>

#include "zft/enumerate.hpp"

namespace zft {

inline constexpr double kSpectralTieTolerance = 1e-7;
inline constexpr int kSpectralMaxVertices = 7;

/// Largest adjacency eigenvalue, by power iteration on A + nI (the shift
/// makes the top eigenvalue strictly dominant in absolute value).
inline double spectral_radius(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw DomainError("spectral radius of the empty graph");
    if (g.size() == 0) return 0.0;
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
    double rayleigh = 0.0;
    for (int iter = 0; iter < 100000; ++iter) {
        for (int v = 0; v < n; ++v) {
            double sum = n * x[v];
            for (int w : members(g.neighbors(v))) sum += x[w];
            y[v] = sum;
        }
        double dot = 0.0, norm = 0.0;
        for (int v = 0; v < n; ++v) {
            dot += x[v] * y[v];
            norm += y[v] * y[v];
        }
        norm = std::sqrt(norm);
        for (int v = 0; v < n; ++v) x[v] = y[v] / norm;
        const bool done = iter > 0 && std::abs(dot - rayleigh) < 1e-12;
        rayleigh = dot;
        if (done) break;
    }
    return rayleigh - n;
}

/// Connected (n, m)-graphs within the tie tolerance of the largest spectral radius.
inline std::vector<Graph> max_spectral_graphs(int n, int m) {
    if (n < 1 || n > kSpectralMaxVertices)
        throw CapacityError("extremal spectral search supports 1 <= n <= 7, got " + std::to_string(n));
    std::vector<std::pair<double, Graph>> candidates;
    for (const auto& g : enumerate_connected(n))
        if (g.size() == m) candidates.emplace_back(spectral_radius(g), g);
    if (candidates.empty())
        throw DomainError("no connected graph with " + std::to_string(n) + " vertices and " + std::to_string(m) +
                          " edges");
    double best = candidates.front().first;
    for (const auto& [r, g] : candidates) best = std::max(best, r);
    std::vector<Graph> out;
    for (auto& [r, g] : candidates)
        if (r >= best - kSpectralTieTolerance) out.push_back(std::move(g));
    return out;
}

} // namespace zft
