#pragma once

// Deliberately naive reference implementations used to cross-check the
// library. Nothing here uses the bitset machinery beyond reading edges.

#include <algorithm>
#include <vector>

#include "zft/graph.hpp"

namespace oracle {

struct Matrix {
    int n = 0;
    std::vector<std::vector<bool>> a;

    explicit Matrix(const zft::Graph& g) : n(g.order()), a(n, std::vector<bool>(n, false)) {
        for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = true;
    }
};

inline std::vector<bool> to_flags(int n, unsigned mask) {
    std::vector<bool> f(n);
    for (int v = 0; v < n; ++v) f[v] = (mask >> v) & 1u;
    return f;
}

/// component id of every white vertex (-1 for blue), via DFS.
inline std::vector<int> white_components(const Matrix& m, const std::vector<bool>& blue) {
    std::vector<int> comp(m.n, -1);
    int next = 0;
    for (int s = 0; s < m.n; ++s) {
        if (blue[s] || comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = next;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < m.n; ++w)
                if (m.a[v][w] && !blue[w] && comp[w] < 0) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

/// Propagation time under Z (psd = false) or Z+ (psd = true); -1 if it stalls.
inline int propagation_time(const Matrix& m, std::vector<bool> blue, bool psd) {
    int t = 0;
    while (std::count(blue.begin(), blue.end(), true) < m.n) {
        std::vector<bool> add(m.n, false);
        const auto comp = psd ? white_components(m, blue) : std::vector<int>(m.n, 0);
        for (int u = 0; u < m.n; ++u) {
            if (!blue[u]) continue;
            // count white neighbors per component
            std::vector<int> count(m.n + 1, 0), last(m.n + 1, -1);
            for (int w = 0; w < m.n; ++w)
                if (m.a[u][w] && !blue[w]) {
                    ++count[comp[w]];
                    last[comp[w]] = w;
                }
            for (int c = 0; c <= m.n; ++c)
                if (count[c] == 1) add[last[c]] = true;
        }
        if (std::find(add.begin(), add.end(), true) == add.end()) return -1;
        for (int v = 0; v < m.n; ++v)
            if (add[v]) blue[v] = true;
        ++t;
    }
    return t;
}

/// Throttling number under Z or Z+ by trying every subset.
inline int throttling(const zft::Graph& g, bool psd) {
    const Matrix m(g);
    int best = m.n;
    for (unsigned mask = 0; mask < (1u << m.n); ++mask) {
        const int pt = propagation_time(m, to_flags(m.n, mask), psd);
        if (pt < 0) continue;
        best = std::min(best, __builtin_popcount(mask) + pt);
    }
    return best;
}

/// Floor-rule throttling through the spanning supergraph characterization,
/// computed with the naive propagator above.
inline int floor_throttling_by_supergraphs(const zft::Graph& g, bool psd) {
    std::vector<zft::Edge> missing;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) missing.push_back({u, v});
    int best = g.order();
    for (unsigned sub = 0; sub < (1u << missing.size()); ++sub) {
        auto edges = g.edges();
        for (std::size_t i = 0; i < missing.size(); ++i)
            if ((sub >> i) & 1u) edges.push_back(missing[i]);
        best = std::min(best, throttling(zft::Graph(g.order(), edges), psd));
    }
    return best;
}

/// Accelerator test by assigning every vertex a role: S_i only, T_i only, or
/// T_i together with S_{i+1}. Checks the block conditions directly.
inline bool accelerator(const zft::Graph& g, const std::vector<int>& comp) {
    const Matrix m(g);
    const int r = static_cast<int>(comp.size());
    // role 3i: S_i only, 3i+1: T_i only, 3i+2: T_i and S_{i+1}
    std::vector<int> role(m.n, -1);
    auto in_s = [&](int v, int i) {
        return role[v] == 3 * i || (i > 0 && role[v] == 3 * (i - 1) + 2);
    };
    auto in_t = [&](int v, int i) { return role[v] == 3 * i + 1 || role[v] == 3 * i + 2; };
    auto valid = [&] {
        for (int i = 0; i < r; ++i) {
            int ns = 0, nt = 0;
            for (int v = 0; v < m.n; ++v) {
                ns += in_s(v, i);
                nt += in_t(v, i);
            }
            if (ns != comp[i] + 1 || nt != comp[i] + 1) return false;
        }
        for (int i = 0; i < r; ++i)
            for (int u = 0; u < m.n; ++u) {
                if (in_t(u, i)) {
                    int hits = 0;
                    for (int v = 0; v < m.n; ++v) hits += in_s(v, i) && m.a[u][v];
                    if (hits != 1) return false;
                }
                if (!in_s(u, i)) continue;
                int own = 0, later = 0;
                for (int v = 0; v < m.n; ++v) {
                    if (!m.a[u][v]) continue;
                    own += in_t(v, i);
                    for (int j = i; j < r; ++j) later += in_t(v, j);
                }
                if (own != 1 || later != 1) return false;
                if (i > 0 && !in_t(u, i - 1)) {
                    bool dominated = false;
                    for (int v = 0; v < m.n; ++v) dominated = dominated || (m.a[u][v] && in_t(v, i - 1));
                    if (!dominated) return false;
                }
            }
        return true;
    };
    // role capacities for one choice of overlaps |T_i ∩ S_{i+1}|
    std::vector<int> cap(3 * r, 0), count(3 * r, 0);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == m.n) return valid();
        for (int x = 0; x < 3 * r; ++x) {
            if (count[x] == cap[x]) continue;
            ++count[x];
            role[v] = x;
            const bool ok = self(self, v + 1);
            --count[x];
            if (ok) return true;
        }
        role[v] = -1;
        return false;
    };
    std::vector<int> overlap(r, 0);
    auto choose = [&](auto&& self, int i) -> bool {
        if (i + 1 >= r) {
            int total = 0;
            for (int j = 0; j < r; ++j) {
                const int in = j > 0 ? overlap[j - 1] : 0;
                cap[3 * j] = comp[j] + 1 - in;
                cap[3 * j + 2] = j + 1 < r ? overlap[j] : 0;
                cap[3 * j + 1] = comp[j] + 1 - cap[3 * j + 2];
                total += cap[3 * j] + cap[3 * j + 1] + cap[3 * j + 2];
            }
            return total == m.n && rec(rec, 0);
        }
        for (int o = 0; o <= std::min(comp[i], comp[i + 1]) + 1; ++o) {
            overlap[i] = o;
            if (self(self, i + 1)) return true;
        }
        return false;
    };
    return choose(choose, 0);
}

} // namespace oracle
