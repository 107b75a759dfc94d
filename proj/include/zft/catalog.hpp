#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "zft/canonical.hpp"
#include "zft/families.hpp"
#include "zft/induced.hpp"
#include "zft/parallel.hpp"

namespace zft {

struct NamedGraph {
    std::string name;
    Graph graph;
};

inline const std::vector<NamedGraph>& named_graphs() {
    static const std::vector<NamedGraph> list = [] {
        std::vector<NamedGraph> v;
        v.push_back({"P4", path_graph(4)});
        v.push_back({"C4", cycle_graph(4)});
        v.push_back({"C5", cycle_graph(5)});
        v.push_back({"bowtie", Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}})});
        // square 0-1-2-3 with roof vertex 4 over the edge 0-1
        v.push_back({"house", Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}})});
        // diamonds {0,1,2,3} (spine 1-2) and {2,3,4,5} (spine 3-4) share the edge 2-3:
        // a strip of four triangles
        v.push_back({"double_diamond",
                     Graph(6, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}})});
        v.push_back({"K2bar", empty_graph(2)});
        v.push_back({"K3bar", empty_graph(3)});
        v.push_back({"twoK2", Graph(4, {{0, 1}, {2, 3}})});
        v.push_back({"K2xP3", cartesian_product(complete_graph(2), path_graph(3))});
        v.push_back({"K2xP4", cartesian_product(complete_graph(2), path_graph(4))});
        for (auto& g : v) {
            std::vector<std::string> labels;
            for (int i = 0; i < g.graph.order(); ++i) labels.push_back("v" + std::to_string(i + 1));
            g.graph = g.graph.with_labels(std::move(labels));
        }
        return v;
    }();
    return list;
}

inline const Graph& named_graph(std::string_view name) {
    for (const auto& g : named_graphs())
        if (g.name == name) return g.graph;
    std::string known;
    for (const auto& g : named_graphs()) known += (known.empty() ? "" : ", ") + g.name;
    throw UsageError("unknown graph name '" + std::string(name) + "' (known: " + known + ")");
}

namespace detail {

inline void require_connected(const Graph& g) {
    if (!is_connected(g) || g.order() == 0) throw DomainError("the classifier needs a connected graph");
}

} // namespace detail

/// th(G) = |V(G)| iff G has no induced P4, C4 or bowtie.
inline bool classify_th_eq_n(const Graph& g) {
    detail::require_connected(g);
    for (const char* name : {"P4", "C4", "bowtie"})
        if (contains_induced(named_graph(name), g)) return false;
    return true;
}

enum class ThPlusClass { equals_n, equals_n_minus_1, below };

inline const char* to_string(ThPlusClass c) {
    switch (c) {
    case ThPlusClass::equals_n: return "equals_n";
    case ThPlusClass::equals_n_minus_1: return "equals_n_minus_1";
    case ThPlusClass::below: return "below";
    }
    return "?";
}

inline ThPlusClass classify_thplus(const Graph& g) {
    detail::require_connected(g);
    if (!contains_induced(named_graph("K2bar"), g)) return ThPlusClass::equals_n;
    for (const char* name : {"K3bar", "C5", "house", "double_diamond"})
        if (contains_induced(named_graph(name), g)) return ThPlusClass::below;
    return ThPlusClass::equals_n_minus_1;
}

/// Blocks S_i, T_i of an (a_1, ..., a_r)-accelerator. s[i][j] is matched to t[i][j].
struct AcceleratorDecomposition {
    std::vector<int> composition;
    std::vector<std::vector<int>> s;
    std::vector<std::vector<int>> t;

    VertexSet s_set(int i) const {
        VertexSet x = 0;
        for (int v : s[i]) x |= bit(v);
        return x;
    }
    VertexSet t_set(int i) const {
        VertexSet x = 0;
        for (int v : t[i]) x |= bit(v);
        return x;
    }
    /// S_1 together with every S_i minus T_{i-1}.
    VertexSet initial_set() const {
        VertexSet b = 0;
        for (std::size_t i = 0; i < s.size(); ++i) b |= s_set(static_cast<int>(i)) & ~(i ? t_set(static_cast<int>(i) - 1) : 0);
        return b;
    }
};

namespace detail {

inline void require_composition(const std::vector<int>& composition) {
    if (composition.empty()) throw UsageError("composition needs at least one part");
    for (int a : composition)
        if (a < 1) throw UsageError("composition parts must be positive");
}

/// The edges between S and T are a perfect matching; returns T reordered to
/// follow S, or empty when they are not.
inline std::vector<int> matched_order(const Graph& g, const std::vector<int>& s, VertexSet t) {
    std::vector<int> out;
    for (int u : s) {
        const VertexSet hit = g.neighbors(u) & t;
        if (popcount(hit) != 1) return {};
        out.push_back(lowest(hit));
    }
    VertexSet seen = 0;
    for (int v : out) seen |= bit(v);
    if (seen != t) return {};
    return out;
}

/// Calls visit(subset) for every subset of `from` with `size` elements.
template <class Visit>
void for_each_subset_of(VertexSet from, int size, Visit&& visit) {
    std::vector<int> pool;
    for (int v : members(from)) pool.push_back(v);
    if (size > static_cast<int>(pool.size()) || size < 0) return;
    for_each_subset_of_size(static_cast<int>(pool.size()), size, [&](VertexSet local) {
        VertexSet x = 0;
        for (int i : members(local)) x |= bit(pool[i]);
        visit(x);
    });
}

struct AcceleratorSearch {
    const Graph& g;
    const std::vector<int>& comp;
    std::vector<VertexSet> s;
    std::vector<VertexSet> t;
    std::optional<AcceleratorDecomposition> found;

    void run(int i, VertexSet used, VertexSet sources) {
        if (found) return;
        const int r = static_cast<int>(comp.size());
        if (i == r) {
            if (used == g.vertices()) record();
            return;
        }
        const int size = comp[i] + 1;
        const VertexSet prev_t = i ? t[i - 1] : 0;
        const VertexSet free = g.vertices() & ~used;
        for (int o = i ? size : 0; o >= 0; --o)
            for_each_subset_of(prev_t, o, [&](VertexSet overlap) {
                for_each_subset_of(free, size - o, [&](VertexSet fresh) {
                    if (found) return;
                    const VertexSet si = overlap | fresh;
                    // S_i is dominated by T_{i-1}
                    if (i)
                        for (int u : members(si & ~prev_t))
                            if (!(g.neighbors(u) & prev_t)) return;
                    const VertexSet pool = free & ~fresh;
                    if (popcount(pool) < size) return;
                    for_each_subset_of(pool, size, [&](VertexSet ti) {
                        if (found) return;
                        // earlier sources see none of T_i; S_i sees only its match
                        for (int u : members(sources))
                            if (g.neighbors(u) & ti) return;
                        std::vector<int> sv;
                        for (int u : members(si)) sv.push_back(u);
                        if (matched_order(g, sv, ti).empty()) return;
                        s[i] = si;
                        t[i] = ti;
                        run(i + 1, used | fresh | ti, sources | si);
                    });
                });
            });
    }

    void record() {
        AcceleratorDecomposition d;
        d.composition = comp;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            std::vector<int> sv;
            for (int u : members(s[i])) sv.push_back(u);
            d.t.push_back(matched_order(g, sv, t[i]));
            d.s.push_back(std::move(sv));
        }
        found = std::move(d);
    }
};

} // namespace detail

/// Blocks S_i, T_i with |S_i| = |T_i| = a_i + 1 covering V(G) such that:
/// the S_i are disjoint, the T_i are disjoint, T_i meets only S_{i+1};
/// S_i and T_i are joined by a perfect matching and nothing else;
/// S_i is dominated by T_{i-1}; and no vertex of S_i is adjacent to any
/// vertex of T_i, T_{i+1}, ... other than its match. The last condition is
/// the reading of the "some edges" clauses under which S_1 together with the
/// S_i minus T_{i-1} forces T_i at time i.
inline std::optional<AcceleratorDecomposition> is_accelerator(const Graph& m, const std::vector<int>& composition) {
    detail::require_composition(composition);
    int most = 0;
    int overlap = 0;
    for (std::size_t i = 0; i < composition.size(); ++i) {
        most += 2 * (composition[i] + 1);
        if (i + 1 < composition.size()) overlap += std::min(composition[i], composition[i + 1]) + 1;
    }
    if (m.order() > most || m.order() < most - overlap) return std::nullopt;
    detail::AcceleratorSearch search{m, composition, std::vector<VertexSet>(composition.size()),
                                     std::vector<VertexSet>(composition.size()), std::nullopt};
    search.run(0, 0, 0);
    return search.found;
}

/// Whether the given blocks satisfy the conditions listed for is_accelerator.
inline bool check_decomposition(const Graph& g, const AcceleratorDecomposition& d) {
    const int r = static_cast<int>(d.composition.size());
    if (r == 0 || static_cast<int>(d.s.size()) != r || static_cast<int>(d.t.size()) != r) return false;
    VertexSet covered = 0, all_s = 0, all_t = 0;
    for (int i = 0; i < r; ++i) {
        if (d.composition[i] < 1) return false;
        if (static_cast<int>(d.s[i].size()) != d.composition[i] + 1 || d.t[i].size() != d.s[i].size()) return false;
        for (int v : d.s[i])
            if (!g.has_vertex(v)) return false;
        for (int v : d.t[i])
            if (!g.has_vertex(v)) return false;
        const VertexSet si = d.s_set(i), ti = d.t_set(i);
        if (popcount(si) != d.composition[i] + 1 || popcount(ti) != d.composition[i] + 1) return false;
        if ((si & all_s) || (ti & all_t)) return false;
        all_s |= si;
        all_t |= ti;
        covered |= si | ti;
    }
    if (covered != g.vertices()) return false;
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j)
            if (j != i + 1 && (d.t_set(i) & d.s_set(j))) return false;
        VertexSet later = 0;
        for (int m = i; m < r; ++m) later |= d.t_set(m);
        for (std::size_t j = 0; j < d.s[i].size(); ++j) {
            const int u = d.s[i][j];
            if (g.neighbors(u) & later) {
                if ((g.neighbors(u) & later) != bit(d.t[i][j])) return false;
            } else {
                return false;
            }
            if (popcount(g.neighbors(d.t[i][j]) & d.s_set(i)) != 1) return false;
            if (i > 0 && !contains(d.t_set(i - 1), u) && !(g.neighbors(u) & d.t_set(i - 1))) return false;
        }
    }
    return true;
}

/// Every ordered composition of `total` into positive parts, in lexicographic order.
inline std::vector<std::vector<int>> compositions(int total) {
    if (total < 0) throw DomainError("compositions of a negative number");
    if (total == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int first = 1; first <= total; ++first)
        for (auto rest : compositions(total - first)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    return out;
}

inline constexpr int kCatalogMaxK = 2;
inline constexpr int kLayoutMaxFreeEdges = 22;

struct CatalogMember {
    Graph graph; // canonical labeling
    AcceleratorDecomposition decomposition;
};

struct CatalogOptions {
    bool reduced = false;
    int max_vertices = -1; // -1: 4k + 4
};

namespace detail {

/// One vertex layout of an (a_1, ..., a_r)-accelerator: overlaps o_i = |T_i ∩ S_{i+1}|.
struct AcceleratorLayout {
    std::vector<int> composition;
    std::vector<std::vector<int>> s, t;
    int order = 0;
    std::vector<Edge> required;
    std::vector<Edge> free;
};

inline AcceleratorLayout make_layout(const std::vector<int>& comp, const std::vector<int>& overlaps) {
    AcceleratorLayout l;
    l.composition = comp;
    const int r = static_cast<int>(comp.size());
    int next = 0;
    for (int i = 0; i < r; ++i) {
        std::vector<int> si;
        if (i)
            for (int j = 0; j < overlaps[i - 1]; ++j) si.push_back(l.t[i - 1][j]);
        while (static_cast<int>(si.size()) < comp[i] + 1) si.push_back(next++);
        std::vector<int> ti;
        for (int j = 0; j <= comp[i]; ++j) ti.push_back(next++);
        l.s.push_back(std::move(si));
        l.t.push_back(std::move(ti));
    }
    l.order = next;
    std::vector<std::vector<char>> fixed(next, std::vector<char>(next, 0)); // 1 required, 2 forbidden
    for (int i = 0; i < r; ++i)
        for (int j = 0; j <= comp[i]; ++j) {
            const int u = l.s[i][j];
            for (int m = i; m < r; ++m)
                for (int v : l.t[m]) {
                    char& f = fixed[std::min(u, v)][std::max(u, v)];
                    if (m == i && v == l.t[i][j])
                        f = 1;
                    else if (f != 1)
                        f = 2;
                }
        }
    for (int u = 0; u < next; ++u)
        for (int v = u + 1; v < next; ++v) {
            if (fixed[u][v] == 1)
                l.required.push_back({u, v});
            else if (fixed[u][v] == 0)
                l.free.push_back({u, v});
        }
    return l;
}

inline std::vector<AcceleratorLayout> layouts(int k, int max_vertices) {
    std::vector<AcceleratorLayout> out;
    for (const auto& comp : compositions(k + 1)) {
        const int r = static_cast<int>(comp.size());
        std::vector<int> overlaps(std::max(0, r - 1), 0);
        std::function<void(int)> rec = [&](int i) {
            if (i == r - 1 || r == 1) {
                auto l = make_layout(comp, overlaps);
                if (l.order <= max_vertices) out.push_back(std::move(l));
                return;
            }
            for (int o = 0; o <= std::min(comp[i], comp[i + 1]) + 1; ++o) {
                overlaps[i] = o;
                rec(i + 1);
            }
        };
        rec(0);
    }
    return out;
}

struct LayoutMember {
    std::string form;
    CatalogMember member;
};

inline std::vector<LayoutMember> expand_layout(const AcceleratorLayout& l) {
    const int f = static_cast<int>(l.free.size());
    std::unordered_map<std::string, std::size_t> seen;
    std::vector<LayoutMember> out;
    std::vector<VertexSet> s_sets, t_sets;
    for (std::size_t i = 0; i < l.s.size(); ++i) {
        VertexSet a = 0, b = 0;
        for (int v : l.s[i]) a |= bit(v);
        for (int v : l.t[i]) b |= bit(v);
        s_sets.push_back(a);
        t_sets.push_back(b);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f); ++mask) {
        std::vector<Edge> edges = l.required;
        for (int i = 0; i < f; ++i)
            if ((mask >> i) & 1u) edges.push_back(l.free[i]);
        const Graph g(l.order, edges);
        bool dominated = true;
        for (std::size_t i = 1; i < l.s.size() && dominated; ++i)
            for (int u : members(s_sets[i] & ~t_sets[i - 1]))
                if (!(g.neighbors(u) & t_sets[i - 1])) dominated = false;
        if (!dominated) continue;
        const auto perm = canonical_labeling(g);
        Graph canon = permute(g, perm);
        std::string form = emit_graph6(canon);
        if (seen.contains(form)) continue;
        seen.emplace(form, out.size());
        AcceleratorDecomposition d;
        d.composition = l.composition;
        for (std::size_t i = 0; i < l.s.size(); ++i) {
            std::vector<int> si, ti;
            for (std::size_t j = 0; j < l.s[i].size(); ++j) {
                si.push_back(perm[l.s[i][j]]);
                ti.push_back(perm[l.t[i][j]]);
            }
            d.s.push_back(std::move(si));
            d.t.push_back(std::move(ti));
        }
        out.push_back({std::move(form), CatalogMember{std::move(canon), std::move(d)}});
    }
    return out;
}

using CatalogKey = std::tuple<int, int, bool>;

inline std::mutex& catalog_mutex() {
    static std::mutex m;
    return m;
}

inline std::map<CatalogKey, std::shared_ptr<const std::vector<CatalogMember>>>& catalog_cache() {
    static std::map<CatalogKey, std::shared_ptr<const std::vector<CatalogMember>>> c;
    return c;
}

} // namespace detail

/// G_k: every (a_1, ..., a_r)-accelerator with a_1 + ... + a_r = k + 1 and
/// at most max_vertices vertices, one canonical representative per
/// isomorphism class, sorted by (order, size, graph6). The reduced catalog
/// drops members that contain another member as an induced subgraph.
inline std::shared_ptr<const std::vector<CatalogMember>> generate_Gk(int k, CatalogOptions options = {},
                                                                   int workers = default_workers()) {
    if (k < 0) throw DomainError("k must be nonnegative");
    if (k > kCatalogMaxK) throw CapacityError("catalogs are generated for k <= 2, got k = " + std::to_string(k));
    const int cap = options.max_vertices < 0 ? 4 * k + 4 : std::min(options.max_vertices, 4 * k + 4);
    const detail::CatalogKey key{k, cap, options.reduced};
    {
        std::lock_guard lock(detail::catalog_mutex());
        if (auto it = detail::catalog_cache().find(key); it != detail::catalog_cache().end()) return it->second;
    }
    std::vector<CatalogMember> members;
    if (options.reduced) {
        const auto full = generate_Gk(k, {false, cap}, workers);
        for (const auto& m : *full) {
            bool minimal = true;
            for (const auto& other : members)
                if (other.graph.order() < m.graph.order() && contains_induced(other.graph, m.graph)) {
                    minimal = false;
                    break;
                }
            if (minimal) members.push_back(m);
        }
    } else {
        const auto ls = detail::layouts(k, cap);
        for (const auto& l : ls)
            if (static_cast<int>(l.free.size()) > kLayoutMaxFreeEdges)
                throw CapacityError("an accelerator layout with " + std::to_string(l.order) + " vertices has " +
                                    std::to_string(l.free.size()) + " optional edges (limit " +
                                    std::to_string(kLayoutMaxFreeEdges) + "); lower the vertex bound");
        const auto parts = parallel_map<std::vector<detail::LayoutMember>>(
            ls.size(), workers, [&](std::size_t i) { return detail::expand_layout(ls[i]); });
        std::vector<detail::LayoutMember> merged;
        std::unordered_map<std::string, bool> seen;
        for (const auto& part : parts)
            for (const auto& m : part)
                if (seen.emplace(m.form, true).second) merged.push_back(m);
        std::ranges::stable_sort(merged, [](const detail::LayoutMember& a, const detail::LayoutMember& b) {
            return std::tuple(a.member.graph.order(), a.member.graph.size(), a.form) <
                   std::tuple(b.member.graph.order(), b.member.graph.size(), b.form);
        });
        for (auto& m : merged) members.push_back(std::move(m.member));
    }
    auto ptr = std::make_shared<const std::vector<CatalogMember>>(std::move(members));
    std::lock_guard lock(detail::catalog_mutex());
    return detail::catalog_cache().emplace(key, ptr).first->second;
}

struct CatalogMatch {
    CatalogMember member;
    Embedding embedding;
};

/// First member of the reduced G_k (in catalog order) that embeds induced in G.
inline std::optional<CatalogMatch> contains_Gk_member(const Graph& g, int k, int workers = default_workers()) {
    if (k < 0) return std::nullopt;
    const auto cat = generate_Gk(k, {true, std::min(g.order(), 4 * k + 4)}, workers);
    for (const auto& m : *cat)
        if (auto e = induced_subgraph_search(m.graph, g)) return CatalogMatch{m, std::move(*e)};
    return std::nullopt;
}

} // namespace zft
