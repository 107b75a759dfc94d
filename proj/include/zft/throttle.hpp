#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "zft/propagate.hpp"

namespace zft {

inline constexpr int kThrottleMaxVertices = 16;
inline constexpr int kSupergraphOracleMaxVertices = 6;

enum class WitnessKind { witness, standard_witness };

inline const char* to_string(WitnessKind k) { return k == WitnessKind::witness ? "witness" : "standard_witness"; }

struct ThrottlingCertificate {
    Rule rule = Rule::Z;
    VertexSet blue = 0;
    ForcingSchedule schedule;
    int pt = 0;
    int th = 0;
    std::vector<int> savings_profile;
    WitnessKind kind = WitnessKind::witness;

    int savings() const { return std::accumulate(savings_profile.begin(), savings_profile.end(), 0); }
};

/// Wraps a completed schedule. The witness kind is standard when every layer
/// has at least two vertices.
inline ThrottlingCertificate make_certificate(ForcingSchedule s) {
    if (!s.complete()) throw UsageError("certificate needs a completed schedule");
    ThrottlingCertificate c;
    c.rule = s.rule;
    c.blue = s.initial;
    c.pt = s.propagation_time();
    c.th = popcount(s.initial) + c.pt;
    c.savings_profile = s.savings_profile();
    c.kind = std::ranges::all_of(c.savings_profile, [](int x) { return x >= 1; }) ? WitnessKind::standard_witness
                                                                                   : WitnessKind::witness;
    c.schedule = std::move(s);
    return c;
}

/// th_R(G; B), or nullopt when B never colors G.
inline std::optional<int> throttling_number_for(Rule rule, const Graph& g, VertexSet b,
                                                FloorActivity activity = FloorActivity::per_lineage) {
    const auto pt = propagation_time(rule, g, b, activity);
    if (!pt) return std::nullopt;
    return popcount(b) + *pt;
}

/// th_R(G) with an optimal certificate. Among optimal sets the numerically
/// smallest bitmask wins.
inline ThrottlingCertificate throttling_number(Rule rule, const Graph& g,
                                               FloorActivity activity = FloorActivity::per_lineage) {
    const int n = g.order();
    if (n == 0) throw DomainError("throttling needs a nonempty graph");
    if (n > kThrottleMaxVertices)
        throw CapacityError("throttling search supports at most 16 vertices, got " + std::to_string(n));
    int best = n;
    VertexSet best_set = g.vertices();
    for (int s = 0; s <= best && s <= n; ++s) {
        detail::for_each_subset_of_size(n, s, [&](VertexSet b) {
            if (s > best) return;
            const int room = best - s; // largest pt that still ties
            std::optional<int> pt;
            if (is_floor(rule)) {
                const int limit = b < best_set ? room : room - 1;
                if (limit < 0) return;
                if (auto steps = detail::floor_search(rule, g, b, limit, activity)) pt = static_cast<int>(steps->size());
            } else {
                pt = deterministic_time(rule, g, b);
            }
            if (!pt) return;
            const int th = s + *pt;
            if (th < best || (th == best && b < best_set)) {
                best = th;
                best_set = b;
            }
        });
    }
    return make_certificate(schedule_of(propagate(rule, g, best_set, activity)));
}

struct SavingsReport {
    int total = 0;
    std::vector<int> profile;
};

inline SavingsReport savings(const ThrottlingCertificate& c) {
    if (!c.schedule.complete()) throw UsageError("savings need a completed certificate");
    return {c.savings(), c.savings_profile};
}

/// Repeatedly adds the singleton layers to the initial set until every layer
/// forces at least two vertices. Never increases |B| + pt.
inline ThrottlingCertificate standardize_witness(const Graph& g, Rule rule, const ThrottlingCertificate& c) {
    if (is_floor(rule)) throw UsageError("standard witnesses are defined for rules z and zplus");
    if (c.rule != rule) throw UsageError("certificate was produced under a different rule");
    ForcingSchedule s = c.schedule;
    if (!s.complete()) throw UsageError("standardization needs a completed certificate");
    while (true) {
        VertexSet singles = 0;
        for (VertexSet l : s.layers)
            if (popcount(l) == 1) singles |= l;
        if (!singles) break;
        s = schedule_of(propagate_deterministic(rule, g, s.initial | singles));
    }
    return make_certificate(std::move(s));
}

/// Data of the finite-certificate construction: an induced subgraph H = G[X]
/// with |X| <= 4k + 4 and th(H) <= |X| - k - 1.
struct CertificateSubgraph {
    int k = 0;
    ThrottlingCertificate witness;     // standardized optimal certificate
    int r = 0;                         // cut step
    std::vector<VertexSet> layers;     // B-hat(1..r)
    std::vector<VertexSet> sources;    // U(1..r)
    VertexSet x = 0;
    Graph h;
};

/// Builds H from the witness `b` (an optimal set when omitted). The witness
/// is standardized first.
inline CertificateSubgraph extract_certificate_subgraph(const Graph& g, Rule rule, int k,
                                                        std::optional<VertexSet> b = std::nullopt) {
    if (is_floor(rule)) throw UsageError("certificate extraction applies to rules z and zplus");
    if (k < 0) throw DomainError("k must be nonnegative");
    const int n = g.order();
    if (n < k) throw DomainError("graph has fewer than k vertices");
    ThrottlingCertificate start;
    if (b) {
        const auto r = propagate_deterministic(rule, g, *b);
        if (stalled(r)) throw DomainError("witness " + format_set(*b) + " does not color the graph");
        start = make_certificate(schedule_of(r));
    } else {
        start = throttling_number(rule, g);
    }
    if (start.th >= n - k)
        throw DomainError("th = " + std::to_string(start.th) + " is not below n - k = " + std::to_string(n - k));

    CertificateSubgraph out;
    out.k = k;
    out.witness = standardize_witness(g, rule, start);
    const auto& s = out.witness.schedule;
    int total = 0;
    for (int i = 0; i < s.propagation_time(); ++i) {
        const int gain = popcount(s.layers[i]) - 1;
        VertexSet layer = s.layers[i];
        if (total + gain >= k + 1) {
            // keep the smallest vertices, exactly enough to reach k + 1
            const int keep = k + 1 - total + 1;
            VertexSet trimmed = 0;
            for (int v : members(layer)) {
                if (popcount(trimmed) == keep) break;
                trimmed |= bit(v);
            }
            layer = trimmed;
        }
        VertexSet src = 0;
        for (const auto& f : s.forces)
            if (f.time == i + 1 && contains(layer, f.target)) src |= bit(f.source);
        out.layers.push_back(layer);
        out.sources.push_back(src);
        out.x |= layer | src;
        total += popcount(layer) - 1;
        if (total >= k + 1) {
            out.r = i + 1;
            break;
        }
    }
    if (total != k + 1) throw InternalError("standard witness saved fewer than k + 1 vertices");
    out.h = induced_subgraph(g, out.x);
    return out;
}

struct SupergraphOracleResult {
    int th = 0;
    Graph supergraph;
    ThrottlingCertificate certificate; // for the supergraph, under Z or Z+
};

/// Floor throttling as the minimum of th (for ZFloor) or th+ (for ZPlusFloor)
/// over all spanning supergraphs. Ties keep the first supergraph in order of
/// added-edge bitmask.
inline SupergraphOracleResult floor_throttling_via_supergraphs(Rule rule, const Graph& g) {
    if (!is_floor(rule)) throw UsageError("the supergraph oracle applies to rules zfloor and zplusfloor");
    if (g.order() > kSupergraphOracleMaxVertices)
        throw CapacityError("supergraph oracle supports at most 6 vertices, got " + std::to_string(g.order()));
    const Rule base = rule == Rule::ZFloor ? Rule::Z : Rule::ZPlus;
    const auto missing = complement(g).edges();
    std::optional<SupergraphOracleResult> best;
    for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << missing.size()); ++sub) {
        auto edges = g.edges();
        for (std::size_t i = 0; i < missing.size(); ++i)
            if ((sub >> i) & 1u) edges.push_back(missing[i]);
        Graph h(g.order(), edges);
        auto c = throttling_number(base, h);
        if (!best || c.th < best->th) best = SupergraphOracleResult{c.th, std::move(h), std::move(c)};
    }
    return *best;
}

} // namespace zft
