#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zft/graph.hpp"

namespace zft {

/// The four color change rules.
///
///  - Z: a blue u forces w when w is u's only white neighbor.
///  - ZFloor: an active blue u forces w when u has no white neighbor other than
///    w; with no white neighbors at all the force is a hop. u then goes inactive
///    and w becomes active.
///  - ZPlus: per white component W of G - B, a blue u forces w when w is u's
///    only white neighbor in W.
///  - ZPlusFloor: ZFloor inside each white component, with activity kept per
///    component lineage.
enum class Rule { Z, ZFloor, ZPlus, ZPlusFloor };

inline constexpr Rule kAllRules[] = {Rule::Z, Rule::ZFloor, Rule::ZPlus, Rule::ZPlusFloor};

inline bool is_floor(Rule r) { return r == Rule::ZFloor || r == Rule::ZPlusFloor; }
inline bool is_psd(Rule r) { return r == Rule::ZPlus || r == Rule::ZPlusFloor; }

inline const char* to_string(Rule r) {
    switch (r) {
    case Rule::Z: return "z";
    case Rule::ZFloor: return "zfloor";
    case Rule::ZPlus: return "zplus";
    case Rule::ZPlusFloor: return "zplusfloor";
    }
    return "?";
}

/// Short human name used in text output ("th", "th+", ...).
inline const char* symbol(Rule r) {
    switch (r) {
    case Rule::Z: return "";
    case Rule::ZFloor: return "_floor";
    case Rule::ZPlus: return "+";
    case Rule::ZPlusFloor: return "+_floor";
    }
    return "?";
}

inline Rule parse_rule(std::string_view s) {
    for (Rule r : kAllRules)
        if (s == to_string(r)) return r;
    throw UsageError("unknown rule '" + std::string(s) + "' (expected z, zfloor, zplus or zplusfloor)");
}

enum class ForceKind { standard, hop };

inline const char* to_string(ForceKind k) { return k == ForceKind::standard ? "standard" : "hop"; }

/// Path of nested white components from the root of the component tree down to
/// the component containing the target. Empty for Z and ZFloor.
using Lineage = std::vector<VertexSet>;

struct Force {
    int source = 0;
    int target = 0;
    int time = 0;
    ForceKind kind = ForceKind::standard;
    Lineage lineage;

    friend bool operator==(const Force&, const Force&) = default;
};

/// How ZPlusFloor deactivates a vertex after it forces. per_lineage removes it
/// from the active set of the component it forced in (and so from that
/// component's descendants); global removes it everywhere.
enum class FloorActivity { per_lineage, global };

/// A white component together with the blue vertices active with respect to it.
struct ComponentActivity {
    VertexSet component = 0;
    VertexSet active = 0;

    friend bool operator==(const ComponentActivity&, const ComponentActivity&) = default;
};

/// Coloring state between time steps. `active` is used by ZFloor;
/// `components` lists the white components (by smallest vertex) with their
/// active sets for ZPlusFloor, and with active = blue for ZPlus.
struct ForcingState {
    VertexSet blue = 0;
    VertexSet active = 0;
    std::vector<ComponentActivity> components;

    static ForcingState initial(Rule rule, const Graph& g, VertexSet b) {
        ForcingState s;
        s.blue = b & g.vertices();
        if (rule == Rule::ZFloor) s.active = s.blue;
        if (is_psd(rule))
            for (VertexSet w : connected_components(g, g.vertices() & ~s.blue)) s.components.push_back({w, s.blue});
        return s;
    }

    friend bool operator==(const ForcingState&, const ForcingState&) = default;
};

/// Every force the rule permits at this state, ordered by (source, target).
/// PSD forces carry the target's white component as a one-element lineage.
inline std::vector<Force> valid_forces(Rule rule, const Graph& g, const ForcingState& state) {
    std::vector<Force> out;
    const VertexSet white = g.vertices() & ~state.blue;
    auto push = [&](int u, int w, bool hop, VertexSet comp) {
        Force f{u, w, 0, hop ? ForceKind::hop : ForceKind::standard, {}};
        if (comp) f.lineage.push_back(comp);
        out.push_back(std::move(f));
    };
    switch (rule) {
    case Rule::Z:
        for (int u : members(state.blue)) {
            const VertexSet wn = g.neighbors(u) & white;
            if (popcount(wn) == 1) push(u, lowest(wn), false, 0);
        }
        break;
    case Rule::ZFloor:
        for (int u : members(state.active & state.blue)) {
            const VertexSet wn = g.neighbors(u) & white;
            if (popcount(wn) == 1)
                push(u, lowest(wn), false, 0);
            else if (wn == 0)
                for (int w : members(white)) push(u, w, true, 0);
        }
        break;
    case Rule::ZPlus:
        for (VertexSet comp : connected_components(g, white))
            for (int u : members(state.blue)) {
                const VertexSet wn = g.neighbors(u) & comp;
                if (popcount(wn) == 1) push(u, lowest(wn), false, comp);
            }
        break;
    case Rule::ZPlusFloor:
        for (const auto& [comp, active] : state.components)
            for (int u : members(active & state.blue)) {
                const VertexSet wn = g.neighbors(u) & comp;
                if (popcount(wn) == 1)
                    push(u, lowest(wn), false, comp);
                else if (wn == 0)
                    for (int w : members(comp)) push(u, w, true, comp);
            }
        break;
    }
    std::ranges::sort(out, [](const Force& a, const Force& b) {
        return std::pair(a.source, a.target) < std::pair(b.source, b.target);
    });
    return out;
}

namespace detail {

/// advance() without validation; the search calls it on pairs taken from
/// valid_forces.
inline ForcingState apply_step(Rule rule, const Graph& g, const ForcingState& state,
                               const std::vector<std::pair<int, int>>& step, FloorActivity activity) {
    VertexSet targets = 0;
    VertexSet sources = 0;
    for (const auto& [u, w] : step) {
        targets |= bit(w);
        sources |= bit(u);
    }
    ForcingState next;
    next.blue = state.blue | targets;
    if (rule == Rule::ZFloor) next.active = (state.active & ~sources) | targets;
    if (rule == Rule::ZPlus) {
        for (VertexSet w : connected_components(g, g.vertices() & ~next.blue)) next.components.push_back({w, next.blue});
    }
    if (rule == Rule::ZPlusFloor) {
        for (const auto& [comp, active] : state.components) {
            VertexSet src_here = 0;
            VertexSet tgt_here = targets & comp;
            for (const auto& [u, w] : step)
                if (contains(comp, w)) src_here |= bit(u);
            const VertexSet removed = activity == FloorActivity::global ? sources : src_here;
            const VertexSet inherited = (active & ~removed) | tgt_here;
            for (VertexSet w : connected_components(g, comp & ~tgt_here)) next.components.push_back({w, inherited});
        }
        std::ranges::sort(next.components, [](const auto& a, const auto& b) { return lowest(a.component) < lowest(b.component); });
    }
    return next;
}

} // namespace detail

/// Performs one synchronized time step. Every (source, target) pair must be a
/// valid force at `state`; targets must be distinct, and under floor rules a
/// source acts at most once per component (once overall for ZFloor).
inline ForcingState advance(Rule rule, const Graph& g, const ForcingState& state,
                            const std::vector<std::pair<int, int>>& step,
                            FloorActivity activity = FloorActivity::per_lineage) {
    const auto valid = valid_forces(rule, g, state);
    VertexSet targets = 0;
    VertexSet sources = 0;
    for (const auto& [u, w] : step) {
        const bool ok = std::ranges::any_of(valid, [&](const Force& f) { return f.source == u && f.target == w; });
        if (!ok) throw UsageError("force " + std::to_string(u) + "->" + std::to_string(w) + " is not valid at this state");
        if (contains(targets, w)) throw UsageError("vertex " + std::to_string(w) + " forced twice in one step");
        targets |= bit(w);
        sources |= bit(u);
    }
    if (rule == Rule::ZFloor) {
        if (popcount(sources) != static_cast<int>(step.size()))
            throw UsageError("a floor-rule vertex may force only once per step");
    }
    if (rule == Rule::ZPlusFloor)
        for (const auto& c : state.components) {
            VertexSet seen = 0;
            for (const auto& [u, w] : step)
                if (contains(c.component, w)) {
                    if (contains(seen, u)) throw UsageError("a vertex may force only once per component");
                    seen |= bit(u);
                }
        }
    return detail::apply_step(rule, g, state, step, activity);
}

} // namespace zft
