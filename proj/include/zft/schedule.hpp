#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "zft/rules.hpp"

namespace zft {

/// A chronological list of forces split into time layers.
///
/// layers[t-1] is B^(t), the set forced at time t, and sources[t-1] is U^(t).
/// Forces are ordered by (time, target).
struct ForcingSchedule {
    Rule rule = Rule::Z;
    int order = 0;
    VertexSet initial = 0;
    std::vector<VertexSet> layers;
    std::vector<VertexSet> sources;
    std::vector<Force> forces;

    int propagation_time() const noexcept { return static_cast<int>(layers.size()); }

    /// B^[t]: everything blue after step t (t = 0 gives the initial set).
    VertexSet blue_through(int t) const noexcept {
        VertexSet s = initial;
        for (int i = 0; i < t && i < propagation_time(); ++i) s |= layers[i];
        return s;
    }

    bool complete() const noexcept { return blue_through(propagation_time()) == all_vertices(order); }

    /// Step at which v turns blue (0 for the initial set), or -1.
    int time_of(int v) const noexcept {
        if (contains(initial, v)) return 0;
        for (int t = 0; t < propagation_time(); ++t)
            if (contains(layers[t], v)) return t + 1;
        return -1;
    }

    /// Per-step savings |B^(t)| - 1.
    std::vector<int> savings_profile() const {
        std::vector<int> out;
        for (VertexSet l : layers) out.push_back(popcount(l) - 1);
        return out;
    }
};

/// Propagation that never turns every vertex blue; pt is infinite.
struct Stalled {
    VertexSet blue = 0;
    ForcingSchedule partial;
};

using PropagationResult = std::variant<ForcingSchedule, Stalled>;

inline bool stalled(const PropagationResult& r) { return std::holds_alternative<Stalled>(r); }

inline const ForcingSchedule& schedule_of(const PropagationResult& r) {
    if (const auto* s = std::get_if<ForcingSchedule>(&r)) return *s;
    throw DomainError("propagation stalls: pt is infinite");
}

/// Replays steps of (source, target) pairs, checking each against the rule and
/// recording layers, sources, force kinds and component lineages.
class ScheduleBuilder {
public:
    ScheduleBuilder(Rule rule, const Graph& g, VertexSet b, FloorActivity activity = FloorActivity::per_lineage)
        : rule_(rule), g_(&g), activity_(activity), state_(ForcingState::initial(rule, g, b)) {
        if (!is_subset(b, g.vertices())) throw DomainError("initial set has vertices outside the graph");
        sched_.rule = rule;
        sched_.order = g.order();
        sched_.initial = b;
        for (const auto& c : state_.components) paths_.push_back({c.component});
    }

    const ForcingState& state() const noexcept { return state_; }

    void step(std::vector<std::pair<int, int>> forces) {
        if (forces.empty()) throw UsageError("a time step must contain at least one force");
        std::ranges::sort(forces, [](const auto& x, const auto& y) { return x.second < y.second; });
        ForcingState next = advance(rule_, *g_, state_, forces, activity_);
        const int t = sched_.propagation_time() + 1;
        VertexSet layer = 0;
        VertexSet src = 0;
        for (const auto& [u, w] : forces) {
            Force f{u, w, t, g_->adjacent(u, w) ? ForceKind::standard : ForceKind::hop, {}};
            if (is_psd(rule_)) f.lineage = paths_[component_index(w)];
            sched_.forces.push_back(std::move(f));
            layer |= bit(w);
            src |= bit(u);
        }
        sched_.layers.push_back(layer);
        sched_.sources.push_back(src);

        if (is_psd(rule_)) {
            std::vector<Lineage> paths;
            for (const auto& c : next.components) {
                Lineage p = paths_[component_index(lowest(c.component))];
                p.push_back(c.component);
                paths.push_back(std::move(p));
            }
            paths_ = std::move(paths);
        }
        state_ = std::move(next);
    }

    const ForcingSchedule& schedule() const noexcept { return sched_; }

private:
    int component_index(int w) const {
        for (std::size_t i = 0; i < state_.components.size(); ++i)
            if (contains(state_.components[i].component, w)) return static_cast<int>(i);
        throw InternalError("vertex " + std::to_string(w) + " is in no white component");
    }

    Rule rule_;
    const Graph* g_;
    FloorActivity activity_;
    ForcingState state_;
    std::vector<Lineage> paths_;
    ForcingSchedule sched_;
};

/// Rebuilds a schedule from per-step force lists.
inline ForcingSchedule build_schedule(Rule rule, const Graph& g, VertexSet b,
                                      const std::vector<std::vector<std::pair<int, int>>>& steps,
                                      FloorActivity activity = FloorActivity::per_lineage) {
    ScheduleBuilder builder(rule, g, b, activity);
    for (const auto& s : steps) builder.step(s);
    return builder.schedule();
}

} // namespace zft
