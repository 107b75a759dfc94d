#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zft/schedule.hpp"

namespace zft {

inline constexpr int kFloorSearchMaxVertices = 16;

/// Z and Z+: every valid force fires at each step; each target is assigned its
/// least-index valid source.
inline PropagationResult propagate_deterministic(Rule rule, const Graph& g, VertexSet b) {
    if (is_floor(rule)) throw UsageError("deterministic propagation applies to rules z and zplus only");
    ScheduleBuilder builder(rule, g, b);
    while (builder.state().blue != g.vertices()) {
        const auto valid = valid_forces(rule, g, builder.state());
        std::vector<std::pair<int, int>> step;
        VertexSet taken = 0;
        for (const auto& f : valid) {
            if (contains(taken, f.target)) continue;
            taken |= bit(f.target);
            step.emplace_back(f.source, f.target);
        }
        if (step.empty()) return Stalled{builder.state().blue, builder.schedule()};
        builder.step(std::move(step));
    }
    return builder.schedule();
}

/// pt for Z / Z+ without building a schedule; nullopt when propagation stalls.
inline std::optional<int> deterministic_time(Rule rule, const Graph& g, VertexSet b) {
    if (is_floor(rule)) throw UsageError("deterministic propagation applies to rules z and zplus only");
    VertexSet blue = b;
    const VertexSet all = g.vertices();
    int t = 0;
    while (blue != all) {
        VertexSet gained = 0;
        const VertexSet white = all & ~blue;
        if (rule == Rule::Z) {
            for (int u : members(blue)) {
                const VertexSet wn = g.neighbors(u) & white;
                if (popcount(wn) == 1) gained |= wn;
            }
        } else {
            for (VertexSet comp : connected_components(g, white))
                for (int u : members(blue)) {
                    const VertexSet wn = g.neighbors(u) & comp;
                    if (popcount(wn) == 1) gained |= wn;
                }
        }
        if (!gained) return std::nullopt;
        blue |= gained;
        ++t;
    }
    return t;
}

namespace detail {

using Step = std::vector<std::pair<int, int>>;

struct StateKeyHash {
    std::size_t operator()(const std::vector<VertexSet>& key) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (VertexSet x : key) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

inline std::vector<VertexSet> state_key(const ForcingState& s) {
    std::vector<VertexSet> key{s.blue, s.active};
    for (const auto& c : s.components) key.push_back(c.active);
    return key;
}

/// Every nonempty set of valid forces that may fire together: distinct
/// targets, and each source used at most once per group. Groups are the
/// source itself for ZFloor, (component, source) for ZPlusFloor under either
/// activity reading.
template <class Visit>
void for_each_step(Rule rule, const std::vector<Force>& valid, FloorActivity activity, Visit&& visit) {
    // group consecutive forces (valid is sorted by source, then target)
    std::vector<std::vector<const Force*>> groups;
    auto group_key = [&](const Force& f) {
        const bool per_component = rule == Rule::ZPlusFloor;
        return std::pair(f.source, per_component ? f.lineage.front() : VertexSet{0});
    };
    for (const auto& f : valid) {
        bool placed = false;
        for (auto& grp : groups)
            if (group_key(*grp.front()) == group_key(f)) {
                grp.push_back(&f);
                placed = true;
                break;
            }
        if (!placed) groups.push_back({&f});
    }
    Step current;
    auto rec = [&](auto&& self, std::size_t i, VertexSet used) -> void {
        if (i == groups.size()) {
            if (!current.empty()) visit(current);
            return;
        }
        self(self, i + 1, used);
        for (const Force* f : groups[i]) {
            if (contains(used, f->target)) continue;
            current.emplace_back(f->source, f->target);
            self(self, i + 1, used | bit(f->target));
            current.pop_back();
        }
    };
    rec(rec, 0, 0);
}

/// Breadth-first search over coloring states. Returns the steps of a fastest
/// schedule of at most `limit` steps, or nullopt. `exhausted` reports whether
/// nullopt means "never completes" rather than "not within limit".
inline std::optional<std::vector<Step>> floor_search(Rule rule, const Graph& g, VertexSet b, int limit,
                                                     FloorActivity activity, bool* exhausted = nullptr) {
    struct Node {
        ForcingState state;
        int parent;
        Step step;
    };
    std::vector<Node> nodes;
    std::unordered_map<std::vector<VertexSet>, int, StateKeyHash> seen;
    nodes.push_back({ForcingState::initial(rule, g, b), -1, {}});
    seen.emplace(state_key(nodes[0].state), 0);
    std::vector<int> frontier{0};
    const VertexSet all = g.vertices();

    auto unwind = [&](int idx) {
        std::vector<Step> steps;
        for (; nodes[idx].parent >= 0; idx = nodes[idx].parent) steps.push_back(nodes[idx].step);
        std::ranges::reverse(steps);
        return steps;
    };

    if (nodes[0].state.blue == all) return std::vector<Step>{};
    for (int depth = 1; depth <= limit && !frontier.empty(); ++depth) {
        std::vector<int> next;
        for (int idx : frontier) {
            const ForcingState from = nodes[idx].state;
            const auto valid = valid_forces(rule, g, from);
            std::optional<int> done;
            for_each_step(rule, valid, activity, [&](const Step& step) {
                if (done) return;
                ForcingState to = apply_step(rule, g, from, step, activity);
                auto key = state_key(to);
                if (seen.contains(key)) return;
                const int id = static_cast<int>(nodes.size());
                const bool finished = to.blue == all;
                nodes.push_back({std::move(to), idx, step});
                seen.emplace(std::move(key), id);
                if (finished) done = id;
                next.push_back(id);
            });
            if (done) return unwind(*done);
        }
        frontier = std::move(next);
    }
    if (exhausted) *exhausted = frontier.empty();
    return std::nullopt;
}

} // namespace detail

/// Minimum propagation time under ZFloor or ZPlusFloor by exhaustive search
/// over simultaneous force sets, with a realizing schedule.
inline PropagationResult min_propagation_floor(Rule rule, const Graph& g, VertexSet b,
                                               FloorActivity activity = FloorActivity::per_lineage) {
    if (!is_floor(rule)) throw UsageError("minimum-time search applies to rules zfloor and zplusfloor only");
    if (g.order() > kFloorSearchMaxVertices)
        throw CapacityError("floor-rule search supports at most 16 vertices, got " + std::to_string(g.order()));
    auto steps = detail::floor_search(rule, g, b, std::numeric_limits<int>::max(), activity);
    if (!steps) return Stalled{b, build_schedule(rule, g, b, {}, activity)};
    return build_schedule(rule, g, b, *steps, activity);
}

/// Minimum propagation time under any rule (deterministic for Z and Z+);
/// nullopt for infinite.
inline std::optional<int> propagation_time(Rule rule, const Graph& g, VertexSet b,
                                           FloorActivity activity = FloorActivity::per_lineage) {
    if (!is_floor(rule)) return deterministic_time(rule, g, b);
    auto steps = detail::floor_search(rule, g, b, std::numeric_limits<int>::max(), activity);
    if (!steps) return std::nullopt;
    return static_cast<int>(steps->size());
}

/// Fastest schedule under any rule.
inline PropagationResult propagate(Rule rule, const Graph& g, VertexSet b,
                                   FloorActivity activity = FloorActivity::per_lineage) {
    return is_floor(rule) ? min_propagation_floor(rule, g, b, activity) : propagate_deterministic(rule, g, b);
}

} // namespace zft
