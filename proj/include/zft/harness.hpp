#pragma once

#include <chrono>
#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "zft/catalog.hpp"
#include "zft/enumerate.hpp"
#include "zft/json.hpp"
#include "zft/minor_script.hpp"
#include "zft/spectral.hpp"
#include "zft/throttle.hpp"
#include "zft/trees.hpp"

namespace zft {

/// Graphs a verification run walks over, with where they came from.
struct Corpus {
    std::string source; // "connected", "trees", "random" or an ingested file name
    int nmin = 1;
    int nmax = 0;
    std::vector<Graph> graphs;

    Json descriptor() const {
        return {{"source", source}, {"nmin", nmin}, {"nmax", nmax}, {"graphs", graphs.size()}};
    }
};

/// Every connected graph with nmin <= n <= nmax, one per isomorphism class.
inline Corpus enumerated_corpus(int nmin, int nmax) {
    if (nmin > nmax) throw UsageError("empty n range " + std::to_string(nmin) + ".." + std::to_string(nmax));
    return {"connected", nmin, nmax, connected_corpus(nmin, nmax)};
}

/// One graph6 string per line; blank lines are skipped.
inline Corpus ingest_graph6(std::istream& in, std::string source) {
    Corpus c{std::move(source), 0, 0, {}};
    std::string line;
    while (std::getline(in, line)) {
        if (detail::trim_line_end(line).empty()) continue;
        c.graphs.push_back(parse_graph6(line));
    }
    if (c.graphs.empty()) throw UsageError("corpus " + c.source + " holds no graphs");
    c.nmin = c.graphs.front().order();
    c.nmax = c.nmin;
    for (const auto& g : c.graphs) {
        c.nmin = std::min(c.nmin, g.order());
        c.nmax = std::max(c.nmax, g.order());
    }
    return c;
}

struct VerifyParams {
    int workers = default_workers();
    int trials = 500;             // lem-contraction only
    std::uint64_t seed = 20240601; // lem-contraction only
    std::vector<int> ks;          // thm-accelerator / cor-exact; empty means the theorem's default
};

struct GraphVerdict {
    std::string g6;
    std::string verdict; // pass, fail or info
    Json data;
};

struct VerificationReport {
    std::string theorem;
    Json corpus;
    Json params;
    std::vector<GraphVerdict> records;
    int passed = 0;
    int failed = 0;
    int info = 0;
    int divergences = 0; // records flagged as disagreeing with an alternative reading
    double wall_seconds = 0.0;

    bool informational() const { return info > 0 && passed == 0 && failed == 0; }
    std::string verdict() const { return informational() ? "info" : failed == 0 ? "pass" : "fail"; }

    Json counterexamples() const {
        Json out = Json::array();
        for (const auto& r : records)
            if (r.verdict == "fail") out.push_back({{"g6", r.g6}, {"details", r.data}});
        return out;
    }

    Json summary(bool with_wall_time = true) const {
        Json j;
        j["summary"] = true;
        j["theorem"] = theorem;
        j["corpus"] = corpus;
        j["params"] = params;
        j["totals"] = {{"graphs", records.size()}, {"passed", passed}, {"failed", failed}, {"info", info}};
        j["divergences"] = divergences;
        j["verdict"] = verdict();
        j["counterexamples"] = counterexamples();
        if (with_wall_time) j["wall_seconds"] = wall_seconds;
        return j;
    }

    /// One {g6, verdict, data} line per record, then the summary line.
    void write_jsonl(std::ostream& out, bool with_wall_time = true) const {
        for (const auto& r : records) out << Json{{"g6", r.g6}, {"verdict", r.verdict}, {"data", r.data}}.dump() << '\n';
        out << summary(with_wall_time).dump() << '\n';
    }
};

namespace detail {

inline GraphVerdict verdict_of(const Graph& g, bool ok, Json data) {
    return {emit_graph6(g), ok ? "pass" : "fail", std::move(data)};
}

inline GraphVerdict check_th_eq_n(const Graph& g, const VerifyParams&) {
    const int th = throttling_number(Rule::Z, g).th;
    const bool predicted = classify_th_eq_n(g);
    return verdict_of(g, predicted == (th == g.order()), {{"th", th}, {"n", g.order()}, {"forbidden_free", predicted}});
}

inline GraphVerdict check_thplus_high(const Graph& g, const VerifyParams&) {
    const int n = g.order();
    const int th = throttling_number(Rule::ZPlus, g).th;
    const auto predicted = classify_thplus(g);
    const auto actual = th == n ? ThPlusClass::equals_n : th == n - 1 ? ThPlusClass::equals_n_minus_1 : ThPlusClass::below;
    return verdict_of(g, predicted == actual,
                      {{"thplus", th}, {"n", n}, {"predicted", to_string(predicted)}, {"actual", to_string(actual)}});
}

/// Both directions of the script characterization for t = 1..n.
inline GraphVerdict check_characterization(const Graph& g, Rule rule, Flavor flavor) {
    const int th = throttling_number(rule, g).th;
    bool ok = true;
    Json per_t = Json::array();
    for (int t = 1; t <= g.order(); ++t) {
        const auto script = characterization_certificate(g, t, flavor);
        const bool verified = script && script_produces(*script, g);
        const bool agree = script.has_value() == (th <= t) && (!script || verified);
        ok = ok && agree;
        Json entry = {{"t", t}, {"script", script.has_value()}, {"agree", agree}};
        if (script) entry["shape"] = Json::array({script->a, script->k, script->b});
        per_t.push_back(entry);
    }
    return verdict_of(g, ok, {{"th", th}, {"rule", to_string(rule)}, {"per_t", per_t}});
}

inline GraphVerdict check_spanning_supergraphs(const Graph& g, const VerifyParams&) {
    const int th = throttling_number(Rule::ZPlusFloor, g).th;
    const auto oracle = floor_throttling_via_supergraphs(Rule::ZPlusFloor, g);
    const int global = throttling_number(Rule::ZPlusFloor, g, FloorActivity::global).th;
    Json data = {{"th", th},
                 {"supergraph_min", oracle.th},
                 {"supergraph", emit_graph6(oracle.supergraph)},
                 {"global_deactivation_th", global},
                 {"divergence", global != th}};
    return verdict_of(g, th == oracle.th, std::move(data));
}

/// Largest savings sum over all forcing sets, read off the layers.
inline int max_savings(Rule rule, const Graph& g) {
    int best = -1;
    for (VertexSet b = 0; b <= g.vertices(); ++b) {
        const auto r = propagate_deterministic(rule, g, b);
        if (stalled(r)) continue;
        int sum = 0;
        for (VertexSet layer : schedule_of(r).layers) sum += popcount(layer) - 1;
        best = std::max(best, sum);
    }
    return best;
}

inline GraphVerdict check_savings(const Graph& g, const VerifyParams&) {
    const int n = g.order();
    bool ok = true;
    Json data;
    for (Rule rule : {Rule::Z, Rule::ZPlus}) {
        const int th = throttling_number(rule, g).th;
        const int best = max_savings(rule, g);
        Json failing = Json::array();
        for (int k = 0; k < n; ++k)
            if ((th < n - k) != (best >= k + 1)) failing.push_back(k);
        ok = ok && failing.empty();
        data[to_string(rule)] = {{"th", th}, {"max_savings", best}, {"failing_k", failing}};
    }
    return verdict_of(g, ok, std::move(data));
}

/// Where vertex x of G lands after contract_edge(g, u, v).
inline int contracted_index(int x, int u, int v) {
    const int lo = std::min(u, v), hi = std::max(u, v);
    return x == hi ? lo : x > hi ? x - 1 : x;
}

inline GraphVerdict check_contraction(const Graph& g, VertexSet b) {
    const auto result = propagate_deterministic(Rule::ZPlus, g, b);
    const auto& s = schedule_of(result);
    const int pt = s.propagation_time();
    int worst = 0, edges = 0;
    Json offending = Json::array();
    for (const auto& tree : forcing_trees(g, s))
        for (const auto& e : tree.edges()) {
            const Graph h = contract_edge(g, e.u, e.v);
            VertexSet image = 0;
            for (int x : members(b)) image |= bit(contracted_index(x, e.u, e.v));
            const auto after = deterministic_time(Rule::ZPlus, h, image);
            ++edges;
            if (!after || *after > pt) offending.push_back(Json::array({e.u, e.v}));
            if (after) worst = std::max(worst, *after);
        }
    return verdict_of(g, offending.empty(),
                      {{"B", set_json(b)}, {"pt", pt}, {"edges", edges}, {"max_pt_after", worst}, {"offending", offending}});
}

inline GraphVerdict check_finite(const Graph& g, const VerifyParams&) {
    const int n = g.order();
    bool ok = true;
    Json data;
    for (Rule rule : {Rule::Z, Rule::ZPlus}) {
        const int th = throttling_number(rule, g).th;
        Json per_k = Json::array();
        for (int k = 0; th < n - k; ++k) {
            const auto cert = extract_certificate_subgraph(g, rule, k);
            const int size = cert.h.order();
            const int th_h = throttling_number(rule, cert.h).th;
            const bool good = size <= 4 * k + 4 && th_h <= size - k - 1 && is_subset(cert.x, g.vertices());
            ok = ok && good;
            per_k.push_back({{"k", k}, {"X", set_json(cert.x)}, {"h", emit_graph6(cert.h)}, {"th_h", th_h}, {"ok", good}});
        }
        data[to_string(rule)] = {{"th", th}, {"per_k", per_k}};
    }
    return verdict_of(g, ok, std::move(data));
}

/// S_i = U^(i), T_i = B-hat^(i) with each source matched to its target,
/// renumbered into H = G[X].
inline AcceleratorDecomposition extracted_decomposition(const CertificateSubgraph& c) {
    std::vector<int> index(Graph::kMaxVertices, -1);
    int next = 0;
    for (int v : members(c.x)) index[v] = next++;
    AcceleratorDecomposition d;
    for (int i = 0; i < c.r; ++i) {
        std::vector<int> s, t;
        for (const auto& f : c.witness.schedule.forces)
            if (f.time == i + 1 && contains(c.layers[i], f.target)) {
                s.push_back(index[f.source]);
                t.push_back(index[f.target]);
            }
        d.composition.push_back(static_cast<int>(s.size()) - 1);
        d.s.push_back(std::move(s));
        d.t.push_back(std::move(t));
    }
    return d;
}

inline GraphVerdict check_accelerator(const Graph& g, const VerifyParams& p) {
    const int n = g.order();
    const int th = throttling_number(Rule::Z, g).th;
    bool ok = true, diverges = false;
    Json per_k = Json::array();
    for (int k : p.ks) {
        const auto match = contains_Gk_member(g, k, 1);
        const bool agree = !match.has_value() == (th >= n - k);
        ok = ok && agree;
        Json entry = {{"k", k}, {"member", match ? Json(emit_graph6(match->member.graph)) : Json(nullptr)}, {"agree", agree}};
        if (th < n - k) {
            const auto cert = extract_certificate_subgraph(g, Rule::Z, k);
            const auto d = extracted_decomposition(cert);
            const bool accel = check_decomposition(cert.h, d);
            diverges = diverges || !accel;
            entry["extracted"] = {{"h", emit_graph6(cert.h)}, {"decomposition", to_json(d)}, {"accelerator", accel}};
        }
        per_k.push_back(entry);
    }
    return verdict_of(g, ok, {{"th", th}, {"n", n}, {"per_k", per_k}, {"divergence", diverges}});
}

inline GraphVerdict check_exact(const Graph& g, const VerifyParams& p) {
    const int n = g.order();
    const int th = throttling_number(Rule::Z, g).th;
    bool ok = true;
    Json per_k = Json::array();
    for (int k : p.ks) {
        const bool free_k = !contains_Gk_member(g, k, 1);
        const bool has_prev = contains_Gk_member(g, k - 1, 1).has_value();
        const bool agree = (th == n - k) == (free_k && has_prev);
        ok = ok && agree;
        per_k.push_back({{"k", k}, {"Gk_free", free_k}, {"has_previous", has_prev}, {"agree", agree}});
    }
    return verdict_of(g, ok, {{"th", th}, {"n", n}, {"per_k", per_k}});
}

/// Trees obtained by one edge contraction or one leaf deletion.
inline std::vector<Graph> tree_minors(const Graph& t) {
    std::vector<Graph> out;
    if (t.order() < 2) return out;
    for (const auto& e : t.edges()) out.push_back(contract_edge(t, e.u, e.v));
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) == 1) out.push_back(induced_subgraph(t, t.vertices() & ~bit(v)));
    return out;
}

inline GraphVerdict check_tree_monotone(const Graph& t, const VerifyParams&) {
    const int th = throttling_number(Rule::ZPlus, t).th;
    int worst = 0;
    Json offending = Json::array();
    const auto minors = tree_minors(t);
    for (const auto& m : minors) {
        const int th_m = throttling_number(Rule::ZPlus, m).th;
        worst = std::max(worst, th_m);
        if (th_m > th) offending.push_back(emit_graph6(m));
    }
    return verdict_of(t, offending.empty(),
                      {{"thplus", th}, {"minors", minors.size()}, {"max_minor_thplus", worst}, {"offending", offending}});
}

/// Largest spectral radius per (n, m) over connected graphs.
using SpectralTable = std::map<std::pair<int, int>, double>;

inline SpectralTable spectral_table(const std::vector<Graph>& corpus, int workers) {
    SpectralTable table;
    std::vector<int> orders;
    for (const auto& g : corpus) {
        if (g.order() > kSpectralMaxVertices)
            throw CapacityError("spectral checks support at most 7 vertices, got " + std::to_string(g.order()));
        if (std::ranges::find(orders, g.order()) == orders.end()) orders.push_back(g.order());
    }
    for (int n : orders) {
        const auto all = enumerate_connected(n);
        const auto radii = parallel_map<double>(all.size(), workers, [&](std::size_t i) { return spectral_radius(all[i]); });
        for (std::size_t i = 0; i < all.size(); ++i) {
            auto [it, fresh] = table.try_emplace({n, all[i].size()}, radii[i]);
            if (!fresh) it->second = std::max(it->second, radii[i]);
        }
    }
    return table;
}

inline Json spectral_data(const Graph& g, const SpectralTable& table, bool& extremal, int& th) {
    const double radius = spectral_radius(g);
    const double best = table.at({g.order(), g.size()});
    extremal = radius >= best - kSpectralTieTolerance;
    th = throttling_number(Rule::Z, g).th;
    return {{"n", g.order()}, {"m", g.size()}, {"radius", radius}, {"max_radius", best}, {"extremal", extremal}, {"th", th}};
}

} // namespace detail

/// A registered check: its corpus defaults and capacity.
struct TheoremInfo {
    std::string id;
    std::string description;
    int default_nmax = 7;
    int max_n = 7;
    std::vector<int> default_ks;
};

inline const std::vector<TheoremInfo>& theorems() {
    static const std::vector<TheoremInfo> list = {
        {"thm-th-eq-n", "th(G) = n iff no induced P4, C4 or bowtie", 7, 12, {}},
        {"thm-thplus-high", "th+(G) against the K3bar / C5 / house / double diamond trichotomy", 7, 12, {}},
        {"thm-psd-char", "th+(G) <= t iff a minor script from K_a x T_{k,b} with a + b = t exists", 6, 7, {}},
        {"thm-psd-floor-char", "floor th+(G) <= t iff a script with edge deletions exists", 5, 6, {}},
        {"cor-spanning-supergraphs", "floor th+(G) is the minimum th+ over spanning supergraphs", 5, 6, {}},
        {"lem-savings", "th_R(G) < n - k iff some forcing set saves at least k + 1 (R = Z, Z+)", 6, 12, {}},
        {"lem-contraction", "contracting a forcing-tree edge never raises PSD propagation time", 7, 12, {}},
        {"thm-finite", "the extracted H has |H| <= 4k + 4 and th_R(H) <= |H| - k - 1 (R = Z, Z+)", 7, 10, {}},
        {"thm-accelerator", "th(G) >= n - k iff G has no induced member of G_k", 7, 12, {0, 1}},
        {"cor-exact", "th(G) = n - k iff G is G_k-free and contains a member of G_{k-1}", 7, 12, {1}},
        {"cor-tree-monotone", "th+ does not increase under tree minors", 7, 12, {}},
        {"cor-spectral", "graphs of largest spectral radius for their (n, m) have th = n", 7, 7, {}},
        {"scan-spectral-converse", "exploratory: graphs with th = n that are not spectrally extremal", 7, 7, {}},
    };
    return list;
}

inline const TheoremInfo& theorem_info(std::string_view id) {
    for (const auto& t : theorems())
        if (t.id == id) return t;
    std::string known;
    for (const auto& t : theorems()) known += (known.empty() ? "" : ", ") + t.id;
    throw UsageError("unknown theorem id '" + std::string(id) + "' (known: " + known + ")");
}

namespace detail {

inline Graph random_connected_graph(int n, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(0.5);
    while (true) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) edges.push_back({u, v});
        Graph g(n, edges);
        if (is_connected(g)) return g;
    }
}

/// A uniformly sized random subset, grown one random vertex at a time until
/// it is a PSD forcing set.
inline VertexSet random_forcing_set(const Graph& g, std::mt19937_64& rng) {
    const int n = g.order();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const int start = std::uniform_int_distribution<int>(1, n)(rng);
    VertexSet b = 0;
    for (int i = 0; i < n; ++i) {
        b |= bit(order[i]);
        if (i + 1 >= start && deterministic_time(Rule::ZPlus, g, b)) break;
    }
    return b;
}

} // namespace detail

/// Runs one check over the corpus. Records follow corpus order whatever the
/// worker count. lem-contraction draws `trials` random connected graphs with
/// nmin..nmax vertices when the corpus source is "random", otherwise one
/// random forcing set per corpus graph.
inline VerificationReport verify(std::string_view id, const Corpus& corpus, VerifyParams params = {}) {
    const TheoremInfo& info = theorem_info(id);
    const auto start = std::chrono::steady_clock::now();
    if (params.ks.empty()) params.ks = info.default_ks;

    std::vector<Graph> graphs;
    std::vector<VertexSet> sets;
    std::mt19937_64 rng(params.seed);
    if (info.id == "lem-contraction" && corpus.source == "random") {
        if (corpus.nmax > info.max_n || corpus.nmax < 1 || corpus.nmin > corpus.nmax)
            throw CapacityError("lem-contraction draws graphs with 1..12 vertices");
        std::uniform_int_distribution<int> order(std::max(1, corpus.nmin), corpus.nmax);
        for (int i = 0; i < params.trials; ++i) graphs.push_back(detail::random_connected_graph(order(rng), rng));
    } else {
        for (const auto& g : corpus.graphs)
            if (info.id != "cor-tree-monotone" || (is_connected(g) && g.size() == g.order() - 1)) graphs.push_back(g);
    }
    for (const auto& g : graphs) {
        if (g.order() > info.max_n)
            throw CapacityError(info.id + " supports graphs with at most " + std::to_string(info.max_n) +
                                " vertices, got " + std::to_string(g.order()));
        if (g.order() == 0 || !is_connected(g))
            throw DomainError(info.id + " expects connected graphs; " + emit_graph6(g) + " is not");
    }
    if (info.id == "lem-contraction")
        for (const auto& g : graphs) sets.push_back(detail::random_forcing_set(g, rng));
    if (info.id == "thm-accelerator" || info.id == "cor-exact") {
        for (int k : params.ks)
            if (k < (info.id == "cor-exact" ? 1 : 0))
                throw UsageError(info.id + " needs k >= " + (info.id == "cor-exact" ? "1" : "0"));
        std::vector<int> orders;
        for (const auto& g : graphs)
            if (std::ranges::find(orders, g.order()) == orders.end()) orders.push_back(g.order());
        for (int k : params.ks)
            for (int kk : {k - 1, k})
                if (kk >= 0)
                    for (int n : orders) generate_Gk(kk, {true, std::min(n, 4 * kk + 4)}, params.workers);
    }
    detail::SpectralTable table;
    if (info.id == "cor-spectral" || info.id == "scan-spectral-converse") table = detail::spectral_table(graphs, params.workers);

    std::function<GraphVerdict(std::size_t)> check;
    const auto& p = params;
    if (info.id == "thm-th-eq-n") check = [&](std::size_t i) { return detail::check_th_eq_n(graphs[i], p); };
    else if (info.id == "thm-thplus-high") check = [&](std::size_t i) { return detail::check_thplus_high(graphs[i], p); };
    else if (info.id == "thm-psd-char")
        check = [&](std::size_t i) { return detail::check_characterization(graphs[i], Rule::ZPlus, Flavor::psd); };
    else if (info.id == "thm-psd-floor-char")
        check = [&](std::size_t i) { return detail::check_characterization(graphs[i], Rule::ZPlusFloor, Flavor::psd_floor); };
    else if (info.id == "cor-spanning-supergraphs")
        check = [&](std::size_t i) { return detail::check_spanning_supergraphs(graphs[i], p); };
    else if (info.id == "lem-savings") check = [&](std::size_t i) { return detail::check_savings(graphs[i], p); };
    else if (info.id == "lem-contraction") check = [&](std::size_t i) { return detail::check_contraction(graphs[i], sets[i]); };
    else if (info.id == "thm-finite") check = [&](std::size_t i) { return detail::check_finite(graphs[i], p); };
    else if (info.id == "thm-accelerator") check = [&](std::size_t i) { return detail::check_accelerator(graphs[i], p); };
    else if (info.id == "cor-exact") check = [&](std::size_t i) { return detail::check_exact(graphs[i], p); };
    else if (info.id == "cor-tree-monotone") check = [&](std::size_t i) { return detail::check_tree_monotone(graphs[i], p); };
    else if (info.id == "cor-spectral")
        check = [&](std::size_t i) {
            bool extremal = false;
            int th = 0;
            Json data = detail::spectral_data(graphs[i], table, extremal, th);
            return detail::verdict_of(graphs[i], !extremal || th == graphs[i].order(), std::move(data));
        };
    else
        check = [&](std::size_t i) {
            bool extremal = false;
            int th = 0;
            Json data = detail::spectral_data(graphs[i], table, extremal, th);
            data["converse_counterexample"] = th == graphs[i].order() && !extremal;
            return GraphVerdict{emit_graph6(graphs[i]), "info", std::move(data)};
        };

    VerificationReport report;
    report.theorem = info.id;
    report.corpus = corpus.descriptor();
    report.corpus["graphs"] = graphs.size();
    if (info.id == "cor-tree-monotone") report.corpus["filter"] = "trees";
    report.params = {{"ks", params.ks}};
    if (info.id == "lem-contraction") {
        report.params["seed"] = params.seed;
        if (corpus.source == "random") report.params["trials"] = params.trials;
    }
    report.records = parallel_map<GraphVerdict>(graphs.size(), params.workers, check);
    for (const auto& r : report.records) {
        if (r.verdict == "pass") ++report.passed;
        else if (r.verdict == "fail") ++report.failed;
        else ++report.info;
        if (r.data.contains("divergence") && r.data["divergence"].get<bool>()) ++report.divergences;
        if (r.data.contains("converse_counterexample") && r.data["converse_counterexample"].get<bool>())
            ++report.divergences;
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Corpus a theorem runs on when no file is given: connected graphs with
/// nmin..nmax vertices, or random trials for lem-contraction.
inline Corpus default_corpus(std::string_view id, int nmin, int nmax) {
    const TheoremInfo& info = theorem_info(id);
    if (nmax < 0) nmax = info.default_nmax;
    if (info.id == "lem-contraction") return {"random", std::max(1, nmin), nmax, {}};
    return enumerated_corpus(nmin, nmax);
}

} // namespace zft
