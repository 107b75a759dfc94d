#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include "zft/zft.hpp"

using namespace zft;

namespace {

struct Input {
    std::string g6, file, edges, name;

    void attach(CLI::App* cmd) {
        auto* g = cmd->add_option("--g6", g6, "graph6 string");
        auto* f = cmd->add_option("--file", file, "graph6 file (first graph is used)");
        auto* e = cmd->add_option("--edges", edges, "edge-list file: 'n m' then m pairs 'u v', 0-based");
        auto* n = cmd->add_option("--name", name, "built-in graph name");
        g->excludes(f, e, n);
        f->excludes(e, n);
        e->excludes(n);
    }

    Graph load() const {
        if (!g6.empty()) return parse_graph6(g6);
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw UsageError("--file: cannot open " + file);
            std::string line;
            while (std::getline(in, line))
                if (!detail::trim_line_end(line).empty()) return parse_graph6(line);
            throw UsageError("--file: " + file + " holds no graph");
        }
        if (!edges.empty()) {
            std::ifstream in(edges);
            if (!in) throw UsageError("--edges: cannot open " + edges);
            std::stringstream text;
            text << in.rdbuf();
            return parse_edge_list(text.str());
        }
        if (!name.empty()) return named_graph(name);
        throw UsageError("no input graph: give one of --g6, --file, --edges, --name");
    }
};

struct Common {
    bool json = false;
    int workers = default_workers();
    std::string out;

    void attach(CLI::App* cmd, bool with_out = true) {
        cmd->add_flag("--json", json, "JSON output");
        cmd->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
        if (with_out) cmd->add_option("--out", out, "write output to this file instead of stdout");
    }
};

/// Redirects to --out when given.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw UsageError("--out: cannot write " + path);
        }
    }
    std::ostream& operator()() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout)); }

std::string subscript(int x) {
    static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    std::string out;
    for (char c : std::to_string(x)) out += digits[c - '0'];
    return out;
}

std::string vertex_name(const Graph& g, int v) { return g.labeled() ? g.label(v) : "v" + subscript(v + 1); }

std::string set_text(const Graph& g, VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : members(s)) {
        out += (first ? "" : ", ") + vertex_name(g, v);
        first = false;
    }
    return out + "}";
}

VertexSet parse_vertex_set(const std::string& text, const Graph& g, const char* flag) {
    VertexSet s = 0;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        int v = -1;
        try {
            std::size_t used = 0;
            v = std::stoi(item, &used);
            if (used != item.size()) v = -1;
        } catch (const std::exception&) {
            v = -1;
        }
        if (v < 0) throw UsageError(std::string(flag) + ": '" + item + "' is not a vertex index");
        if (v >= g.order()) throw UsageError(std::string(flag) + ": vertex " + item + " is out of range");
        s |= bit(v);
    }
    return s;
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string(flag) + ": '" + item + "' is not an integer");
        }
    }
    return out;
}

void print_layers(std::ostream& out, const Graph& g, const ForcingSchedule& s) {
    for (int t = 0; t < s.propagation_time(); ++t) {
        out << "  t=" << t + 1 << ": " << set_text(g, s.layers[t]) << " <-";
        for (const auto& f : s.forces)
            if (f.time == t + 1)
                out << ' ' << vertex_name(g, f.source) << "->" << vertex_name(g, f.target)
                    << (f.kind == ForceKind::hop ? " (hop)" : "");
        out << '\n';
    }
}

int run_th(const Input& in, const Common& c, const std::string& rule_name) {
    const Rule rule = parse_rule(rule_name);
    const Graph g = in.load();
    const auto cert = throttling_number(rule, g);
    Sink sink(c.out);
    if (c.json) {
        Json j = to_json(cert);
        j["n"] = g.order();
        sink() << j.dump() << '\n';
        return 0;
    }
    sink() << "th" << symbol(rule) << " = " << cert.th << ", B = " << set_text(g, cert.blue) << ", pt = " << cert.pt << '\n';
    print_layers(sink(), g, cert.schedule);
    return 0;
}

int run_pt(const Input& in, const Common& c, const std::string& rule_name, const std::string& blue) {
    const Rule rule = parse_rule(rule_name);
    const Graph g = in.load();
    const VertexSet b = parse_vertex_set(blue, g, "--blue");
    const auto result = propagate(rule, g, b);
    Sink sink(c.out);
    if (stalled(result)) {
        const auto& st = std::get<Stalled>(result);
        if (c.json)
            sink() << Json{{"rule", to_string(rule)}, {"B", set_json(b)}, {"pt", nullptr}, {"stalled", set_json(st.blue)}}.dump()
                     << '\n';
        else
            sink() << "pt" << symbol(rule) << " = infinite, B = " << set_text(g, b) << " stalls at "
                     << set_text(g, st.blue) << '\n';
        return 0;
    }
    const auto& s = schedule_of(result);
    if (c.json) {
        Json j = to_json(s);
        j["pt"] = s.propagation_time();
        sink() << j.dump() << '\n';
        return 0;
    }
    sink() << "pt" << symbol(rule) << " = " << s.propagation_time() << ", B = " << set_text(g, b) << '\n';
    print_layers(sink(), g, s);
    return 0;
}

int run_extend(const Input& in, const Common& c, const std::string& blue) {
    const Graph g = in.load();
    const VertexSet b = parse_vertex_set(blue, g, "--blue");
    const auto result = propagate_deterministic(Rule::ZPlus, g, b);
    if (stalled(result)) throw DomainError("B = " + format_set(b) + " is not a PSD forcing set");
    const auto ext = build_extension(g, schedule_of(result));
    Sink sink(c.out);
    const Json j = to_json(ext, g);
    if (c.json) {
        sink() << j.dump() << '\n';
        return 0;
    }
    sink() << j["g6"].get<std::string>() << '\n';
    for (int v = 0; v < ext.vertex_count(); ++v)
        sink() << "  " << v << " -> " << vertex_name(g, ext.label(v)) << '\n';
    return 0;
}

int run_charcert(const Input& in, const Common& c, int t, const std::string& flavor_name) {
    const Flavor flavor = parse_flavor(flavor_name);
    const Graph g = in.load();
    const auto script = characterization_certificate(g, t, flavor);
    Sink sink(c.out);
    if (c.json) {
        sink() << (script ? to_json(*script) : Json(nullptr)).dump() << '\n';
        return 0;
    }
    if (!script) {
        sink() << "none\n";
        return 0;
    }
    const Json j = to_json(*script);
    sink() << "K_" << script->a << " x T_{" << script->k << "," << script->b << "} (" << to_string(flavor) << ")\n";
    for (const char* key : {"contract", "delete"}) {
        sink() << key << ": " << j[key].size() << '\n';
        for (const auto& e : j[key]) sink() << "  " << e[0].dump() << " " << e[1].dump() << '\n';
    }
    return 0;
}

int run_catalog(const Common& c, int k, bool reduced, int max_vertices, const std::string& sidecar) {
    const auto members = generate_Gk(k, {reduced, max_vertices}, c.workers);
    Sink sink(c.out);
    std::ofstream side;
    if (!sidecar.empty()) {
        side.open(sidecar);
        if (!side) throw UsageError("--sidecar: cannot write " + sidecar);
    }
    if (c.json) {
        std::ostringstream discard;
        write_catalog(*members, discard, &sink());
        if (side.is_open()) write_catalog(*members, discard, &side);
    } else {
        write_catalog(*members, sink(), side.is_open() ? &side : nullptr);
    }
    return 0;
}

int run_accel(const Input& in, const Common& c, const std::string& composition) {
    const Graph g = in.load();
    const auto d = is_accelerator(g, parse_int_list(composition, "--composition"));
    Sink sink(c.out);
    if (c.json) {
        sink() << (d ? to_json(*d) : Json(nullptr)).dump() << '\n';
        return 0;
    }
    if (!d) {
        sink() << "none\n";
        return 0;
    }
    for (std::size_t i = 0; i < d->s.size(); ++i) {
        sink() << "S" << i + 1 << " = " << set_text(g, d->s_set(static_cast<int>(i))) << ", T" << i + 1 << " = "
                 << set_text(g, d->t_set(static_cast<int>(i))) << ", matching";
        for (std::size_t j = 0; j < d->s[i].size(); ++j)
            sink() << ' ' << vertex_name(g, d->s[i][j]) << '-' << vertex_name(g, d->t[i][j]);
        sink() << '\n';
    }
    return 0;
}

int run_verify(const Common& c, const std::string& theorem, int nmin, int nmax, const std::string& corpus_file,
               int trials, std::uint64_t seed, const std::string& ks) {
    const TheoremInfo& info = theorem_info(theorem);
    Corpus corpus;
    if (!corpus_file.empty()) {
        std::ifstream in(corpus_file);
        if (!in) throw UsageError("--corpus: cannot open " + corpus_file);
        corpus = ingest_graph6(in, corpus_file);
    } else {
        corpus = default_corpus(info.id, nmin, nmax);
    }
    VerifyParams p;
    p.workers = c.workers;
    p.trials = trials;
    p.seed = seed;
    if (!ks.empty()) p.ks = parse_int_list(ks, "--ks");
    const auto report = verify(info.id, corpus, p);

    if (!c.out.empty()) {
        Sink file(c.out);
        report.write_jsonl(file());
    }
    if (c.json) {
        report.write_jsonl(std::cout);
    } else {
        const bool color = use_color();
        const std::string verdict = report.verdict();
        const char* paint = verdict == "pass" ? "\033[32m" : verdict == "fail" ? "\033[31m" : "\033[33m";
        std::cout << (color ? paint : "") << verdict << (color ? "\033[0m" : "") << ", " << report.records.size()
                  << " graphs\n";
        std::cout << "  " << info.id << ": " << info.description << '\n';
        std::cout << "  passed " << report.passed << ", failed " << report.failed;
        if (report.info) std::cout << ", info " << report.info;
        if (report.divergences) std::cout << ", flagged " << report.divergences;
        std::cout << std::fixed << std::setprecision(2) << " (" << report.wall_seconds << " s)\n";
        for (const auto& ce : report.counterexamples()) std::cout << "  counterexample " << ce["g6"].get<std::string>() << '\n';
    }
    return report.failed == 0 ? 0 : 1;
}

int run_spectral(const Input& in, const Common& c, const std::string& max) {
    Sink sink(c.out);
    if (!max.empty()) {
        const auto nm = parse_int_list(max, "--max");
        if (nm.size() != 2) throw UsageError("--max expects n,m");
        const auto graphs = max_spectral_graphs(nm[0], nm[1]);
        if (c.json) {
            Json j = Json::array();
            for (const auto& g : graphs) j.push_back({{"g6", emit_graph6(g)}, {"radius", spectral_radius(g)}});
            sink() << j.dump() << '\n';
        } else {
            for (const auto& g : graphs)
                sink() << emit_graph6(g) << std::fixed << std::setprecision(9) << "  " << spectral_radius(g) << '\n';
        }
        return 0;
    }
    const Graph g = in.load();
    const double r = spectral_radius(g);
    if (c.json)
        sink() << Json{{"g6", emit_graph6(g)}, {"radius", r}}.dump() << '\n';
    else
        sink() << std::fixed << std::setprecision(9) << "radius = " << r << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Throttling computations on small graphs"};
    app.require_subcommand(1);
    app.footer("Vertex sets are comma-separated 0-based indices. Exit codes: 0 success, 1 domain or capacity error "
               "(or a failed verification), 2 usage or parse error.");

    std::string rule, blue, flavor = "psd", composition, theorem, corpus_file, ks, max, sidecar;
    int t = 0, k = 0, max_vertices = -1, nmin = 2, nmax = -1, trials = 500;
    std::uint64_t seed = VerifyParams{}.seed;
    bool reduced = false, list = false;
    Input in_th, in_pt, in_extend, in_charcert, in_accel, in_spectral;
    Common c_th, c_pt, c_extend, c_charcert, c_catalog, c_accel, c_verify, c_spectral;

    auto* th = app.add_subcommand("th", "throttling number with an optimal certificate");
    th->add_option("--rule", rule, "z, zfloor, zplus or zplusfloor")->required();
    in_th.attach(th);
    c_th.attach(th);

    auto* pt = app.add_subcommand("pt", "propagation time of a given set");
    pt->add_option("--rule", rule, "z, zfloor, zplus or zplusfloor")->required();
    pt->add_option("--blue", blue, "initial blue set")->required();
    in_pt.attach(pt);
    c_pt.attach(pt);

    auto* extend = app.add_subcommand("extend", "PSD extension for a forcing set");
    extend->add_option("--blue", blue, "initial blue set")->required();
    in_extend.attach(extend);
    c_extend.attach(extend);

    auto* charcert = app.add_subcommand("charcert", "minor script certifying th+ <= t");
    charcert->add_option("--t", t, "target value")->required();
    charcert->add_option("--flavor", flavor, "psd or psdfloor");
    in_charcert.attach(charcert);
    c_charcert.attach(charcert);

    auto* catalog = app.add_subcommand("catalog", "accelerator catalog G_k as graph6 lines");
    catalog->add_option("--k", k, "k in 0..2")->required();
    catalog->add_flag("--reduced", reduced, "drop members containing a smaller member");
    catalog->add_option("--max-vertices", max_vertices, "largest member order");
    catalog->add_option("--sidecar", sidecar, "write one JSON line per member here");
    c_catalog.attach(catalog);

    auto* accel = app.add_subcommand("accel", "accelerator decomposition for a composition");
    accel->add_option("--composition", composition, "a1,a2,...")->required();
    in_accel.attach(accel);
    c_accel.attach(accel);

    auto* ver = app.add_subcommand("verify", "check a theorem over a corpus");
    ver->add_option("--theorem", theorem, "theorem id (see --list)");
    ver->add_flag("--list", list, "list theorem ids and exit");
    ver->add_option("--nmin", nmin, "smallest order of the enumerated corpus");
    ver->add_option("--nmax", nmax, "largest order (theorem default when omitted)");
    ver->add_option("--corpus", corpus_file, "graph6 corpus file instead of enumeration");
    ver->add_option("--trials", trials, "random trials for lem-contraction")->check(CLI::NonNegativeNumber);
    ver->add_option("--seed", seed, "random seed for lem-contraction");
    ver->add_option("--ks", ks, "values of k, comma-separated");
    c_verify.attach(ver);

    auto* spectral = app.add_subcommand("spectral", "spectral radius, or extremal graphs with --max n,m");
    spectral->add_option("--max", max, "n,m");
    in_spectral.attach(spectral);
    c_spectral.attach(spectral);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*th) return run_th(in_th, c_th, rule);
        if (*pt) return run_pt(in_pt, c_pt, rule, blue);
        if (*extend) return run_extend(in_extend, c_extend, blue);
        if (*charcert) return run_charcert(in_charcert, c_charcert, t, flavor);
        if (*catalog) return run_catalog(c_catalog, k, reduced, max_vertices, sidecar);
        if (*accel) return run_accel(in_accel, c_accel, composition);
        if (*ver) {
            if (list) {
                for (const auto& info : theorems()) std::cout << info.id << "  " << info.description << '\n';
                return 0;
            }
            if (theorem.empty()) throw UsageError("--theorem is required");
            return run_verify(c_verify, theorem, nmin, nmax, corpus_file, trials, seed, ks);
        }
        if (*spectral) return run_spectral(in_spectral, c_spectral, max);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
