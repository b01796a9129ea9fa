#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "epc/epc.hpp"

using nlohmann::json;

namespace {

constexpr int kOk = 0, kVerifyFailed = 1, kUsage = 2, kDefect = 3;

// Bad input files and refused parameters are the caller's problem.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }
    void reset() { start_ = std::chrono::steady_clock::now(); }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Report {
    json j;
    explicit Report(const std::string& command) {
        j["command"] = command;
        j["inputs"] = json::object();
        j["profile"] = nullptr;
        j["outcome"] = nullptr;
        j["sizes"] = json::object();
        j["timings_ms"] = json::object();
        j["certificate"] = nullptr;
    }
    void emit(std::ostream& os = std::cout) const { os << j.dump(2) << "\n"; }
};

epc::Graph load_graph(const std::string& path, Report& rep, Stopwatch& sw) {
    sw.reset();
    epc::Graph g = epc::parse_graph(slurp(path));
    rep.j["timings_ms"]["parse"] = sw.ms();
    rep.j["sizes"]["n"] = g.n();
    rep.j["sizes"]["m"] = g.m();
    rep.j["inputs"]["graph_hash"] = epc::hash_hex(epc::graph_hash(g));
    return g;
}

epc::ConstantsProfile load_profile(const std::string& text, Report& rep) {
    epc::ConstantsProfile p = epc::ConstantsProfile::parse(text);
    rep.j["profile"] = p.name();
    return p;
}

void write_cert(const epc::Certificate& c, const std::string& path, Report& rep) {
    if (path.empty()) return;
    spill(path, epc::to_json(c));
    rep.j["certificate"] = path;
}

std::vector<long long> load_weights(const std::string& path, int n) {
    std::vector<long long> w(n, 1);
    std::istringstream in(slurp(path));
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first != "w") ls.seekg(0);
        long long v = -1, x = -1;
        std::string extra;
        if (!(ls >> v >> x) || (ls >> extra)) throw epc::ParseError(line_no, "expected '[w] <vertex> <weight>'");
        if (v < 0 || v >= n) throw epc::ParseError(line_no, "vertex out of range");
        if (x < 0) throw epc::ParseError(line_no, "negative weight");
        w[v] = x;
    }
    return w;
}

json holes_json(const std::vector<epc::Hole>& hs) {
    json a = json::array();
    for (const auto& h : hs) a.push_back(h);
    return a;
}

// gen: edge list and sidecar to files when --out is given, else the edge
// list goes to stdout and the report to stderr.
void finish_gen(const epc::Graph& g, const json& sidecar, const std::string& out, const std::string& sidecar_path,
                Report& rep) {
    rep.j["sizes"]["n"] = g.n();
    rep.j["sizes"]["m"] = g.m();
    rep.j["outcome"] = "generated";
    rep.j["inputs"]["graph_hash"] = epc::hash_hex(epc::graph_hash(g));
    std::string side = sidecar_path.empty() && !out.empty() ? out + ".json" : sidecar_path;
    if (!side.empty()) {
        spill(side, sidecar.dump(2) + "\n");
        rep.j["sidecar"] = side;
    }
    if (out.empty()) {
        std::cout << epc::write_edge_list(g);
        rep.emit(std::cerr);
        return;
    }
    spill(out, epc::write_edge_list(g));
    rep.j["graph"] = out;
    rep.emit();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hole packing and chordal deletion toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "epc 0.1.0");

    std::string graph_path, out_path, ledger_path, weights_path, profile_text = "production";
    int k = 1;

    auto add_profile = [&](CLI::App* sub) {
        sub->add_option("--profile", profile_text, "production or test:<scale>")->envname("EPC_PROFILE");
    };

    auto* solve = app.add_subcommand("solve", "k+1 disjoint holes or a chordal deletion set");
    solve->add_option("--graph", graph_path, "edge list, - for stdin")->required();
    solve->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
    add_profile(solve);
    solve->add_option("--out", out_path, "certificate file");
    solve->add_option("--ledger", ledger_path, "per-vertex provenance JSON");

    auto* approx = app.add_subcommand("approx-cvd", "approximate chordal vertex deletion");
    approx->add_option("--graph", graph_path)->required();
    add_profile(approx);
    approx->add_option("--out", out_path);

    auto* chordal = app.add_subcommand("chordal", "chordality test with certificate");
    chordal->add_option("--graph", graph_path)->required();
    chordal->add_option("--out", out_path, "hole certificate when not chordal");

    auto* shortest = app.add_subcommand("shortest-hole", "a shortest hole");
    shortest->add_option("--graph", graph_path)->required();
    shortest->add_option("--out", out_path);

    std::vector<std::string> certs;
    int jobs = 1;
    auto* verify = app.add_subcommand("verify", "check certificates against a graph");
    verify->add_option("--graph", graph_path)->required();
    verify->add_option("--cert", certs)->required()->expected(1, -1);
    verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    auto* wsolve = app.add_subcommand("weighted-solve", "weighted cycle packing or cover");
    wsolve->add_option("--graph", graph_path)->required();
    wsolve->add_option("--weights", weights_path, "'[w] <vertex> <weight>' lines; default: w lines of the graph file");
    wsolve->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
    add_profile(wsolve);
    wsolve->add_option("--out", out_path);

    std::string sidecar_path;
    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    auto gen_outputs = [&](CLI::App* sub) {
        sub->add_option("--out", out_path, "edge list file; stdout when absent");
        sub->add_option("--sidecar", sidecar_path, "ground-truth JSON; defaults to <out>.json");
    };
    int x = 3, ell = 5, n = 0, spacing = 25;
    std::uint64_t seed = 0;
    std::string decor, kind = "gnp";
    double p = 0.5;
    auto* lower = gen->add_subcommand("lower", "shared-vertex lower-bound family");
    lower->add_option("--x", x)->required();
    lower->add_option("--ell", ell)->required();
    gen_outputs(lower);
    auto* longhole = gen->add_subcommand("longhole", "long hole with planted gadgets");
    longhole->add_option("--n", n)->required();
    longhole->add_option("--seed", seed)->required();
    longhole->add_option("--decor", decor, "kind[@pos[:arg]],...");
    longhole->add_option("--spacing", spacing);
    gen_outputs(longhole);
    auto* random = gen->add_subcommand("random", "G(n,p) or random cubic");
    random->add_option("--kind", kind)->check(CLI::IsMember({"gnp", "cubic"}));
    random->add_option("--n", n)->required();
    random->add_option("--p", p);
    random->add_option("--seed", seed)->required();
    gen_outputs(random);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    Stopwatch total, sw;
    std::string command;
    try {
        if (*solve) {
            Report rep("solve");
            rep.j["inputs"]["graph"] = graph_path;
            rep.j["inputs"]["k"] = k;
            epc::Graph g = load_graph(graph_path, rep, sw);
            epc::SolveOptions opts;
            opts.profile = load_profile(profile_text, rep);
            sw.reset();
            epc::DualityOutcome r = epc::epc_solve(g, k, opts);
            rep.j["timings_ms"]["solve"] = sw.ms();
            rep.j["outcome"] = r.packed() ? "packing" : "hitting";
            if (r.packed()) {
                rep.j["sizes"]["holes"] = r.packing.size();
                rep.j["packed_by"] = r.packed_by;
            } else {
                rep.j["sizes"]["hitting"] = r.hitting.size();
                rep.j["sizes"]["bound"] = r.bound;
                rep.j["sizes"]["peeled"] = r.steps.size();
            }
            write_cert(epc::certificate_for(g, r), out_path, rep);
            if (!ledger_path.empty()) {
                spill(ledger_path, epc::ledger_json(r));
                rep.j["ledger"] = ledger_path;
            }
            std::cerr << (r.packed() ? "found " + std::to_string(r.packing.size()) + " disjoint holes"
                                     : "deleting " + std::to_string(r.hitting.size()) + " vertices leaves a chordal graph")
                      << "\n";
            rep.j["timings_ms"]["total"] = total.ms();
            rep.emit();
        } else if (*approx) {
            Report rep("approx-cvd");
            rep.j["inputs"]["graph"] = graph_path;
            epc::Graph g = load_graph(graph_path, rep, sw);
            epc::SolveOptions opts;
            opts.profile = load_profile(profile_text, rep);
            sw.reset();
            epc::ApproxOutcome r = epc::approx_cvd(g, opts);
            rep.j["timings_ms"]["solve"] = sw.ms();
            rep.j["outcome"] = "deletion_set";
            rep.j["sizes"]["deletion"] = r.deletion.size();
            rep.j["sizes"]["k_final"] = r.k_final;
            rep.j["sizes"]["greedy_packing"] = r.greedy;
            epc::Certificate c = epc::make_certificate(g, "deletion_set");
            c.set = r.deletion;
            c.k = r.k_final;
            c.mode = opts.profile.name();
            write_cert(c, out_path, rep);
            std::cerr << "deletion set of size " << r.deletion.size() << ", at least " << r.k_final
                      << " disjoint holes present\n";
            rep.j["timings_ms"]["total"] = total.ms();
            rep.emit();
        } else if (*chordal) {
            Report rep("chordal");
            rep.j["inputs"]["graph"] = graph_path;
            epc::Graph g = load_graph(graph_path, rep, sw);
            sw.reset();
            epc::ChordalityCertificate cc = epc::is_chordal(g);
            rep.j["timings_ms"]["check"] = sw.ms();
            if (cc.chordal) {
                rep.j["outcome"] = "chordal";
                rep.j["elimination_order"] = cc.peo;
            } else {
                rep.j["outcome"] = "hole";
                rep.j["sizes"]["hole"] = cc.witness.size();
                epc::Certificate c = epc::make_certificate(g, "hole");
                c.holes = {cc.witness};
                write_cert(c, out_path, rep);
            }
            std::cerr << (cc.chordal ? "chordal" : "not chordal") << "\n";
            rep.emit();
        } else if (*shortest) {
            Report rep("shortest-hole");
            rep.j["inputs"]["graph"] = graph_path;
            epc::Graph g = load_graph(graph_path, rep, sw);
            sw.reset();
            auto h = epc::shortest_hole(g);
            rep.j["timings_ms"]["search"] = sw.ms();
            rep.j["outcome"] = h ? "hole" : "none";
            if (h) {
                rep.j["sizes"]["hole"] = h->size();
                rep.j["hole"] = *h;
                epc::Certificate c = epc::make_certificate(g, "hole");
                c.holes = {*h};
                write_cert(c, out_path, rep);
            }
            rep.emit();
        } else if (*verify) {
            Report rep("verify");
            rep.j["inputs"]["graph"] = graph_path;
            rep.j["inputs"]["certificates"] = certs;
            epc::Graph g = load_graph(graph_path, rep, sw);
            std::vector<std::string> texts;
            for (const auto& c : certs) texts.push_back(slurp(c));
            std::vector<epc::oracle::Verdict> verdicts(certs.size());
            std::vector<std::string> errors(certs.size());
            std::atomic<std::size_t> next{0};
            auto work = [&] {
                for (std::size_t i; (i = next++) < texts.size();) {
                    try {
                        verdicts[i] = epc::oracle::verify_certificate(g, epc::certificate_from_json(texts[i]));
                    } catch (const epc::ParseError& e) {
                        errors[i] = e.what();
                    }
                }
            };
            sw.reset();
            std::vector<std::thread> pool;
            for (int t = 1; t < std::min<int>(jobs, static_cast<int>(texts.size())); ++t) pool.emplace_back(work);
            work();
            for (auto& t : pool) t.join();
            rep.j["timings_ms"]["verify"] = sw.ms();
            for (const auto& e : errors)
                if (!e.empty()) throw UsageError(e);
            bool all = true;
            json results = json::array();
            for (std::size_t i = 0; i < certs.size(); ++i) {
                const auto& v = verdicts[i];
                json e{{"certificate", certs[i]}, {"verdict", v.kind}, {"message", v.message}};
                if (!v.witness.empty()) e["witness"] = v.witness;
                results.push_back(std::move(e));
                if (!v.ok) std::cerr << certs[i] << ": " << v.kind << ": " << v.message << "\n";
                all = all && v.ok;
            }
            rep.j["outcome"] = all ? "valid" : "invalid";
            rep.j["results"] = std::move(results);
            rep.emit();
            return all ? kOk : kVerifyFailed;
        } else if (*wsolve) {
            Report rep("weighted-solve");
            rep.j["inputs"]["graph"] = graph_path;
            rep.j["inputs"]["k"] = k;
            sw.reset();
            epc::WeightedText wt = epc::parse_weighted(slurp(graph_path));
            epc::Graph& g = wt.graph;
            std::vector<long long> w = wt.weights.empty() ? std::vector<long long>(g.n(), 1) : wt.weights;
            if (!weights_path.empty()) {
                w = load_weights(weights_path, g.n());
                rep.j["inputs"]["weights"] = weights_path;
            }
            rep.j["timings_ms"]["parse"] = sw.ms();
            rep.j["sizes"]["n"] = g.n();
            rep.j["sizes"]["m"] = g.m();
            rep.j["inputs"]["graph_hash"] = epc::hash_hex(epc::graph_hash(g));
            epc::SolveOptions opts;
            opts.profile = load_profile(profile_text, rep);
            sw.reset();
            epc::WeightedOutcome r = epc::weighted_solve(g, w, k, opts);
            rep.j["timings_ms"]["solve"] = sw.ms();
            rep.j["outcome"] = r.packed ? "cycle_packing" : "cycle_cover";
            json doc{{"format", "epc-weighted/1"},
                     {"graph_hash", epc::hash_hex(epc::graph_hash(g))},
                     {"k", k},
                     {"mode", opts.profile.name()},
                     {"weights", w}};
            if (r.packed) {
                rep.j["sizes"]["cycles"] = r.cycles.size();
                doc["kind"] = "cycle_packing";
                doc["cycles"] = r.cycles;
            } else {
                rep.j["sizes"]["cover"] = r.cover.size();
                rep.j["sizes"]["cover_weight"] = r.cover_weight;
                doc["kind"] = "cycle_cover";
                doc["cover"] = r.cover;
                doc["cover_weight"] = r.cover_weight;
            }
            if (!out_path.empty()) {
                spill(out_path, doc.dump(2) + "\n");
                rep.j["certificate"] = out_path;
            }
            rep.j["timings_ms"]["total"] = total.ms();
            rep.emit();
        } else if (*lower) {
            Report rep("gen lower");
            rep.j["inputs"] = {{"x", x}, {"ell", ell}};
            epc::LowerBoundInstance inst = epc::gen_lower_bound(x, ell);
            json side{{"family", "lower"}, {"x", x}, {"ell", ell}, {"shared", inst.shared},
                      {"long_holes", holes_json(inst.long_holes)}};
            finish_gen(inst.g, side, out_path, sidecar_path, rep);
        } else if (*longhole) {
            Report rep("gen longhole");
            rep.j["inputs"] = {{"n", n}, {"seed", seed}, {"decor", decor}, {"spacing", spacing}};
            epc::LongHoleSpec spec;
            spec.n = n;
            spec.seed = seed;
            spec.spacing = spacing;
            spec.decor = epc::parse_decorations(decor);
            epc::LongHoleInstance inst = epc::gen_long_hole(spec);
            json side = json::parse(inst.ledger_json());
            side["family"] = "longhole";
            side["seed"] = seed;
            finish_gen(inst.g, side, out_path, sidecar_path, rep);
        } else if (*random) {
            Report rep("gen random");
            rep.j["inputs"] = {{"kind", kind}, {"n", n}, {"seed", seed}};
            if (kind == "gnp") rep.j["inputs"]["p"] = p;
            epc::Graph g = kind == "gnp" ? epc::gen_gnp(n, p, seed) : epc::gen_cubic(n, seed);
            json side = rep.j["inputs"];
            side["family"] = "random";
            finish_gen(g, side, out_path, sidecar_path, rep);
        }
    } catch (const epc::DefectError& e) {
        std::cerr << "internal defect: " << e.what() << "\n";
        std::cerr << "command line:";
        for (int i = 0; i < argc; ++i) std::cerr << " " << argv[i];
        std::cerr << "\n";
        return kDefect;
    } catch (const epc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}
