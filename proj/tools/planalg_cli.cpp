#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "planalg/data.hpp"
#include "planalg/haagerup.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace planalg;

enum class Mode { exact_preferred, interval_only };
enum class Output { text, json };

struct RunConfig {
    std::string graph_path;
    std::string manifest_path;
    unsigned precision_bits = 256;
    Mode mode = Mode::exact_preferred;
    Output output = Output::text;
    std::uint64_t seed = 1;
    std::size_t max_n = 4;
    int max_k = 4;
    std::size_t n = 4;
    std::string shading = "+";
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

BipartiteGraph load_graph(const RunConfig& cfg) {
    const std::string text = cfg.graph_path.empty() ? bundled_graph_json() : read_file(cfg.graph_path);
    try {
        BipartiteGraph g = BipartiteGraph::from_json(text);
        validate(g);
        return g;
    } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, std::string("graph: ") + e.what());
    }
}

RelationManifest load_manifest(const RunConfig& cfg) {
    return RelationManifest::from_json(cfg.manifest_path.empty() ? bundled_manifest_json()
                                                                  : read_file(cfg.manifest_path));
}

NormOptions norm_options(const RunConfig& cfg) {
    NormOptions o;
    o.fallback_bits = cfg.precision_bits;
    return o;
}

Scalar shown(const Scalar& x, const RunConfig& cfg) {
    return cfg.mode == Mode::interval_only ? Scalar(to_interval(x, cfg.precision_bits)) : x;
}

std::string decimal(const Scalar& x) { return to_decimal(x, 30); }

int cmd_verify_all(const RunConfig& cfg) {
    auto ctx = SpinContext::create(load_graph(cfg), norm_options(cfg));
    const RelationManifest manifest = load_manifest(cfg);
    PipelineOptions options;
    options.interval_only = cfg.mode == Mode::interval_only;
    options.verify.precision_bits = cfg.precision_bits;
    options.max_n = cfg.max_n;
    options.max_k = cfg.max_k;
    PipelineReport report = verify_all(ctx, manifest, options);
    for (const auto& a : check_axioms(ctx, 3, 8, cfg.seed)) {
        RelationReport r;
        r.id = "axiom_" + a.name + "_" + std::to_string(a.n) + to_string(a.shading);
        r.residual_norm = Scalar(0);
        r.certification = a.passed ? Certification::exact_zero : Certification::failed;
        report.checks.push_back(std::move(r));
    }
    if (cfg.output == Output::json) {
        std::cout << report.to_json() << "\n";
    } else {
        std::cout << "generator: low-weight dimension " << report.candidate.low_weight_dimension
                  << ", eigenspace dimension " << report.candidate.eigenspace_dimension << "\n";
        std::cout << "<T,T> = " << to_string(report.candidate.normalization) << "\n";
        for (const auto& c : report.checks)
            std::cout << (c.certified() ? "ok   " : "FAIL ") << c.id << " [" << to_string(c.certification) << "]\n";
        for (const auto& [k, v] : report.moments.entries) std::cout << "tr(T^" << k << ") = " << to_string(v) << "\n";
        for (const auto& r : report.audit)
            std::cout << "audit n=" << r.n << " tl=" << r.tl_dimension << " catalan=" << r.catalan
                      << " span=" << r.span_dimension << " base_loops=" << r.base_loop_count << "\n";
        if (report.precision_bits) std::cout << "precision " << report.precision_bits << " bits\n";
    }
    if (!report.ok()) {
        std::cerr << "verification failed: " << report.first_failure() << "\n";
        return 1;
    }
    return 0;
}

int cmd_graph_info(const RunConfig& cfg) {
    const BipartiteGraph g = load_graph(cfg);
    const PerronData p = perron_vector(g, norm_options(cfg));
    const Scalar d2 = p.delta * p.delta;
    const bool below_two = certified_sign(p.delta - Scalar(2)) == Sign::negative;
    if (cfg.output == Output::json) {
        json j;
        j["hash"] = g.hash();
        j["vertices"] = g.vertex_count();
        j["delta_squared"] = json::parse(to_json(shown(d2, cfg)));
        j["delta_squared_decimal"] = to_decimal(d2, 60);
        j["delta"] = json::parse(to_json(shown(p.delta, cfg)));
        j["below_two"] = below_two;
        json mu = json::object();
        for (std::size_t v = 0; v < g.vertex_count(); ++v) mu[g.vertices()[v].id] = json::parse(to_json(shown(p.mu[v], cfg)));
        j["perron"] = std::move(mu);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "graph " << g.hash() << "\n";
    std::cout << "delta^2 = " << to_string(shown(d2, cfg)) << "\n";
    std::cout << "delta^2 ~ " << to_decimal(d2, 60) << "\n";
    std::cout << "delta = " << to_string(shown(p.delta, cfg)) << " ~ " << decimal(p.delta) << "\n";
    if (below_two) std::cout << "delta < 2: finite-depth regime below the index-four threshold\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        std::cout << "mu(" << g.vertices()[v].id << ") = " << to_string(shown(p.mu[v], cfg)) << " ~ " << decimal(p.mu[v])
                  << "\n";
    return 0;
}

int cmd_loops(const RunConfig& cfg) {
    const BipartiteGraph g = load_graph(cfg);
    const Shading s = shading_from_string(cfg.shading);
    const auto loops = enumerate_loops(g, cfg.n, s);
    const Integer base = count_loops(g, cfg.n, g.base());
    if (cfg.output == Output::json) {
        json j;
        j["n"] = cfg.n;
        j["shading"] = to_string(s);
        j["count"] = loops.size();
        j["base_count"] = base.get_str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "loops n=" << cfg.n << " shading=" << to_string(s) << " count=" << loops.size()
                  << " base_count=" << base << "\n";
    }
    return 0;
}

int cmd_lowweight(const RunConfig& cfg) {
    const ScanReport report = scan_graph(load_graph(cfg), cfg.max_n, norm_options(cfg));
    if (cfg.output == Output::json) {
        json j;
        j["delta"] = json::parse(to_json(shown(report.delta, cfg)));
        j["below_two"] = report.below_two;
        json rows = json::array();
        for (const auto& r : report.rows) {
            json classes = json::array();
            for (const auto& [order, mult] : r.eigenvalues) classes.push_back({{"order", order}, {"multiplicity", mult}});
            rows.push_back({{"n", r.n},
                            {"shading", to_string(r.shading)},
                            {"dimension", r.low_weight_dimension},
                            {"rotation_classes", std::move(classes)}});
        }
        j["rows"] = std::move(rows);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "delta ~ " << decimal(report.delta) << (report.below_two ? " (below 2)" : "") << "\n";
    for (const auto& r : report.rows) {
        std::cout << "n=" << r.n << " shading=" << to_string(r.shading) << " low-weight dimension "
                  << r.low_weight_dimension;
        for (const auto& [order, mult] : r.eigenvalues) std::cout << " [order " << order << ": " << mult << "]";
        std::cout << "\n";
    }
    return 0;
}

int cmd_traces(const RunConfig& cfg) {
    if (cfg.max_k < 1 || cfg.max_k > 6) throw Error(ErrorCode::InvalidArgument, "--max-k must lie in 1..6");
    auto ctx = SpinContext::create(load_graph(cfg), norm_options(cfg));
    GeneratorCandidate c = find_generator(ctx, generator_spec(load_manifest(cfg)));
    if (cfg.mode == Mode::interval_only) c.element = to_interval(c.element, cfg.precision_bits);
    const MomentTable table = moments(c, cfg.max_k, cfg.max_k <= 4);
    const Scalar norm = inner_product(c.element, c.element);
    VerifyOptions options;
    options.precision_bits = cfg.precision_bits;
    bool ok = true;
    std::vector<RelationReport> checks;
    if (cfg.max_k >= 2) checks.push_back(certify_scalar_zero("trace_square_is_norm", table.entries.at(2) - norm, options));
    for (const auto& [k, v] : table.oracle)
        checks.push_back(certify_scalar_zero("trace_power_" + std::to_string(k) + "_oracle", table.entries.at(k) - v, options));
    for (const auto& r : checks) ok = ok && r.certified();
    if (cfg.output == Output::json) {
        json j;
        json rows = json::array();
        for (const auto& [k, v] : table.entries) {
            json r{{"k", k}, {"trace", json::parse(to_json(v))}};
            if (auto it = table.oracle.find(k); it != table.oracle.end()) r["oracle"] = json::parse(to_json(it->second));
            rows.push_back(std::move(r));
        }
        j["traces"] = std::move(rows);
        j["norm"] = json::parse(to_json(norm));
        json cs = json::array();
        for (const auto& r : checks) cs.push_back(json::parse(r.to_json()));
        j["checks"] = std::move(cs);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& [k, v] : table.entries) std::cout << "tr(T^" << k << ") = " << to_string(v) << " ~ " << decimal(v) << "\n";
        std::cout << "<T,T> = " << to_string(norm) << "\n";
        if (cfg.max_k >= 2)
            std::cout << "tr(T^2) = <T,T>: " << (checks.front().certified() ? "yes" : "no") << "\n";
        for (const auto& r : checks) std::cout << (r.certified() ? "ok   " : "FAIL ") << r.id << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planar algebra verification for the Haagerup principal graph"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    std::string mode = "exact-preferred", output = "text";
    app.add_option("--graph", cfg.graph_path, "Principal graph JSON (default: bundled Haagerup graph)");
    app.add_option("--manifest", cfg.manifest_path, "Relation manifest JSON (default: bundled manifest)");
    app.add_option("--precision", cfg.precision_bits, "Interval precision in bits")->check(CLI::Range(64u, 4096u));
    app.add_option("--mode", mode, "exact-preferred or interval-only")
        ->check(CLI::IsMember({"exact-preferred", "interval-only"}));
    app.add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", cfg.seed, "Seed for the random axiom checks");
    app.add_option("--max-n", cfg.max_n, "Largest box size for audits and scans");
    app.add_option("--max-k", cfg.max_k, "Largest power for traces");

    auto* verify = app.add_subcommand("verify-all", "Run the full verification pipeline");
    auto* info = app.add_subcommand("graph-info", "Print the graph norm and Perron-Frobenius vector");
    auto* loops = app.add_subcommand("loops", "Count loops of length 2n");
    loops->add_option("--n", cfg.n, "Number of boxes")->required();
    loops->add_option("--shading", cfg.shading, "+ or -")->check(CLI::IsMember({"+", "-"}));
    auto* lowweight = app.add_subcommand("lowweight", "Low-weight space dimensions and rotation classes");
    auto* traces = app.add_subcommand("traces", "Traces of powers of the generator");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    cfg.mode = mode == "interval-only" ? Mode::interval_only : Mode::exact_preferred;
    cfg.output = output == "json" ? Output::json : Output::text;

    try {
        if (verify->parsed()) return cmd_verify_all(cfg);
        if (info->parsed()) return cmd_graph_info(cfg);
        if (loops->parsed()) return cmd_loops(cfg);
        if (lowweight->parsed()) return cmd_lowweight(cfg);
        if (traces->parsed()) return cmd_traces(cfg);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::ParseError ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
