// ghct: command-line front end for the cut-sparsification toolkit.
//
// Subcommands: strength, sparsify, smooth, mincut, maxflow, verify.
// Reports are stable-order `key: value` text on stdout; artifacts (graphs,
// labels) go to --out or stdout. Exit codes: 0 ok, 1 verification failure,
// 2 usage, 3 parse, 4 size cap, 5 internal invariant violation.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ghct/certificate.hpp"
#include "ghct/corpus.hpp"
#include "ghct/errors.hpp"
#include "ghct/flow.hpp"
#include "ghct/graph.hpp"
#include "ghct/io.hpp"
#include "ghct/oracle.hpp"
#include "ghct/sampling.hpp"
#include "ghct/strength.hpp"

namespace {

using Clock = std::chrono::steady_clock;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ghct::CompressMode parse_mode(const std::string& name) {
    if (name == "bernoulli") return ghct::CompressMode::UnweightedBernoulli;
    if (name == "binomial") return ghct::CompressMode::IntegerBinomial;
    if (name == "simplified") return ghct::CompressMode::RealSimplified;
    if (name == "poisson") return ghct::CompressMode::RealPoisson;
    throw CLI::ValidationError("--mode",
                               "must be one of bernoulli|binomial|simplified|poisson");
}

struct Report {
    std::vector<std::pair<std::string, std::string>> fields;

    void add(const std::string& key, const std::string& value) {
        fields.emplace_back(key, value);
    }
    void add(const std::string& key, double value) { add(key, format_double(value)); }
    void add(const std::string& key, long long value) { add(key, std::to_string(value)); }
    void add(const std::string& key, int value) { add(key, std::to_string(value)); }

    std::string render() const {
        std::ostringstream out;
        for (const auto& [k, v] : fields) out << k << ": " << v << '\n';
        return out.str();
    }
};

struct CommonOpts {
    std::string input;
    std::string out;
    double epsilon = 0.5;
    double d = 1.0;
    std::uint64_t seed = 0;
    std::string mode = "simplified";
    bool integer_rounding = false;
    int oracle_cap = ghct::OracleCaps::strengths;
};

ghct::ParsedGraph load_input(const std::string& path, Report& report) {
    ghct::ParsedGraph parsed = ghct::load_graph(path);
    std::string serial = ghct::serialize_graph(parsed.graph);
    report.add("input", path);
    report.add("input_digest", ghct::content_digest(serial));
    report.add("n", parsed.graph.vertex_count());
    report.add("m", parsed.graph.edge_count());
    return parsed;
}

void emit_artifact(const std::string& out_path, const std::string& content,
                   const Report& report) {
    std::cout << report.render();
    if (out_path.empty()) {
        std::cout << content;
    } else {
        ghct::write_file_atomic(out_path, content);
    }
}

void add_labels_summary(Report& report, const ghct::Graph& g,
                        const std::vector<double>& labels) {
    double cost = 0.0;
    double lo = labels.empty() ? 0.0 : labels[0];
    double hi = lo;
    for (int i = 0; i < g.edge_count(); ++i) {
        cost += g.edge(i).weight / labels[i];
        lo = std::min(lo, labels[i]);
        hi = std::max(hi, labels[i]);
    }
    report.add("label_cost_sum", cost);
    report.add("label_min", lo);
    report.add("label_max", hi);
}

int cmd_strength(const CommonOpts& opt, bool exact) {
    auto start = Clock::now();
    Report report;
    report.add("command", "strength");
    ghct::ParsedGraph in = load_input(opt.input, report);
    ghct::StrengthLabels labels =
        exact ? ghct::exact_strengths(in.graph, opt.oracle_cap)
              : ghct::window_estimation(in.graph);
    report.add("labels_kind", exact ? "exact" : "estimated");
    add_labels_summary(report, in.graph, labels.labels);
    report.add("wall_time_s",
               std::chrono::duration<double>(Clock::now() - start).count());
    emit_artifact(opt.out, ghct::serialize_labels(labels.labels), report);
    return 0;
}

ghct::SparsifyParams make_params(const CommonOpts& opt) {
    ghct::SparsifyParams params;
    params.epsilon = opt.epsilon;
    params.d = opt.d;
    params.seed = opt.seed;
    params.mode = parse_mode(opt.mode);
    params.integer_rounding = opt.integer_rounding;
    return params;
}

void add_params(Report& report, const ghct::SparsifyParams& params, int n) {
    report.add("epsilon", params.epsilon);
    report.add("d", params.d);
    report.add("rho", params.epsilon > 0.0 ? params.rho(n) : 0.0);
    report.add("seed", static_cast<long long>(params.seed));
    std::string mode = "simplified";
    switch (params.mode) {
        case ghct::CompressMode::UnweightedBernoulli: mode = "bernoulli"; break;
        case ghct::CompressMode::IntegerBinomial: mode = "binomial"; break;
        case ghct::CompressMode::RealSimplified: mode = "simplified"; break;
        case ghct::CompressMode::RealPoisson: mode = "poisson"; break;
    }
    report.add("mode", mode);
}

int cmd_sparsify(const CommonOpts& opt, const std::string& labels_path) {
    auto start = Clock::now();
    Report report;
    report.add("command", "sparsify");
    ghct::ParsedGraph in = load_input(opt.input, report);
    ghct::SparsifyParams params = make_params(opt);
    add_params(report, params, in.graph.vertex_count());

    ghct::StrengthLabels labels;
    if (labels_path.empty()) {
        labels = ghct::window_estimation(in.graph);
    } else {
        labels.labels = ghct::load_labels(labels_path, in.graph.edge_count());
        labels.kind = ghct::StrengthLabels::Kind::Estimated;
    }
    add_labels_summary(report, in.graph, labels.labels);

    std::string artifact;
    if (params.epsilon == 0.0) {  // sentinel: bypass sampling
        report.add("compressed_m", in.graph.edge_count());
        artifact = ghct::serialize_graph(in.graph);
    } else {
        ghct::CompressedGraph cg = ghct::compress(in.graph, labels, params);
        report.add("compressed_m", cg.graph.edge_count());
        report.add("compressed_total_weight", cg.graph.total_weight());
        artifact = ghct::serialize_graph(cg.graph);
    }
    report.add("wall_time_s",
               std::chrono::duration<double>(Clock::now() - start).count());
    emit_artifact(opt.out, artifact, report);
    return 0;
}

int cmd_smooth(const CommonOpts& opt, const std::string& smooth_c,
               const std::string& labels_path) {
    auto start = Clock::now();
    Report report;
    report.add("command", "smooth");
    ghct::ParsedGraph in = load_input(opt.input, report);
    double c = 0.0;
    if (smooth_c == "auto") {
        if (in.graph.vertex_count() == 0) throw CLI::ValidationError("empty graph");
        c = static_cast<double>(in.graph.edge_count()) / in.graph.vertex_count();
    } else {
        c = std::stod(smooth_c);
    }
    if (!(c > 0.0)) throw CLI::ValidationError("--smooth-c", "must be positive or 'auto'");
    report.add("smooth_c", c);

    ghct::StrengthLabels labels;
    if (labels_path.empty()) {
        labels = ghct::window_estimation(in.graph);
    } else {
        labels.labels = ghct::load_labels(labels_path, in.graph.edge_count());
    }
    add_labels_summary(report, in.graph, labels.labels);
    ghct::Graph smoothed = ghct::smooth(in.graph, labels, c);
    report.add("smoothed_m", smoothed.edge_count());
    report.add("wall_time_s",
               std::chrono::duration<double>(Clock::now() - start).count());
    emit_artifact(opt.out, ghct::serialize_graph(smoothed), report);
    return 0;
}

std::pair<int, int> resolve_terminals(const ghct::ParsedGraph& in, int source, int sink) {
    int s = source > 0 ? source - 1 : (in.source ? *in.source : -1);
    int t = sink > 0 ? sink - 1 : (in.sink ? *in.sink : -1);
    if (s < 0 || t < 0)
        throw CLI::ValidationError("--source/--sink",
                                   "required unless the input file designates terminals");
    if (s >= in.graph.vertex_count() || t >= in.graph.vertex_count())
        throw CLI::ValidationError("--source/--sink", "vertex id out of range");
    return {s, t};
}

int cmd_mincut(const CommonOpts& opt, int source, int sink) {
    auto start = Clock::now();
    Report report;
    report.add("command", "mincut");
    ghct::ParsedGraph in = load_input(opt.input, report);
    auto [s, t] = resolve_terminals(in, source, sink);
    report.add("source", s + 1);
    report.add("sink", t + 1);
    ghct::SparsifyParams params = make_params(opt);
    add_params(report, params, in.graph.vertex_count());
    ghct::CutResult cut = ghct::approx_min_cut(in.graph, s, t, params);
    report.add("cut_value", cut.cut.value);
    report.add("compressed_cut_value", cut.compressed_value);
    int side_size = 0;
    std::ostringstream side;
    for (int v = 0; v < in.graph.vertex_count(); ++v)
        if (cut.cut.side[v]) {
            if (side_size++) side << ' ';
            side << v + 1;
        }
    report.add("side_size", side_size);
    report.add("side", side.str());
    report.add("wall_time_s",
               std::chrono::duration<double>(Clock::now() - start).count());
    std::string rendered = report.render();
    if (opt.out.empty())
        std::cout << rendered;
    else
        ghct::write_file_atomic(opt.out, rendered);
    return 0;
}

int cmd_maxflow(const CommonOpts& opt, int source, int sink) {
    auto start = Clock::now();
    Report report;
    report.add("command", "maxflow");
    ghct::ParsedGraph in = load_input(opt.input, report);
    auto [s, t] = resolve_terminals(in, source, sink);
    report.add("source", s + 1);
    report.add("sink", t + 1);
    ghct::SparsifyParams params = make_params(opt);
    add_params(report, params, in.graph.vertex_count());
    ghct::FlowAssignment flow = ghct::approx_max_flow(in.graph, s, t, params);
    report.add("flow_value", flow.value);

    // feasibility audit: capacity and conservation
    double worst_excess = 0.0;
    std::vector<double> net(in.graph.vertex_count(), 0.0);
    for (int i = 0; i < in.graph.edge_count(); ++i) {
        const ghct::Edge& e = in.graph.edge(i);
        worst_excess = std::max(worst_excess, std::abs(flow.flows[i]) - e.weight);
        net[e.u] -= flow.flows[i];
        net[e.v] += flow.flows[i];
    }
    double worst_violation = 0.0;
    for (int v = 0; v < in.graph.vertex_count(); ++v)
        if (v != s && v != t) worst_violation = std::max(worst_violation, std::abs(net[v]));
    report.add("capacity_excess", std::max(0.0, worst_excess));
    report.add("conservation_violation", worst_violation);
    report.add("wall_time_s",
               std::chrono::duration<double>(Clock::now() - start).count());
    std::string rendered = report.render();
    if (opt.out.empty())
        std::cout << rendered;
    else
        ghct::write_file_atomic(opt.out, rendered);
    return 0;
}

struct Check {
    std::string name;
    int passed = 0;
    int failed = 0;
    std::string first_failure;

    void record(bool ok, const std::string& where) {
        if (ok) {
            ++passed;
        } else {
            ++failed;
            if (first_failure.empty()) first_failure = where;
        }
    }
};

int cmd_verify(const CommonOpts& opt, const std::string& corpus_name,
               const std::string& extra_graph) {
    auto start = Clock::now();
    Report report;
    report.add("command", "verify");
    report.add("corpus", corpus_name);

    std::vector<ghct::CorpusEntry> corpus;
    if (corpus_name == "small") {
        corpus = ghct::small_corpus();
    } else if (corpus_name == "full") {
        corpus = ghct::full_corpus();
    } else {
        throw CLI::ValidationError("--corpus", "must be 'small' or 'full'");
    }
    if (!extra_graph.empty()) {
        ghct::ParsedGraph in = ghct::load_graph(extra_graph);
        corpus.push_back({extra_graph, in.graph, !in.graph.is_unit_weight()});
    }

    const double tol = 1e-9;
    Check strength_sum{"strength_sum_le_n_minus_1"};
    Check unit_cut{"unit_min_cut"};
    Check soundness{"label_soundness"};
    Check cost{"label_cost_bound"};
    Check weak{"k_weak_containment_and_bound"};

    for (const ghct::CorpusEntry& entry : corpus) {
        const ghct::Graph& g = entry.graph;
        if (g.vertex_count() > opt.oracle_cap)
            throw ghct::SizeCapError("verify: graph '" + entry.name + "' exceeds oracle cap " +
                                     std::to_string(opt.oracle_cap));
        std::vector<double> exact = ghct::oracle_strengths(g, opt.oracle_cap);

        double sum = 0.0;
        for (int i = 0; i < g.edge_count(); ++i) sum += g.edge(i).weight / exact[i];
        strength_sum.record(sum <= g.vertex_count() - 1 + tol, entry.name);

        if (ghct::connected_components(g).count == 1 && g.edge_count() > 0) {
            std::vector<double> inv(exact.size());
            for (size_t i = 0; i < exact.size(); ++i) inv[i] = 1.0 / exact[i];
            double mc = ghct::oracle_min_cut(ghct::scale(g, inv)).value;
            unit_cut.record(std::abs(mc - 1.0) <= tol, entry.name);
        }

        ghct::StrengthLabels labels = entry.weighted
                                          ? ghct::window_estimation(g)
                                          : ghct::estimation(g, 1.0);
        bool sound = true;
        double label_cost = 0.0;
        for (int i = 0; i < g.edge_count(); ++i) {
            if (labels.labels[i] > exact[i] + tol) sound = false;
            label_cost += g.edge(i).weight / labels.labels[i];
        }
        soundness.record(sound, entry.name);
        double bound = (entry.weighted ? 12.0 : 4.0) * (g.vertex_count() - 1);
        cost.record(label_cost <= bound + tol, entry.name);

        for (double k : {1.0, 2.0, 4.0, 8.0}) {
            std::vector<int> out = ghct::weak_edges(g, k);
            std::vector<char> in_out(g.edge_count(), 0);
            double weight = 0.0;
            for (int id : out) {
                in_out[id] = 1;
                weight += g.edge(id).weight;
            }
            bool ok = true;
            for (int i = 0; i < g.edge_count(); ++i)
                if (exact[i] < k - tol && !in_out[i]) ok = false;
            std::vector<ghct::Edge> rest;
            for (int i = 0; i < g.edge_count(); ++i)
                if (!in_out[i]) rest.push_back(g.edge(i));
            int r = ghct::connected_components(ghct::Graph(g.vertex_count(), rest)).count;
            if (weight > 4.0 * k * (r - 1) + tol) ok = false;
            weak.record(ok, entry.name + " k=" + format_double(k));
        }
    }

    bool all_ok = true;
    for (const Check* c : {&strength_sum, &unit_cut, &soundness, &cost, &weak}) {
        std::string status = c->failed == 0 ? "pass" : "FAIL";
        report.add("check_" + c->name,
                   status + " (" + std::to_string(c->passed) + "/" +
                       std::to_string(c->passed + c->failed) +
                       (c->failed ? ", first failure: " + c->first_failure : "") + ")");
        if (c->failed) all_ok = false;
    }
    report.add("result", all_ok ? "pass" : "FAIL");
    report.add("wall_time_s",
               std::chrono::duration<double>(Clock::now() - start).count());
    std::string rendered = report.render();
    if (opt.out.empty())
        std::cout << rendered;
    else
        ghct::write_file_atomic(opt.out, rendered);
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ghct: graph cut sparsification toolkit"};
    app.require_subcommand(1);

    CommonOpts opt;
    bool exact = false;
    std::string labels_path;
    std::string smooth_c = "auto";
    int source = 0;
    int sink = 0;
    std::string corpus_name = "small";
    std::string extra_graph;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input)
            sub->add_option("graph", opt.input, "input graph file (.ghct or DIMACS max)")
                ->required();
        sub->add_option("--out", opt.out, "output path (default: stdout)");
        sub->add_option("--oracle-cap", opt.oracle_cap, "vertex cap for brute-force oracles");
    };
    auto add_sampling = [&](CLI::App* sub) {
        sub->add_option("--epsilon", opt.epsilon, "accuracy parameter; 0 = exact bypass");
        sub->add_option("--d", opt.d, "failure exponent (failure prob n^-d)");
        sub->add_option("--seed", opt.seed, "64-bit RNG seed");
        sub->add_option("--mode", opt.mode, "bernoulli|binomial|simplified|poisson");
        sub->add_flag("--integer-rounding", opt.integer_rounding,
                      "round sampled weights down to integers, adjusting probabilities");
    };

    CLI::App* strength = app.add_subcommand("strength", "compute strength lower bounds");
    add_common(strength, true);
    strength->add_flag("--exact", exact, "use the brute-force oracle (size-capped)");

    CLI::App* sparsify = app.add_subcommand("sparsify", "compress a graph");
    add_common(sparsify, true);
    add_sampling(sparsify);
    sparsify->add_option("--labels", labels_path, "precomputed strength labels file");

    CLI::App* smooth = app.add_subcommand("smooth", "subdivide edges to a smooth graph");
    add_common(smooth, true);
    smooth->add_option("--smooth-c", smooth_c, "smoothness parameter, or 'auto' for m/n");
    smooth->add_option("--labels", labels_path, "precomputed strength labels file");

    CLI::App* mincut = app.add_subcommand("mincut", "approximate s-t min cut");
    add_common(mincut, true);
    add_sampling(mincut);
    mincut->add_option("--source", source, "source vertex (1-based)");
    mincut->add_option("--sink", sink, "sink vertex (1-based)");

    CLI::App* maxflow = app.add_subcommand("maxflow", "approximate s-t max flow");
    add_common(maxflow, true);
    add_sampling(maxflow);
    maxflow->add_option("--source", source, "source vertex (1-based)");
    maxflow->add_option("--sink", sink, "sink vertex (1-based)");

    CLI::App* verify = app.add_subcommand("verify", "run the oracle-backed property suite");
    verify->add_option("--corpus", corpus_name, "small|full");
    verify->add_option("graph", extra_graph, "additional graph file to check");
    verify->add_option("--out", opt.out, "report path (default: stdout)");
    verify->add_option("--oracle-cap", opt.oracle_cap, "vertex cap for brute-force oracles");

    try {
        app.parse(argc, argv);
        if (strength->parsed()) return cmd_strength(opt, exact);
        if (sparsify->parsed()) return cmd_sparsify(opt, labels_path);
        if (smooth->parsed()) return cmd_smooth(opt, smooth_c, labels_path);
        if (mincut->parsed()) return cmd_mincut(opt, source, sink);
        if (maxflow->parsed()) return cmd_maxflow(opt, source, sink);
        if (verify->parsed()) return cmd_verify(opt, corpus_name, extra_graph);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ghct::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 3;
    } catch (const ghct::SizeCapError& e) {
        std::cerr << "size cap exceeded: " << e.what() << '\n';
        return 4;
    } catch (const ghct::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 5;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
