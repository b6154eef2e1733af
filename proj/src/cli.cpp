#include "sparsehalf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "sparsehalf/approximation.hpp"
#include "sparsehalf/disturbed.hpp"
#include "sparsehalf/errors.hpp"
#include "sparsehalf/generators.hpp"
#include "sparsehalf/halves.hpp"
#include "sparsehalf/io.hpp"
#include "sparsehalf/lemmas.hpp"
#include "sparsehalf/oracle.hpp"
#include "sparsehalf/sampling.hpp"

namespace sparsehalf {

namespace {

using nlohmann::json;

json json_vertex_set(const VertexSet& s) { return json(s.members); }

json json_rat(const Rat& r) { return json(format_rational(r)); }

std::shared_ptr<const Graph> load_graph(const std::string& path) {
    return std::make_shared<const Graph>(read_edge_list_file(path));
}

void emit(std::ostream& out, const json& report) { out << report.dump(2) << '\n'; }

int run_gen(const std::string& name, const std::string& out_path, std::ostream& out) {
    const Graph g = graph_from_generator_name(name);
    if (out_path.empty()) {
        write_edge_list(out, g);
    } else {
        std::ofstream file(out_path);
        if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
        write_edge_list(file, g);
    }
    return 0;
}

int run_check(const std::string& graph_path, const std::string& weights_path,
              const std::string& half_path, bool triangle, bool maximality,
              bool profile, bool independent_sets, std::ostream& out) {
    auto g = load_graph(graph_path);
    json report{{"schema", 1}, {"command", "check"}};
    const bool any_flag = triangle || maximality || profile || independent_sets ||
                          !weights_path.empty();
    if (triangle || !any_flag) report["triangle_free"] = is_triangle_free(*g);
    if (profile || !any_flag) {
        const auto p = degree_profile(*g);
        report["degree_profile"] = {{"min", p.min_deg},
                                    {"max", p.max_deg},
                                    {"sum", p.sum_deg},
                                    {"sum_sq", p.sum_deg_sq}};
        report["vertices"] = g->vertex_count();
        report["edges"] = g->edge_count();
    }
    if (maximality) {
        const auto mc = maximality_class(*g);
        report["maximality"] = {{"is_maximal", mc.is_maximal},
                                {"complete", mc.complete}};
        if (!mc.complete) report["maximality"]["c_star"] = json_rat(mc.c_star);
    }
    if (independent_sets) {
        const auto mis = maximum_independent_sets(*g);
        json sets = json::array();
        for (const auto& s : mis) sets.push_back(json_vertex_set(s));
        report["maximum_independent_sets"] = sets;
        report["independence_number"] = mis.empty() ? 0 : mis.front().size();
    }
    if (!weights_path.empty()) {
        const WeightFunction wf = read_weight_file(weights_path, g);
        report["weighted_min_degree"] = json_rat(weighted_min_degree(wf));
        if (!half_path.empty()) {
            const Half h = read_half_file(half_path, wf);
            report["half"] = {{"edge_mass", json_rat(edge_mass(h))},
                              {"sparse", is_sparse_half(h)}};
        }
    }
    emit(out, report);
    return 0;
}

int run_oracle(const std::string& graph_path, std::ostream& out) {
    auto g = load_graph(graph_path);
    const auto result = min_half_edges(*g);
    const long long n = g->vertex_count();
    json report{{"schema", 1},
                {"command", "oracle"},
                {"min_edges", result.count},
                {"bound", json_rat(Rat(n * n, 50))},
                {"tight", result.count * 50 == n * n},
                {"witness", json_vertex_set(result.best_set)}};
    emit(out, report);
    return 0;
}

int run_find_half(const std::string& graph_path, const std::string& method,
                  std::ostream& out) {
    auto g = load_graph(graph_path);
    const long long n = g->vertex_count();
    json report{{"schema", 1},
                {"command", "find-half"},
                {"method", method},
                {"bound", json_rat(Rat(n * n, 50))}};
    std::optional<long long> pipeline_edges;
    std::optional<long long> oracle_edges;
    if (method == "pipeline" || method == "both") {
        const VertexSet s = sparse_half_min_degree(g);
        const long long e = induced_edge_count(*g, s);
        pipeline_edges = e;
        report["pipeline"] = {{"set", json_vertex_set(s)},
                              {"edges", e},
                              {"within_bound", e * 50 <= n * n}};
    }
    if (method == "oracle" || method == "both") {
        const auto result = min_half_edges(*g);
        oracle_edges = result.count;
        report["oracle"] = {{"min_edges", result.count},
                            {"witness", json_vertex_set(result.best_set)},
                            {"within_bound", result.count * 50 <= n * n}};
    }
    if (pipeline_edges && oracle_edges)
        report["agree"] = *pipeline_edges >= *oracle_edges &&
                          *pipeline_edges * 50 <= n * n;
    emit(out, report);
    return 0;
}

int run_approx(const std::string& graph_path, const std::string& template_name,
               const std::string& hom_path, std::ostream& out) {
    auto g = load_graph(graph_path);
    auto h = std::make_shared<const Graph>(template_name == "petersen" ? make_petersen()
                                                                       : make_c5());
    std::optional<Homomorphism> phi;
    if (!hom_path.empty()) {
        std::ifstream in(hom_path);
        if (!in) throw std::invalid_argument("cannot open homomorphism file: " + hom_path);
        phi = read_homomorphism(in, g, h);
    } else {
        phi = find_homomorphism(g, h);
        if (!phi) throw HypothesisError("approx: no homomorphism onto the template");
    }
    if (!phi->is_surjective())
        throw HypothesisError("approx: homomorphism is not surjective");
    Partition partition;
    partition.n = g->vertex_count();
    partition.blocks = phi->fibers();
    const auto witness = check_eps_approximation(*g, *h, partition);
    json blocks = json::array();
    for (const auto& b : witness.partition.blocks) blocks.push_back(b.size());
    json report{{"schema", 1},
                {"command", "approx"},
                {"template", template_name},
                {"eps_achieved", json_rat(witness.eps_achieved)},
                {"eps_achieved_approx", to_double(witness.eps_achieved)},
                {"diff_edges", witness.diff_edges.size()},
                {"block_sizes", blocks}};
    emit(out, report);
    return 0;
}

int run_classify(const std::string& graph_path, const std::string& eps_text,
                 const std::string& delta_text, std::ostream& out) {
    auto g = load_graph(graph_path);
    const Rat eps = parse_rational(eps_text);
    std::optional<Rat> delta;
    if (!delta_text.empty()) delta = parse_rational(delta_text);
    const auto result = classify_trichotomy(g, eps, delta);
    json report{{"schema", 1}, {"command", "classify"}, {"eps", json_rat(eps)}};
    report["high_degree_vertices"] = result.dichotomy.high_degree.size();
    report["low_degree_vertices"] = result.dichotomy.low_degree.size();
    switch (result.outcome) {
        case TrichotomyOutcome::kHighDegree:
            report["outcome"] = "ii";
            report["witness"] = json_vertex_set(result.dichotomy.high_degree);
            break;
        case TrichotomyOutcome::kNearBipartite:
            report["outcome"] = "iii";
            report["removed_edges"] = result.removed_edges.size();
            report["bipartition_side"] = json_vertex_set(result.bipartition_side);
            break;
        case TrichotomyOutcome::kC5Approximable: {
            report["outcome"] = "i";
            const auto& w = *result.witness;
            json blocks = json::array();
            for (const auto& b : w.partition.blocks) blocks.push_back(b.size());
            report["eps_achieved"] = json_rat(w.eps_achieved);
            report["eps_achieved_approx"] = to_double(w.eps_achieved);
            report["diff_edges"] = w.diff_edges.size();
            report["block_sizes"] = blocks;
            break;
        }
    }
    emit(out, report);
    return 0;
}

int run_verify_lemma(const std::string& lemma, long long budget, std::uint64_t seed,
                     std::ostream& out) {
    const auto report = falsify_search(lemma, budget, seed);
    json doc{{"schema", 1},
             {"command", "verify-lemma"},
             {"lemma", lemma},
             {"budget", budget},
             {"seed", seed},
             {"violated", report.counterexample.has_value()},
             {"worst_margin", report.worst_margin},
             {"worst_point", report.worst_point}};
    if (report.counterexample) {
        doc["counterexample"] = {{"point", report.counterexample->point},
                                 {"detail", report.counterexample->detail}};
    }
    emit(out, doc);
    return report.counterexample ? 3 : 0;
}

int run_pipeline_test(int count, std::uint64_t seed, int max_n, std::ostream& out) {
    Rng rng(seed);
    json instances = json::array();
    int failures = 0;
    int oracle_checked = 0;
    for (int i = 0; i < count; ++i) {
        const int d = 1 + static_cast<int>(rng.below(5));
        const auto sizes = sample_fd_blowup_sizes(d, max_n, rng);
        auto g = std::make_shared<const Graph>(blowup(make_fd(d), sizes).graph);
        const long long n = g->vertex_count();
        json item{{"d", d}, {"n", n}};
        const VertexSet s = sparse_half_min_degree(g);
        const long long e = induced_edge_count(*g, s);
        bool ok = s.size() == n / 2 && e * 50 <= n * n;
        item["edges"] = e;
        if (n <= 30) {
            const auto opt = min_half_edges(*g);
            ++oracle_checked;
            item["oracle_min"] = opt.count;
            ok = ok && e >= opt.count;
        }
        item["ok"] = ok;
        if (!ok) ++failures;
        instances.push_back(item);
    }
    json report{{"schema", 1},
                {"command", "pipeline-test"},
                {"count", count},
                {"seed", seed},
                {"oracle_checked", oracle_checked},
                {"failures", failures},
                {"instances", instances}};
    emit(out, report);
    return failures == 0 ? 0 : 3;
}

json error_json(const std::string& command, const std::string& kind,
                const std::string& message) {
    return json{{"schema", 1},
                {"command", command},
                {"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"sparse halves of triangle-free graphs"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "parallelism cap (results independent of it)")
        ->check(CLI::PositiveNumber);

    std::string gen_name, gen_out;
    auto* gen = app.add_subcommand("gen", "emit a named graph as an edge list");
    gen->add_option("name", gen_name,
                    "fd:<d> | c5 | petersen | pstar | blowup:<name>:<s1,s2,...>")
        ->required();
    gen->add_option("--out", gen_out, "output file (default stdout)");

    std::string check_graph, check_weights, check_half;
    bool check_triangle = false, check_max = false, check_profile = false,
         check_mis = false;
    auto* check = app.add_subcommand("check", "structural predicates of a graph");
    check->add_option("graph", check_graph, "edge-list file")->required();
    check->add_flag("--triangle-free", check_triangle);
    check->add_flag("--maximality", check_max);
    check->add_flag("--profile", check_profile);
    check->add_flag("--independent-sets", check_mis);
    check->add_option("--weights", check_weights, "vertex weight file");
    check->add_option("--half", check_half, "half file (needs --weights)");

    std::string oracle_graph;
    auto* oracle = app.add_subcommand("oracle", "exact minimum half edge count");
    oracle->add_option("graph", oracle_graph, "edge-list file")->required();

    std::string fh_graph, fh_method = "both";
    auto* fh = app.add_subcommand("find-half", "sparse half via pipeline and/or oracle");
    fh->add_option("graph", fh_graph, "edge-list file")->required();
    fh->add_option("--method", fh_method, "pipeline | oracle | both")
        ->check(CLI::IsMember({"pipeline", "oracle", "both"}));

    std::string ap_graph, ap_template = "c5", ap_hom;
    auto* ap = app.add_subcommand("approx", "epsilon-approximation witness");
    ap->add_option("graph", ap_graph, "edge-list file")->required();
    ap->add_option("--template", ap_template, "c5 | petersen")
        ->check(CLI::IsMember({"c5", "petersen"}));
    ap->add_option("--hom", ap_hom, "homomorphism file (default: search)");

    std::string cl_graph, cl_eps, cl_delta;
    auto* cl = app.add_subcommand("classify", "dense triangle-free trichotomy");
    cl->add_option("graph", cl_graph, "edge-list file")->required();
    cl->add_option("--eps", cl_eps, "epsilon, as p/q")->required();
    cl->add_option("--delta", cl_delta, "delta override, as p/q (default (eps/40)^2)");

    std::string vl_lemma;
    long long vl_budget = 0;
    std::uint64_t vl_seed = 0;
    auto* vl = app.add_subcommand("verify-lemma", "falsification search");
    vl->add_option("lemma", vl_lemma, "8cycle | 11cycle | petersen | c5jensen")
        ->required()
        ->check(CLI::IsMember({"8cycle", "11cycle", "petersen", "c5jensen"}));
    vl->add_option("--budget", vl_budget, "sample count")->required();
    vl->add_option("--seed", vl_seed, "RNG seed")->required();

    int pt_count = 50, pt_max_n = 28;
    std::uint64_t pt_seed = 0;
    auto* pt = app.add_subcommand("pipeline-test", "randomized minimum-degree pipeline batch");
    pt->add_option("--count", pt_count, "instances (default 50)");
    pt->add_option("--seed", pt_seed, "RNG seed")->required();
    pt->add_option("--max-n", pt_max_n, "maximum blowup size (default 28)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << '\n';
        return 64;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (gen->parsed()) return run_gen(gen_name, gen_out, out);
        if (check->parsed())
            return run_check(check_graph, check_weights, check_half, check_triangle,
                             check_max, check_profile, check_mis, out);
        if (oracle->parsed()) return run_oracle(oracle_graph, out);
        if (fh->parsed()) return run_find_half(fh_graph, fh_method, out);
        if (ap->parsed()) return run_approx(ap_graph, ap_template, ap_hom, out);
        if (cl->parsed()) return run_classify(cl_graph, cl_eps, cl_delta, out);
        if (vl->parsed()) return run_verify_lemma(vl_lemma, vl_budget, vl_seed, out);
        if (pt->parsed()) return run_pipeline_test(pt_count, pt_seed, pt_max_n, out);
        err << "no subcommand\n";
        return 64;
    } catch (const TheoremViolationError& e) {
        emit(out, error_json(command, "theorem-violation", e.what()));
        return 3;
    } catch (const ResourceLimitError& e) {
        emit(out, error_json(command, "resource-limit", e.what()));
        return 2;
    } catch (const HypothesisError& e) {
        emit(out, error_json(command, "hypothesis-violation", e.what()));
        return 1;
    } catch (const ConstraintError& e) {
        emit(out, error_json(command, "constraint-violation", e.what()));
        return 1;
    } catch (const PipelineError& e) {
        emit(out, error_json(command, "pipeline-failure", e.what()));
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 64;
    }
}

}  // namespace sparsehalf
