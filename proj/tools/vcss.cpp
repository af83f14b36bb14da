// Command-line front end: generate instances, validate structure, compute
// covers, run the reduction stages separately or as a whole, and benchmark
// against the exact oracles.

#include <array>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "vcss/blocks.hpp"
#include "vcss/canonical.hpp"
#include "vcss/cover.hpp"
#include "vcss/gadget.hpp"
#include "vcss/generator.hpp"
#include "vcss/graph_io.hpp"
#include "vcss/oracle.hpp"
#include "vcss/pipeline.hpp"
#include "vcss/reducer.hpp"
#include "vcss/report.hpp"

using namespace vcss;

namespace {

std::int64_t default_budget() {
    if (const char* env = std::getenv("VCSS_BUDGET")) return std::atoll(env);
    return 10'000'000;
}

Multigraph read_graph_arg(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return load_graph(buf.str());
    }
    return load_graph_file(path);
}

EdgeSet read_cover_arg(const Multigraph& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_edge_set(g, buf.str());
}

void emit(const std::string& out, const std::string& content) {
    if (out.empty() || out == "-")
        std::cout << content;
    else
        write_text_file(out, content);
}

TriangleSet triangles_arg(const Multigraph& g, const std::string& tfree) {
    if (tfree == "auto") return TriangleSet::all_triangles(g);
    if (tfree == "none") return TriangleSet(g);
    std::ifstream in(tfree);
    if (!in) throw GraphError("cannot open " + tfree);
    std::vector<std::array<int, 3>> triples;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag != "t") throw GraphError("triangle files use 't a b c' lines");
        std::array<int, 3> t{};
        if (!(ls >> t[0] >> t[1] >> t[2])) throw GraphError("bad triangle line");
        triples.push_back(t);
    }
    return TriangleSet(g, triples);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-vertex-connected spanning subgraph toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a structured instance");
    std::string gen_family = "hamiltonian-plus-chords", gen_out;
    int gen_n = 12;
    double gen_density = 0.3;
    std::uint64_t gen_seed = 1;
    gen->add_option("--family", gen_family, "instance family");
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--density", gen_density, "chord density in [0,1]");
    gen->add_option("--seed", gen_seed, "prng seed");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // validate
    auto* validate = app.add_subcommand("validate", "structure report for a graph");
    std::string val_in, val_out;
    validate->add_option("--input", val_in, "graph file")->required();
    validate->add_option("--out", val_out, "report path (default stdout)");

    // cover
    auto* cover_cmd = app.add_subcommand("cover", "minimum T-free 2-edge-cover");
    std::string cov_in, cov_tfree = "auto", cov_out, cov_stats;
    bool cov_heuristic = false;
    std::int64_t cov_budget = default_budget();
    cover_cmd->add_option("--input", cov_in, "graph file")->required();
    cover_cmd->add_option("--tfree", cov_tfree, "auto | none | <triangle file>");
    cover_cmd->add_flag("--heuristic", cov_heuristic, "greedy backend instead of exact");
    bool cov_exact = false;
    cover_cmd->add_flag("--exact", cov_exact, "exact branch-and-bound backend (default)");
    cover_cmd->add_option("--budget", cov_budget, "branch-and-bound node budget");
    cover_cmd->add_option("--out", cov_out, "cover path (default stdout)");
    cover_cmd->add_option("--stats", cov_stats, "stats JSON path");

    // reduce-gadget
    auto* gadget_cmd = app.add_subcommand("reduce-gadget", "emit the reduced host and its map");
    std::string gad_in, gad_out, gad_map;
    gadget_cmd->add_option("--input", gad_in, "graph file")->required();
    gadget_cmd->add_option("--out", gad_out, "reduced graph path (default stdout)");
    gadget_cmd->add_option("--map", gad_map, "gadget map JSON path");

    // canonicalize
    auto* canon_cmd = app.add_subcommand("canonicalize", "strongly canonical form of a cover");
    std::string can_in, can_cover, can_out, can_trace;
    bool can_prune = false;
    canon_cmd->add_option("--input", can_in, "graph file")->required();
    canon_cmd->add_option("--cover", can_cover, "cover edge list")->required();
    canon_cmd->add_option("--out", can_out, "output cover path (default stdout)");
    canon_cmd->add_option("--trace", can_trace, "rewrite trace JSON path");
    canon_cmd->add_flag("--prune", can_prune, "prune to a minimal cover afterwards");

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "remove all small components");
    std::string red_in, red_cover, red_out, red_trace, red_dot;
    reduce_cmd->add_option("--input", red_in, "graph file")->required();
    reduce_cmd->add_option("--cover", red_cover, "strongly canonical cover")->required();
    reduce_cmd->add_option("--out", red_out, "output cover path (default stdout)");
    reduce_cmd->add_option("--trace", red_trace, "case trace JSON path");
    reduce_cmd->add_option("--dot", red_dot, "directory for before/after DOT snapshots");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "full pipeline");
    std::string sol_in, sol_report, sol_dot, sol_backend = "exact", sol_out;
    double sol_eps = 0.1;
    bool sol_force = false;
    std::int64_t sol_budget = default_budget();
    solve_cmd->add_option("--input", sol_in, "graph file")->required();
    solve_cmd->add_option("--epsilon", sol_eps, "accuracy parameter");
    solve_cmd->add_option("--backend", sol_backend, "exact | heuristic");
    solve_cmd->add_option("--budget", sol_budget, "solver node budget");
    std::int64_t sol_cycle_cap = 1'000'000;
    solve_cmd->add_option("--cycle-cap", sol_cycle_cap, "forbidden-cycle enumeration cap");
    solve_cmd->add_option("--report", sol_report, "report JSON path");
    solve_cmd->add_option("--dot", sol_dot, "directory for DOT snapshots");
    solve_cmd->add_option("--out", sol_out, "solution edge list (default stdout)");
    solve_cmd->add_flag("--force-full", sol_force, "run the pipeline below 20 vertices");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "exact desk-scale optima");
    std::string ora_in, ora_problem = "opt", ora_out;
    std::int64_t ora_budget = default_budget();
    oracle_cmd->add_option("--input", ora_in, "graph file")->required();
    oracle_cmd->add_option("--problem", ora_problem, "opt | cover | crcover");
    oracle_cmd->add_option("--budget", ora_budget, "node budget");
    std::int64_t ora_cycle_cap = 1'000'000;
    oracle_cmd->add_option("--cycle-cap", ora_cycle_cap, "forbidden-cycle enumeration cap");
    oracle_cmd->add_option("--out", ora_out, "edge list path (default stdout)");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "batch pipeline runs against the oracle");
    std::string ben_family = "hamiltonian-plus-chords", ben_report;
    int ben_count = 20, ben_n = 12;
    double ben_density = 0.4, ben_eps = 0.1;
    std::uint64_t ben_seed = 1;
    bool ben_force = true;
    bench_cmd->add_option("--family", ben_family, "instance family");
    bench_cmd->add_option("--count", ben_count, "number of instances");
    bench_cmd->add_option("--n", ben_n, "vertex count");
    bench_cmd->add_option("--density", ben_density, "density");
    bench_cmd->add_option("--seed", ben_seed, "first seed");
    bench_cmd->add_option("--epsilon", ben_eps, "accuracy parameter");
    bench_cmd->add_option("--report", ben_report, "report JSON path (default stdout)");
    bench_cmd->add_flag("--no-force-full", [&ben_force](std::int64_t) { ben_force = false; },
                        "route small instances to the oracle instead");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            GeneratorSpec spec;
            spec.family = family_from_name(gen_family);
            spec.n = gen_n;
            spec.density = gen_density;
            spec.seed = gen_seed;
            emit(gen_out, save_graph(generate(spec)));
        } else if (*validate) {
            Multigraph g = read_graph_arg(val_in);
            emit(val_out, structure_report_json(analyze_structure(g)).dump(2) + "\n");
        } else if (*cover_cmd) {
            Multigraph g = read_graph_arg(cov_in);
            TriangleSet t = triangles_arg(g, cov_tfree);
            SolverBudget budget{cov_budget};
            CoverStats stats;
            EdgeSet cover = cov_heuristic
                                ? heuristic_tfree_2_edge_cover(g, t, &stats)
                                : exact_min_tfree_2_edge_cover(g, t, budget, &stats);
            emit(cov_out, save_edge_set(cover));
            Json stats_json{{"schema", 1},
                            {"size", cover.size()},
                            {"nodes", stats.nodes},
                            {"exact", stats.exact},
                            {"triangles", t.size()}};
            if (!cov_stats.empty())
                write_text_file(cov_stats, stats_json.dump(2) + "\n");
            else
                std::cerr << stats_json.dump() << "\n";
        } else if (*gadget_cmd) {
            Multigraph g = read_graph_arg(gad_in);
            ReducedHost rh = build_gprime(g, select_maximal_families(g));
            emit(gad_out, save_graph(rh.graph));
            if (!gad_map.empty()) write_text_file(gad_map, gadget_map_json(rh).dump(2) + "\n");
        } else if (*canon_cmd) {
            Multigraph g = read_graph_arg(can_in);
            EdgeSet cover = read_cover_arg(g, can_cover);
            ForbiddenCycles fc = enumerate_forbidden_cycles(g);
            Canonicalized c = to_strongly_canonical(cover, fc);
            EdgeSet out_cover = can_prune ? prune_to_minimal(c.cover, fc) : c.cover;
            emit(can_out, save_edge_set(out_cover));
            if (!can_trace.empty())
                write_text_file(can_trace, canonical_trace_json(c.trace).dump(2) + "\n");
        } else if (*reduce_cmd) {
            Multigraph g = read_graph_arg(red_in);
            EdgeSet cover = read_cover_arg(g, red_cover);
            ForbiddenCycles fc = enumerate_forbidden_cycles(g);
            if (!red_dot.empty()) {
                std::filesystem::create_directories(red_dot);
                write_text_file(red_dot + "/before.dot", to_dot(g, &cover));
            }
            ReduceResult r = remove_all_small(cover, fc);
            emit(red_out, save_edge_set(r.cover));
            if (!red_trace.empty())
                write_text_file(red_trace, reduce_trace_json(r.trace).dump(2) + "\n");
            if (!red_dot.empty()) write_text_file(red_dot + "/after.dot", to_dot(g, &r.cover));
        } else if (*solve_cmd) {
            Multigraph g = read_graph_arg(sol_in);
            PipelineOptions opt;
            opt.epsilon = sol_eps;
            opt.backend = sol_backend == "heuristic" ? CoverBackend::Heuristic
                                                     : CoverBackend::Exact;
            opt.budget.max_nodes = sol_budget;
            opt.oracle_budget.max_nodes = sol_budget;
            opt.cycle_cap = sol_cycle_cap;
            opt.force_full = sol_force;
            PipelineResult r = run_pipeline(g, opt);
            emit(sol_out, save_edge_set(r.solution));
            if (!sol_report.empty())
                write_text_file(sol_report, pipeline_report_json(g, r).dump(2) + "\n");
            if (!sol_dot.empty()) {
                std::filesystem::create_directories(sol_dot);
                write_text_file(sol_dot + "/solution.dot", to_dot(g, &r.solution));
            }
        } else if (*oracle_cmd) {
            Multigraph g = read_graph_arg(ora_in);
            OracleBudget budget;
            budget.max_nodes = ora_budget;
            budget.max_vertices_opt = g.vertex_count();
            budget.max_vertices_cover = g.vertex_count();
            budget.cycle_cap = ora_cycle_cap;
            EdgeSet result(g);
            if (ora_problem == "opt")
                result = exact_opt_2vcss(g, budget);
            else if (ora_problem == "cover")
                result = min_2_edge_cover(g);
            else if (ora_problem == "crcover")
                result = exact_min_cycle_restricted_cover(g, budget);
            else
                throw GraphError("unknown oracle problem: " + ora_problem);
            emit(ora_out, save_edge_set(result));
            std::cerr << Json{{"size", result.size()}}.dump() << "\n";
        } else if (*bench_cmd) {
            Json runs = Json::array();
            int feasible = 0, ratio_checked = 0, completion_ok = 0, tight_steps = 0;
            int exact_covers = 0, canonical_rewrites = 0;
            std::array<int, 4> case_steps{};
            double max_ratio = 0.0, sum_ratio = 0.0;
            for (int i = 0; i < ben_count; ++i) {
                GeneratorSpec spec;
                spec.family = family_from_name(ben_family);
                spec.n = ben_n;
                spec.density = ben_density;
                spec.seed = ben_seed + i;
                Json entry{{"seed", spec.seed}};
                try {
                    Multigraph g = generate(spec);
                    PipelineOptions opt;
                    opt.epsilon = ben_eps;
                    opt.force_full = ben_force;
                    auto start = std::chrono::steady_clock::now();
                    PipelineResult r = run_pipeline(g, opt);
                    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
                    entry["vertices"] = g.vertex_count();
                    entry["feasible"] = r.feasible;
                    entry["size"] = r.final.size;
                    entry["completion_cost_ok"] = r.completion_cost_ok;
                    entry["milliseconds"] = ms;
                    feasible += r.feasible;
                    completion_ok += r.completion_cost_ok;
                    exact_covers += r.cover_exact;
                    canonical_rewrites += static_cast<int>(r.canonical_trace.size());
                    for (const auto& step : r.reduce_trace) {
                        case_steps[step.case_id]++;
                        if (step.delta() == Rational(0)) ++tight_steps;
                    }
                    if (r.oracle_opt) {
                        double ratio = static_cast<double>(r.final.size) / *r.oracle_opt;
                        entry["oracle_opt"] = *r.oracle_opt;
                        entry["ratio"] = ratio;
                        max_ratio = std::max(max_ratio, ratio);
                        sum_ratio += ratio;
                        ++ratio_checked;
                    }
                } catch (const std::exception& ex) {
                    entry["error"] = ex.what();
                }
                runs.push_back(std::move(entry));
            }
            Json report{{"schema", 1},
                        {"family", ben_family},
                        {"count", ben_count},
                        {"feasible", feasible},
                        {"completion_cost_ok", completion_ok},
                        {"tight_steps", tight_steps},
                        {"exact_covers", exact_covers},
                        {"canonical_rewrites", canonical_rewrites},
                        {"reduce_steps_by_case",
                         Json{{"one", case_steps[1]}, {"two", case_steps[2]}, {"three", case_steps[3]}}},
                        {"ratio_checked", ratio_checked},
                        {"max_ratio", max_ratio},
                        {"mean_ratio", ratio_checked ? sum_ratio / ratio_checked : 0.0},
                        {"runs", runs}};
            emit(ben_report, report.dump(2) + "\n");
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
