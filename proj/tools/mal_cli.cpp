// Command-line front end: instance statistics, solvers, verification,
// instance generators, MAL<->DCSS conversions, and a CSV benchmark harness.

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mal/gen.hpp"
#include "mal/io.hpp"
#include "mal/report.hpp"
#include "mal/variants.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyInfeasible = 1;
constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitBudget = 4;

mal::Graph load_graph(const std::string& path) { return mal::parse_graph(mal::read_file(path)); }

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        mal::write_file(out_path, content);
}

nlohmann::ordered_json report_json(const mal::SolveReport& r) {
    nlohmann::ordered_json doc;
    doc["algorithm"] = r.algorithm;
    doc["labelCount"] = r.label_count;
    doc["lifetime"] = r.lifetime;
    doc["ageBudget"] = r.age_budget;
    doc["feasible"] = r.feasible;
    doc["optimalityFlag"] = mal::to_string(r.optimality);
    doc["wallTimeMs"] = r.wall_time_ms;
    return doc;
}

int run_stats(const std::string& graph_path) {
    auto g = load_graph(graph_path);
    nlohmann::ordered_json doc;
    doc["n"] = g.num_vertices();
    doc["m"] = g.num_edges();
    auto m = mal::metrics(g);
    doc["diameter"] = m.diameter;
    doc["radius"] = m.radius;
    doc["center"] = m.center;
    doc["c4"] = mal::has_c4(g);
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

int run_solve(const std::string& graph_path, int age, const std::string& algo,
              std::string out_path, const mal::ExactBudget& budget) {
    auto g = load_graph(graph_path);
    auto outcome = mal::run_solver(g, age, algo, budget);
    if (out_path.empty()) out_path = graph_path + ".labeling.json";
    mal::write_file(out_path, mal::write_labeling(outcome.labeling));
    auto doc = report_json(outcome.report);
    doc["labelingFile"] = out_path;
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

int run_verify(const std::string& graph_path, const std::string& labeling_path, int age) {
    auto g = load_graph(graph_path);
    auto lambda = mal::parse_labeling(mal::read_file(labeling_path));
    mal::TemporalGraph tg(g, lambda);
    auto res = mal::is_temporally_connected(tg, age);
    nlohmann::ordered_json doc;
    doc["feasible"] = res.connected;
    doc["ageBudget"] = age;
    doc["labelCount"] = mal::count_labels(tg);
    doc["lifetime"] = mal::lifetime(tg);
    if (res.unreachable_pair)
        doc["witnessPair"] = {res.unreachable_pair->first, res.unreachable_pair->second};
    if (res.offending_label) doc["offendingLabel"] = *res.offending_label;
    std::cout << doc.dump(2) << "\n";
    return res.connected ? kExitOk : kExitVerifyInfeasible;
}

void emit_reduction(const mal::ReductionArtifacts& art, const std::string& out_path) {
    mal::write_file(out_path, mal::write_graph(art.graph));
    mal::write_file(out_path + ".roles.json", mal::write_roles(art));
}

int run_bench(const std::string& dir, const std::string& age_rule) {
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".graph")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    std::cout << "instance,n,m,D,R,algorithm,labels,lifetime,feasible,ms\n";
    const std::vector<std::string> algos = {"trivial",      "folklore-2r",  "folklore-2r1",
                                            "large-age",    "three-half",   "five-thirds",
                                            "via-dcss:tree", "via-dcss:plus2"};
    for (const auto& file : files) {
        auto g = load_graph(file);
        auto m = mal::metrics(g);
        int age = 0;
        if (age_rule == "D") age = m.diameter;
        else if (age_rule == "3halfD") age = (3 * m.diameter + 1) / 2;
        else if (age_rule == "5thirdsD") age = (5 * m.diameter + 2) / 3;
        else if (age_rule == "2R") age = 2 * m.radius;
        else if (age_rule == "2R1") age = 2 * m.radius + 1;
        else throw mal::ParseError("unknown age rule: " + age_rule);
        const std::string name = std::filesystem::path(file).filename().string();
        for (const auto& algo : algos) {
            if (age < mal::required_age(algo, m)) continue;
            std::string row = name + "," + std::to_string(g.num_vertices()) + "," +
                              std::to_string(g.num_edges()) + "," + std::to_string(m.diameter) +
                              "," + std::to_string(m.radius) + "," + algo + ",";
            try {
                auto outcome = mal::run_solver(g, age, algo);
                row += std::to_string(outcome.report.label_count) + "," +
                       std::to_string(outcome.report.lifetime) + ",true," +
                       std::to_string(outcome.report.wall_time_ms);
            } catch (const mal::InfeasibleError&) {
                row += "0,0,false,0";
            }
            std::cout << row << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Temporal labeling toolkit: MAL solvers, DCSS bridge, and reduction generators"};
    app.require_subcommand(1);

    std::string graph_path, labeling_path, sub_path, out_path, algo, age_rule = "D";
    int age = 0;
    mal::ExactBudget budget;

    auto* stats = app.add_subcommand("stats", "Print n, m, diameter, radius, C4 presence");
    stats->add_option("graph", graph_path)->required();

    auto* solve = app.add_subcommand("solve", "Solve MAL and write the labeling");
    solve->add_option("graph", graph_path)->required();
    solve->add_option("--age", age, "Maximum allowed age")->required();
    solve->add_option("--algo", algo,
                      "trivial|folklore-2r|folklore-2r1|large-age|three-half|five-thirds|"
                      "via-dcss:{tree,plus2,exact}|exact")
        ->required();
    solve->add_option("--out", out_path, "Labeling output path");
    solve->add_option("--max-slots", budget.max_edge_label_slots, "Exact solver slot budget");
    solve->add_option("--max-edges", budget.max_edges, "Exact DCSS edge budget");
    solve->add_option("--time-limit", budget.time_limit_seconds, "Exact solver time limit (s)");

    auto* verify = app.add_subcommand("verify", "Check a labeling for temporal connectivity");
    verify->add_option("graph", graph_path)->required();
    verify->add_option("labeling", labeling_path)->required();
    verify->add_option("--age", age, "Maximum allowed age")->required();

    auto* gen = app.add_subcommand("gen", "Generate instances");
    gen->require_subcommand(1);
    int gen_n = 0, gen_d = 3;
    long long gen_m = 0, gen_x = -1;
    std::uint64_t gen_seed = 0;
    auto* gen_random = gen->add_subcommand("random-connected", "Seeded random connected graph");
    gen_random->add_option("n", gen_n)->required();
    gen_random->add_option("m", gen_m)->required();
    gen_random->add_option("seed", gen_seed)->required();
    gen_random->add_option("--out", out_path);
    auto* gen_star = gen->add_subcommand("star", "Star on k vertices");
    gen_star->add_option("k", gen_n)->required();
    gen_star->add_option("--out", out_path);
    auto* gen_cycle = gen->add_subcommand("cycle", "Cycle on k vertices");
    gen_cycle->add_option("k", gen_n)->required();
    gen_cycle->add_option("--out", out_path);
    auto* gen_sc_mal = gen->add_subcommand("sc-mal", "Set-Cover -> MAL(a=2) gadget");
    gen_sc_mal->add_option("instance", sub_path)->required();
    gen_sc_mal->add_option("--out", out_path)->required();
    auto* gen_sc_dcss = gen->add_subcommand("sc-dcss", "Set-Cover -> DCSS(d) gadget");
    gen_sc_dcss->add_option("instance", sub_path)->required();
    gen_sc_dcss->add_option("d", gen_d)->required();
    gen_sc_dcss->add_option("--x", gen_x, "Replication parameter (default eta*d+mu)");
    gen_sc_dcss->add_option("--out", out_path)->required();
    auto* gen_minrep = gen->add_subcommand("minrep-dcss", "MIN-REP -> DCSS(3) gadget");
    gen_minrep->add_option("instance", sub_path)->required();
    gen_minrep->add_option("--out", out_path)->required();

    auto* convert = app.add_subcommand("convert", "MAL<->DCSS conversions");
    convert->require_subcommand(1);
    int conv_b = 1;
    auto* conv_d2m = convert->add_subcommand("dcss-to-mal", "Full-range labeling of a subgraph");
    conv_d2m->add_option("graph", graph_path)->required();
    conv_d2m->add_option("subgraph", sub_path)->required();
    conv_d2m->add_option("b", conv_b)->required();
    conv_d2m->add_option("--out", out_path);
    auto* conv_m2d = convert->add_subcommand("mal-to-dcss", "Support subgraph of a labeling");
    conv_m2d->add_option("graph", graph_path)->required();
    conv_m2d->add_option("labeling", labeling_path)->required();
    conv_m2d->add_option("--out", out_path);
    auto* conv_bidir = convert->add_subcommand("bidirect", "Replace edges by opposite arc pairs");
    conv_bidir->add_option("graph", graph_path)->required();
    conv_bidir->add_option("--out", out_path);

    auto* bench = app.add_subcommand("bench", "Run all applicable algorithms over *.graph files");
    std::string bench_dir;
    bench->add_option("dir", bench_dir)->required();
    bench->add_option("--age-rule", age_rule, "D|3halfD|5thirdsD|2R|2R1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (*stats) return run_stats(graph_path);
        if (*solve) return run_solve(graph_path, age, algo, out_path, budget);
        if (*verify) return run_verify(graph_path, labeling_path, age);
        if (*gen_random) {
            auto g = mal::random_connected(gen_n, gen_m, gen_seed);
            std::string header = "# generator random-connected " + std::to_string(gen_n) + " " +
                                 std::to_string(gen_m) + "\n# seed " + std::to_string(gen_seed) +
                                 "\n";
            emit(header + mal::write_graph(g), out_path);
            return kExitOk;
        }
        if (*gen_star) {
            emit(mal::write_graph(mal::star(gen_n)), out_path);
            return kExitOk;
        }
        if (*gen_cycle) {
            emit(mal::write_graph(mal::cycle(gen_n)), out_path);
            return kExitOk;
        }
        if (*gen_sc_mal) {
            auto sc = mal::parse_set_cover(mal::read_file(sub_path));
            emit_reduction(mal::sc_to_mal2(sc), out_path);
            return kExitOk;
        }
        if (*gen_sc_dcss) {
            auto sc = mal::parse_set_cover(mal::read_file(sub_path));
            std::optional<long long> x;
            if (gen_x >= 0) x = gen_x;
            emit_reduction(mal::sc_to_dcss(sc, gen_d, x), out_path);
            return kExitOk;
        }
        if (*gen_minrep) {
            auto mr = mal::parse_minrep(mal::read_file(sub_path));
            emit_reduction(mal::minrep_to_dcss3(mr), out_path);
            return kExitOk;
        }
        if (*conv_d2m) {
            load_graph(graph_path);  // validates the base graph file
            auto h = load_graph(sub_path);
            emit(mal::write_labeling(mal::dcss_to_mal(h, conv_b)), out_path);
            return kExitOk;
        }
        if (*conv_m2d) {
            auto g = load_graph(graph_path);
            auto lambda = mal::parse_labeling(mal::read_file(labeling_path));
            emit(mal::write_graph(mal::mal_to_dcss({g, lambda})), out_path);
            return kExitOk;
        }
        if (*conv_bidir) {
            emit(mal::write_graph(mal::bidirect(load_graph(graph_path))), out_path);
            return kExitOk;
        }
        if (*bench) return run_bench(bench_dir, age_rule);
    } catch (const mal::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const mal::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const mal::BudgetExceededError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    }
    return kExitParse;
}
