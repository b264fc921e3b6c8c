#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "laygap/experiments.hpp"

namespace {

using namespace laygap;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string fmt6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string join_layout(const Layout& layout) {
    std::string s;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(layout[i]);
    }
    return s;
}

struct SampleArgs {
    std::string kind;
    int n = 0;
    std::optional<double> p;
    std::optional<double> c;
    std::optional<double> K;
    std::uint64_t seed = 0;
    std::string out;
};

int run_sample(const SampleArgs& args) {
    bool have_schedule = args.c.has_value() || args.K.has_value();
    if (args.p.has_value() == have_schedule) {
        std::cerr << "sample: pass exactly one of --p or (--c and --K)\n";
        return 1;
    }
    if (have_schedule && (!args.c || !args.K)) {
        std::cerr << "sample: --c and --K must be given together\n";
        return 1;
    }
    double p = args.p ? *args.p : schedule_p(SparsitySchedule{*args.K, *args.c}, args.n);
    int m;
    std::string text;
    if (args.kind == "ugraph") {
        Graph g = sample_gnp(args.n, p, args.seed);
        m = g.edge_count();
        text = write_graph_file(g);
    } else {
        Dag d = sample_dnp(args.n, p, args.seed);
        m = d.edge_count();
        text = write_graph_file(d);
    }
    write_file(args.out, text);
    std::cout << "n=" << args.n << " m=" << m << " p=" << fmt6(p) << "\n";
    return 0;
}

int run_solve(const std::string& problem, const std::string& objective,
              const std::string& in_path) {
    Problem kind = parse_problem(problem);
    auto parsed = parse_graph_file(read_file(in_path));
    SolveResult r = std::visit(
        [&](const auto& g) {
            return objective == "min" ? solve_min(g, kind) : solve_max(g, kind);
        },
        parsed);
    std::cout << "cost=" << r.cost << "\n";
    std::cout << "witness=" << join_layout(r.witness) << "\n";
    return 0;
}

int run_gap(const std::string& problem, const std::string& in_path, bool as_json) {
    Problem kind = parse_problem(problem);
    auto parsed = parse_graph_file(read_file(in_path));
    GapReport r = std::visit([&](const auto& g) { return gap(g, kind); }, parsed);
    if (as_json) {
        nlohmann::json j;
        j["problem"] = problem_name(r.kind);
        j["directed"] = r.directed;
        j["min"] = r.min_cost;
        j["max"] = r.max_cost;
        j["gap"] = format_gap(r.gap);
        j["min_witness"] = r.min_witness;
        j["max_witness"] = r.max_witness;
        j["exact"] = r.exact;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "min=" << r.min_cost << " max=" << r.max_cost << " gap="
                  << format_gap(r.gap) << "\n";
        std::cout << "min_witness=" << join_layout(r.min_witness) << "\n";
        std::cout << "max_witness=" << join_layout(r.max_witness) << "\n";
    }
    return 0;
}

int run_bounds(const std::string& problem, int n, double p, double delta, double c) {
    Problem kind = parse_problem(problem);
    BoundParameters params = choose_parameters(family_of(kind), c);
    params.delta = delta;
    PredictedBand band = predicted_band(kind, n, p, params);
    char fail[64];
    std::snprintf(fail, sizeof fail, "%.6g", band.failure_bound);
    std::cout << "lower_min=" << fmt6(band.lower_min)
              << " upper_max=" << fmt6(band.upper_max) << " failure_bound=" << fail << "\n";
    return 0;
}

int run_experiment(const std::string& config_path, const std::string& out_path,
                   const std::string& json_out_path) {
    nlohmann::json j = nlohmann::json::parse(read_file(config_path));
    ExperimentConfig cfg = parse_experiment_config(j);

    std::size_t total = cfg.n_values.size() * static_cast<std::size_t>(cfg.trials);
    std::cerr << "rows: " << total << "\n";
    ExperimentReport report = run_gap_experiment(cfg);

    std::ostringstream csv;
    write_report_csv(report, csv);
    write_file(out_path, csv.str());
    if (!json_out_path.empty())
        write_file(json_out_path, report_to_json(report).dump(2) + "\n");

    for (const NSummary& s : report.summary) {
        std::cout << "n=" << s.n << " fraction_within_band=" << fmt6(s.fraction_within_band)
                  << " fraction_gap_below_target=" << fmt6(s.fraction_gap_below_target)
                  << " median_gap=" << format_gap(s.median_gap) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph layout cost problems: sampling, exact gaps, bounds, experiments"};
    app.require_subcommand(1);

    SampleArgs sample_args;
    auto* sample = app.add_subcommand("sample", "sample a G(n,p) graph or D(n,p) dag");
    sample->add_option("--kind", sample_args.kind)->required()
        ->check(CLI::IsMember({"ugraph", "dag"}));
    sample->add_option("--n", sample_args.n)->required()->check(CLI::PositiveNumber);
    sample->add_option("--p", sample_args.p);
    sample->add_option("--c", sample_args.c);
    sample->add_option("--K", sample_args.K);
    sample->add_option("--seed", sample_args.seed)->required();
    sample->add_option("--out", sample_args.out)->required();

    std::string problem, objective, in_path;
    auto* solve = app.add_subcommand("solve", "exact optimum with a witness layout");
    solve->add_option("--problem", problem)->required()
        ->check(CLI::IsMember({"cutwidth", "vertsep", "edgebis", "vertbis"}));
    solve->add_option("--objective", objective)->required()
        ->check(CLI::IsMember({"min", "max"}));
    solve->add_option("--in", in_path)->required();

    bool gap_json = false;
    auto* gap_cmd = app.add_subcommand("gap", "exact min, max, and their ratio");
    gap_cmd->add_option("--problem", problem)->required()
        ->check(CLI::IsMember({"cutwidth", "vertsep", "edgebis", "vertbis"}));
    gap_cmd->add_option("--in", in_path)->required();
    gap_cmd->add_flag("--json", gap_json);

    int bounds_n = 0;
    double bounds_p = 0.5, bounds_delta = 0.0, bounds_c = 0.0;
    auto* bounds = app.add_subcommand("bounds", "predicted MIN/MAX band for one (n,p)");
    bounds->add_option("--problem", problem)->required()
        ->check(CLI::IsMember({"cutwidth", "vertsep", "edgebis", "vertbis"}));
    bounds->add_option("--n", bounds_n)->required()->check(CLI::PositiveNumber);
    bounds->add_option("--p", bounds_p);
    bounds->add_option("--delta", bounds_delta)->required();
    bounds->add_option("--c", bounds_c);

    std::string config_path, out_path, json_out_path;
    auto* experiment = app.add_subcommand("experiment", "Monte Carlo gap experiment");
    experiment->add_option("--config", config_path)->required();
    experiment->add_option("--out", out_path)->required();
    experiment->add_option("--json-out", json_out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (sample->parsed()) return run_sample(sample_args);
        if (solve->parsed()) return run_solve(problem, objective, in_path);
        if (gap_cmd->parsed()) return run_gap(problem, in_path, gap_json);
        if (bounds->parsed())
            return run_bounds(problem, bounds_n, bounds_p, bounds_delta, bounds_c);
        if (experiment->parsed())
            return run_experiment(config_path, out_path, json_out_path);
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
