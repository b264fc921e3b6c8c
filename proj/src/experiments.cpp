#include "laygap/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <tuple>

namespace laygap {

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
    auto key = [](const ExperimentConfig& c) {
        return std::tuple(c.kind, c.model, c.n_values, c.fixed_p,
                          c.schedule ? std::optional(std::pair(c.schedule->K, c.schedule->c))
                                     : std::nullopt,
                          c.trials, c.estimate_mode, c.samples, c.params.c, c.params.l,
                          c.params.s, c.params.delta, c.params.epsilon, c.master_seed,
                          c.delta_target);
    };
    return key(a) == key(b);
}

namespace {

void validate_config(const ExperimentConfig& cfg) {
    std::vector<std::string> errors;
    if (cfg.n_values.empty()) errors.push_back("n_values: must be nonempty");
    for (int n : cfg.n_values)
        if (n < 1) errors.push_back("n_values: entries must be >= 1");
    if (cfg.fixed_p.has_value() == cfg.schedule.has_value())
        errors.push_back("p/schedule: exactly one of fixed p or a schedule is required");
    if (cfg.fixed_p && !(*cfg.fixed_p >= 0.0 && *cfg.fixed_p <= 1.0))
        errors.push_back("p: must be in [0,1]");
    if (cfg.trials < 1) errors.push_back("trials: must be >= 1");
    if (cfg.estimate_mode && cfg.samples < 1)
        errors.push_back("samples: must be >= 1 in estimate mode");
    if (!(cfg.delta_target > 0.0)) errors.push_back("delta_target: must be positive");
    try {
        validate_parameters(family_of(cfg.kind), cfg.params);
    } catch (const std::invalid_argument& e) {
        errors.push_back(std::string("params: ") + e.what());
    }
    if (!cfg.estimate_mode) {
        SolverLimits limits;
        int limit = (cfg.kind == Problem::Cutwidth || cfg.kind == Problem::VertSep)
                        ? limits.cw_vs
                        : limits.eb_vb;
        for (int n : cfg.n_values)
            if (n > limit)
                errors.push_back("n_values: n=" + std::to_string(n) +
                                 " exceeds the exact solver limit " + std::to_string(limit));
    }
    if (!errors.empty()) {
        std::string msg = "invalid experiment config:";
        for (const auto& e : errors) msg += "\n  " + e;
        throw ConfigError(msg);
    }
}

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    std::size_t t = values.size();
    if (t % 2 == 1) return values[t / 2];
    return (values[t / 2 - 1] + values[t / 2]) / 2.0;
}

GapReport solve_trial(const ExperimentConfig& cfg, int n, double p, std::uint64_t graph_seed,
                      std::uint64_t layout_seed) {
    if (cfg.model == GraphModel::G) {
        Graph g = sample_gnp(n, p, graph_seed);
        if (cfg.estimate_mode) return estimate_extremes(g, cfg.kind, cfg.samples, layout_seed);
        return gap(g, cfg.kind);
    }
    Dag d = sample_dnp(n, p, graph_seed);
    if (cfg.estimate_mode) return estimate_extremes(d, cfg.kind, cfg.samples, layout_seed);
    return gap(d, cfg.kind);
}

}  // namespace

ExperimentReport run_gap_experiment(const ExperimentConfig& cfg) {
    validate_config(cfg);
    ExperimentReport report;
    report.config = cfg;
    report.rows.reserve(cfg.n_values.size() * cfg.trials);

    for (int n : cfg.n_values) {
        double p = cfg.fixed_p ? *cfg.fixed_p : schedule_p(*cfg.schedule, n);
        PredictedBand band = predicted_band(cfg.kind, n, p, cfg.params);
        int in_band = 0, below_target = 0;
        std::vector<double> gaps;
        gaps.reserve(cfg.trials);
        for (int trial = 0; trial < cfg.trials; ++trial) {
            std::uint64_t graph_seed =
                derive_seed(cfg.master_seed, static_cast<std::uint64_t>(n), 2u * trial);
            std::uint64_t layout_seed =
                derive_seed(cfg.master_seed, static_cast<std::uint64_t>(n), 2u * trial + 1);
            GapReport r = solve_trial(cfg, n, p, graph_seed, layout_seed);

            TrialRow row;
            row.n = n;
            row.p = p;
            row.seed = graph_seed;
            row.trial = trial;
            row.exact = r.exact;
            row.min_cost = r.min_cost;
            row.max_cost = r.max_cost;
            row.gap = r.gap;
            row.lower_min = band.lower_min;
            row.upper_max = band.upper_max;
            row.within_band = r.min_cost >= band.lower_min && r.max_cost <= band.upper_max;
            row.gap_below_target = r.gap < 1.0 + cfg.delta_target;
            in_band += row.within_band;
            below_target += row.gap_below_target;
            gaps.push_back(r.gap);
            report.rows.push_back(row);
        }
        NSummary summary;
        summary.n = n;
        summary.fraction_within_band = static_cast<double>(in_band) / cfg.trials;
        summary.fraction_gap_below_target = static_cast<double>(below_target) / cfg.trials;
        summary.median_gap = median_of(gaps);
        report.summary.push_back(summary);
    }
    return report;
}

ConcentrationReport run_concentration_experiment(const ConcentrationConfig& cfg) {
    std::vector<std::string> errors;
    if (cfg.n < 2) errors.push_back("n: must be >= 2");
    if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) errors.push_back("p: must be in [0,1]");
    int set_size = cfg.set_size.value_or(cfg.n / 2);
    if (set_size < 1 || set_size > cfg.n) errors.push_back("set_size: must be in [1,n]");
    if (cfg.samples < 1) errors.push_back("samples: must be >= 1");
    for (double eps : cfg.eps_grid)
        if (!(eps > 0.0)) errors.push_back("eps_grid: entries must be positive");
    if (!errors.empty()) {
        std::string msg = "invalid concentration config:";
        for (const auto& e : errors) msg += "\n  " + e;
        throw ConfigError(msg);
    }

    ConcentrationReport report;
    report.n = cfg.n;
    report.p = cfg.p;
    report.set_size = set_size;
    report.samples = cfg.samples;
    int slots = set_size * (cfg.n - set_size);
    report.mu = slots * cfg.p;

    VertexSet s;
    for (int v = 0; v < set_size; ++v) s.insert(v);

    std::vector<int> cuts(cfg.samples);
    double sum = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
        std::uint64_t seed = derive_seed(cfg.master_seed, static_cast<std::uint64_t>(cfg.n),
                                         static_cast<std::uint64_t>(i));
        Graph g = sample_gnp(cfg.n, cfg.p, seed);
        cuts[i] = cut_size(g, s);
        sum += cuts[i];
    }
    report.empirical_mean = sum / cfg.samples;

    for (double eps : cfg.eps_grid) {
        ConcentrationTailRow row;
        row.eps = eps;
        double lo = report.mu * (1.0 - eps);
        double hi = report.mu * (1.0 + eps);
        int below = 0, above = 0;
        for (int c : cuts) {
            below += c <= lo;
            above += c >= hi;
        }
        row.lower_freq = static_cast<double>(below) / cfg.samples;
        row.upper_freq = static_cast<double>(above) / cfg.samples;
        row.hoeffding_bound = slots > 0 ? hoeffding_tail(slots, eps * cfg.p) : 1.0;
        report.tails.push_back(row);
    }
    return report;
}

std::string format_gap(double gap) {
    if (std::isinf(gap)) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", gap);
    return buf;
}

namespace {

std::string fmt6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

const char* model_name(GraphModel m) { return m == GraphModel::G ? "G" : "D"; }

GraphModel parse_model(const std::string& s) {
    if (s == "G") return GraphModel::G;
    if (s == "D") return GraphModel::D;
    throw std::invalid_argument("model must be \"G\" or \"D\"");
}

}  // namespace

void write_report_csv(const ExperimentReport& report, std::ostream& out) {
    out << "problem,model,n,p,seed,trial,exact,min_cost,max_cost,gap,"
           "lower_min,upper_max,within_band,gap_below_target\n";
    std::string prob = problem_name(report.config.kind);
    for (const TrialRow& r : report.rows) {
        out << prob << ',' << model_name(report.config.model) << ',' << r.n << ','
            << fmt6(r.p) << ',' << r.seed << ',' << r.trial << ','
            << (r.exact ? "true" : "false") << ',' << r.min_cost << ',' << r.max_cost << ','
            << format_gap(r.gap) << ',' << fmt6(r.lower_min) << ',' << fmt6(r.upper_max)
            << ',' << (r.within_band ? "true" : "false") << ','
            << (r.gap_below_target ? "true" : "false") << '\n';
    }
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["problem"] = problem_name(cfg.kind);
    j["model"] = model_name(cfg.model);
    j["n_values"] = cfg.n_values;
    if (cfg.fixed_p) j["p"] = *cfg.fixed_p;
    if (cfg.schedule) j["schedule"] = {{"K", cfg.schedule->K}, {"c", cfg.schedule->c}};
    j["trials"] = cfg.trials;
    j["mode"] = cfg.estimate_mode ? "estimate" : "exact";
    if (cfg.estimate_mode) j["samples"] = cfg.samples;
    j["params"] = {{"c", cfg.params.c},         {"l", cfg.params.l},
                   {"s", cfg.params.s},         {"delta", cfg.params.delta},
                   {"epsilon", cfg.params.epsilon}};
    j["master_seed"] = cfg.master_seed;
    j["delta_target"] = cfg.delta_target;
    return j;
}

ExperimentConfig parse_experiment_config(const nlohmann::json& j) {
    std::vector<std::string> errors;
    ExperimentConfig cfg;

    auto require = [&](const char* field) -> const nlohmann::json* {
        if (!j.contains(field)) {
            errors.push_back(std::string(field) + ": missing");
            return nullptr;
        }
        return &j.at(field);
    };

    if (auto* f = require("problem")) {
        try {
            cfg.kind = parse_problem(f->get<std::string>());
        } catch (const std::exception& e) {
            errors.push_back(std::string("problem: ") + e.what());
        }
    }
    if (auto* f = require("model")) {
        try {
            cfg.model = parse_model(f->get<std::string>());
        } catch (const std::exception& e) {
            errors.push_back(std::string("model: ") + e.what());
        }
    }
    if (auto* f = require("n_values")) {
        if (!f->is_array() || f->empty())
            errors.push_back("n_values: must be a nonempty array");
        else
            cfg.n_values = f->get<std::vector<int>>();
    }
    if (j.contains("p")) cfg.fixed_p = j.at("p").get<double>();
    if (j.contains("schedule")) {
        SparsitySchedule sched;
        const auto& s = j.at("schedule");
        if (!s.contains("K") || !s.contains("c")) {
            errors.push_back("schedule: requires K and c");
        } else {
            sched.K = s.at("K").get<double>();
            sched.c = s.at("c").get<double>();
            cfg.schedule = sched;
        }
    }
    if (!j.contains("p") && !j.contains("schedule"))
        errors.push_back("p/schedule: one of them is required");
    if (j.contains("p") && j.contains("schedule"))
        errors.push_back("p/schedule: mutually exclusive");
    if (auto* f = require("trials")) cfg.trials = f->get<int>();
    if (auto* f = require("mode")) {
        std::string mode = f->get<std::string>();
        if (mode == "estimate")
            cfg.estimate_mode = true;
        else if (mode == "exact")
            cfg.estimate_mode = false;
        else
            errors.push_back("mode: must be \"exact\" or \"estimate\"");
    }
    if (j.contains("samples")) cfg.samples = j.at("samples").get<int>();
    if (j.contains("params")) {
        const auto& p = j.at("params");
        if (p.contains("c")) cfg.params.c = p.at("c").get<double>();
        // remaining exponents default to the midpoint rule for this c
        try {
            cfg.params = choose_parameters(family_of(cfg.kind), cfg.params.c);
        } catch (const std::exception& e) {
            errors.push_back(std::string("params.c: ") + e.what());
        }
        if (p.contains("l")) cfg.params.l = p.at("l").get<double>();
        if (p.contains("s")) cfg.params.s = p.at("s").get<double>();
        if (p.contains("delta")) cfg.params.delta = p.at("delta").get<double>();
        if (p.contains("epsilon")) cfg.params.epsilon = p.at("epsilon").get<double>();
    } else {
        try {
            cfg.params = choose_parameters(family_of(cfg.kind), 0.0);
        } catch (const std::exception&) {
        }
    }
    if (auto* f = require("master_seed")) cfg.master_seed = f->get<std::uint64_t>();
    if (auto* f = require("delta_target")) cfg.delta_target = f->get<double>();

    if (!errors.empty()) {
        std::string msg = "invalid experiment config:";
        for (const auto& e : errors) msg += "\n  " + e;
        throw ConfigError(msg);
    }
    validate_config(cfg);
    return cfg;
}

nlohmann::json report_to_json(const ExperimentReport& report) {
    nlohmann::json j;
    j["config"] = config_to_json(report.config);
    j["rows"] = nlohmann::json::array();
    for (const TrialRow& r : report.rows) {
        j["rows"].push_back({{"n", r.n},
                             {"p", r.p},
                             {"seed", r.seed},
                             {"trial", r.trial},
                             {"exact", r.exact},
                             {"min_cost", r.min_cost},
                             {"max_cost", r.max_cost},
                             {"gap", std::isinf(r.gap) ? nlohmann::json("inf")
                                                       : nlohmann::json(r.gap)},
                             {"lower_min", r.lower_min},
                             {"upper_max", r.upper_max},
                             {"within_band", r.within_band},
                             {"gap_below_target", r.gap_below_target}});
    }
    j["summary"] = nlohmann::json::array();
    for (const NSummary& s : report.summary) {
        j["summary"].push_back({{"n", s.n},
                                {"fraction_within_band", s.fraction_within_band},
                                {"fraction_gap_below_target", s.fraction_gap_below_target},
                                {"median_gap", std::isinf(s.median_gap)
                                                   ? nlohmann::json("inf")
                                                   : nlohmann::json(s.median_gap)}});
    }
    return j;
}

namespace {

double parse_gap(const nlohmann::json& v) {
    if (v.is_string()) {
        if (v.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
        throw std::invalid_argument("bad gap value");
    }
    return v.get<double>();
}

}  // namespace

ExperimentReport report_from_json(const nlohmann::json& j) {
    ExperimentReport report;
    report.config = parse_experiment_config(j.at("config"));
    for (const auto& r : j.at("rows")) {
        TrialRow row;
        row.n = r.at("n").get<int>();
        row.p = r.at("p").get<double>();
        row.seed = r.at("seed").get<std::uint64_t>();
        row.trial = r.at("trial").get<int>();
        row.exact = r.at("exact").get<bool>();
        row.min_cost = r.at("min_cost").get<int>();
        row.max_cost = r.at("max_cost").get<int>();
        row.gap = parse_gap(r.at("gap"));
        row.lower_min = r.at("lower_min").get<double>();
        row.upper_max = r.at("upper_max").get<double>();
        row.within_band = r.at("within_band").get<bool>();
        row.gap_below_target = r.at("gap_below_target").get<bool>();
        report.rows.push_back(row);
    }
    for (const auto& s : j.at("summary")) {
        NSummary summary;
        summary.n = s.at("n").get<int>();
        summary.fraction_within_band = s.at("fraction_within_band").get<double>();
        summary.fraction_gap_below_target = s.at("fraction_gap_below_target").get<double>();
        summary.median_gap = parse_gap(s.at("median_gap"));
        report.summary.push_back(summary);
    }
    return report;
}

nlohmann::json concentration_to_json(const ConcentrationReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["p"] = report.p;
    j["set_size"] = report.set_size;
    j["samples"] = report.samples;
    j["mu"] = report.mu;
    j["empirical_mean"] = report.empirical_mean;
    j["tails"] = nlohmann::json::array();
    for (const auto& t : report.tails)
        j["tails"].push_back({{"eps", t.eps},
                              {"lower_freq", t.lower_freq},
                              {"upper_freq", t.upper_freq},
                              {"hoeffding_bound", t.hoeffding_bound}});
    return j;
}

}  // namespace laygap
