#ifndef laygap_experiments_hpp
#define laygap_experiments_hpp

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "laygap/bounds.hpp"
#include "laygap/sampler.hpp"
#include "laygap/solvers.hpp"

namespace laygap {

enum class GraphModel { G, D };

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    Problem kind = Problem::Cutwidth;
    GraphModel model = GraphModel::G;
    std::vector<int> n_values;
    std::optional<double> fixed_p;
    std::optional<SparsitySchedule> schedule;
    int trials = 1;
    bool estimate_mode = false;
    int samples = 1000;  // layouts per trial in estimate mode
    BoundParameters params;
    std::uint64_t master_seed = 0;
    double delta_target = 0.5;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&);
};

struct TrialRow {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    int trial = 0;
    bool exact = true;
    int min_cost = 0;
    int max_cost = 0;
    double gap = 1.0;
    double lower_min = 0.0;
    double upper_max = 0.0;
    bool within_band = false;
    bool gap_below_target = false;

    friend bool operator==(const TrialRow&, const TrialRow&) = default;
};

struct NSummary {
    int n = 0;
    double fraction_within_band = 0.0;
    double fraction_gap_below_target = 0.0;
    double median_gap = 1.0;

    friend bool operator==(const NSummary&, const NSummary&) = default;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<TrialRow> rows;
    std::vector<NSummary> summary;

    friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

// For each n and trial: sample a graph with seed derive_seed(master, n,
// 2*trial), compute min/max (exact solvers, or estimate_extremes with seed
// derive_seed(master, n, 2*trial+1)), and compare against the predicted band
// and against gap < 1 + delta_target. Deterministic given the config.
ExperimentReport run_gap_experiment(const ExperimentConfig& cfg);

struct ConcentrationConfig {
    int n = 40;
    double p = 0.3;
    std::optional<int> set_size;  // default floor(n/2)
    int samples = 10000;
    std::vector<double> eps_grid;
    std::uint64_t master_seed = 0;
};

struct ConcentrationTailRow {
    double eps = 0.0;
    double lower_freq = 0.0;   // empirical P[c(S) <= mu(1-eps)]
    double upper_freq = 0.0;   // empirical P[c(S) >= mu(1+eps)]
    double hoeffding_bound = 0.0;
};

struct ConcentrationReport {
    int n = 0;
    double p = 0.0;
    int set_size = 0;
    int samples = 0;
    double mu = 0.0;
    double empirical_mean = 0.0;
    std::vector<ConcentrationTailRow> tails;
};

// Fixes S = {0..set_size-1}, samples independent G(n,p) graphs, and compares
// the empirical tails of c(S) against the Hoeffding bound on the
// set_size*(n-set_size) edge slots (absolute deviation eps*p per slot).
ConcentrationReport run_concentration_experiment(const ConcentrationConfig& cfg);

// Gap values are serialized with 6 fractional digits, "inf" for an infinite
// gap, in both formats.
std::string format_gap(double gap);

void write_report_csv(const ExperimentReport& report, std::ostream& out);
nlohmann::json report_to_json(const ExperimentReport& report);
ExperimentReport report_from_json(const nlohmann::json& j);

nlohmann::json config_to_json(const ExperimentConfig& cfg);
// Throws ConfigError listing every invalid field.
ExperimentConfig parse_experiment_config(const nlohmann::json& j);

nlohmann::json concentration_to_json(const ConcentrationReport& report);

}  // namespace laygap

#endif
