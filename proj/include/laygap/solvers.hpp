#ifndef laygap_solvers_hpp
#define laygap_solvers_hpp

#include <cstdint>
#include <stdexcept>

#include "laygap/measures.hpp"

namespace laygap {

enum class Objective { Min, Max };

// Instance too large for the exact solvers / the brute-force oracle.
struct SolverLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Largest instance sizes accepted by the exact solvers. Cutwidth and vertex
// separation run a DP over all 2^n subsets; the bisections only scan the
// size-floor(n/2) layer and can go a little higher.
struct SolverLimits {
    int cw_vs = 24;
    int eb_vb = 26;
};

struct SolveResult {
    int cost = 0;
    Layout witness;
};

struct GapReport {
    Problem kind = Problem::Cutwidth;
    bool directed = false;
    int min_cost = 0;
    int max_cost = 0;
    // max/min when min > 0; 1 when min = max = 0; +infinity when min = 0 < max.
    double gap = 1.0;
    Layout min_witness;
    Layout max_witness;
    bool exact = true;
};

double gap_ratio(int min_cost, int max_cost);

// Exact optimum over all valid layouts, with a witness layout attaining it.
// Cutwidth / vertex separation: prefix-set DP over all subsets (undirected)
// or all downsets (directed). Bisections: direct optimization over the
// size-floor(n/2) subset (downset) family.
SolveResult solve_min(const Graph& g, Problem kind, const SolverLimits& limits = {});
SolveResult solve_min(const Dag& g, Problem kind, const SolverLimits& limits = {});
SolveResult solve_max(const Graph& g, Problem kind, const SolverLimits& limits = {});
SolveResult solve_max(const Dag& g, Problem kind, const SolverLimits& limits = {});

// Exhaustive enumeration of all layouts (permutations / linear extensions);
// test oracle only, n <= 9.
int brute_force(const Graph& g, Problem kind, Objective objective);
int brute_force(const Dag& g, Problem kind, Objective objective);

GapReport gap(const Graph& g, Problem kind, const SolverLimits& limits = {});
GapReport gap(const Dag& g, Problem kind, const SolverLimits& limits = {});

// Min/max cost over `samples` random valid layouts. The reported min is an
// upper bound on the true MIN and the reported max a lower bound on the true
// MAX, so the reported gap is not one-sided; exact is false.
GapReport estimate_extremes(const Graph& g, Problem kind, int samples, std::uint64_t seed);
GapReport estimate_extremes(const Dag& g, Problem kind, int samples, std::uint64_t seed);

}  // namespace laygap

#endif
