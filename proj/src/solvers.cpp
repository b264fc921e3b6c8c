#include "laygap/solvers.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

#include "laygap/sampler.hpp"

namespace laygap {

double gap_ratio(int min_cost, int max_cost) {
    if (min_cost > 0) return static_cast<double>(max_cost) / min_cost;
    if (max_cost == 0) return 1.0;
    return std::numeric_limits<double>::infinity();
}

namespace {

constexpr std::uint8_t kUnset = 0xff;

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

// Measures on subset masks; the undirected cut counts each crossing edge once
// (summed from the inside endpoint).
int cut_mask(const Graph& g, std::uint64_t s) {
    int count = 0;
    std::uint64_t rest = s;
    while (rest) {
        Vertex v = __builtin_ctzll(rest);
        rest &= rest - 1;
        count += __builtin_popcountll(g.adj_mask(v) & ~s);
    }
    return count;
}

int cut_mask(const Dag& g, std::uint64_t s) {
    int count = 0;
    std::uint64_t rest = s;
    while (rest) {
        Vertex v = __builtin_ctzll(rest);
        rest &= rest - 1;
        count += __builtin_popcountll(g.succ_mask(v) & ~s);
    }
    return count;
}

int boundary_mask(const Graph& g, std::uint64_t s) {
    int count = 0;
    std::uint64_t rest = s;
    while (rest) {
        Vertex v = __builtin_ctzll(rest);
        rest &= rest - 1;
        count += (g.adj_mask(v) & ~s) != 0;
    }
    return count;
}

int boundary_mask(const Dag& g, std::uint64_t s) {
    int count = 0;
    std::uint64_t rest = s;
    while (rest) {
        Vertex v = __builtin_ctzll(rest);
        rest &= rest - 1;
        count += (g.succ_mask(v) & ~s) != 0;
    }
    return count;
}

template <class G>
int measure_mask(const G& g, std::uint64_t s, Problem kind) {
    if (kind == Problem::Cutwidth || kind == Problem::EdgeBis) return cut_mask(g, s);
    return boundary_mask(g, s);
}

bool downset_mask(const Dag& g, std::uint64_t s) {
    std::uint64_t rest = s;
    while (rest) {
        Vertex v = __builtin_ctzll(rest);
        rest &= rest - 1;
        if (g.pred_mask(v) & ~s) return false;
    }
    return true;
}

// every set is a prefix of some permutation
bool prefix_ok(const Graph&, std::uint64_t) { return true; }
bool prefix_ok(const Dag& g, std::uint64_t s) { return downset_mask(g, s); }

// last vertex of a prefix must have no successor inside it
bool removable(const Graph&, std::uint64_t, Vertex) { return true; }
bool removable(const Dag& g, std::uint64_t s, Vertex v) {
    return (g.succ_mask(v) & s & ~bit(v)) == 0;
}

Layout sorted_prefix_layout(const Graph& g, std::uint64_t s) {
    Layout order;
    order.reserve(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (s & bit(v)) order.push_back(v);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!(s & bit(v))) order.push_back(v);
    return order;
}

Layout sorted_prefix_layout(const Dag& g, std::uint64_t s) {
    return layout_with_prefix(g, VertexSet{s});
}

void check_limit(int n, Problem kind, const SolverLimits& limits) {
    int limit = (kind == Problem::Cutwidth || kind == Problem::VertSep) ? limits.cw_vs
                                                                        : limits.eb_vb;
    if (n > limit)
        throw SolverLimitError("exact solver limit exceeded: n=" + std::to_string(n) +
                               " > " + std::to_string(limit) + " for " + problem_name(kind));
}

template <class G>
void check_witness(const G& g, Problem kind, const SolveResult& r) {
    if (!is_valid_layout(g, r.witness) || cost(g, r.witness, kind) != r.cost)
        throw std::logic_error("solver produced an unsound witness");
}

// Prefix-set DP: f(S) = max(measure(S), min over admissible last vertices v
// of f(S - v)). States restricted to downsets for a Dag.
template <class G>
SolveResult dp_min(const G& g, Problem kind) {
    int n = g.vertex_count();
    std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : (bit(n) - 1);
    std::vector<std::uint8_t> f(std::size_t{1} << n, kUnset);
    f[0] = 0;
    for (std::uint64_t s = 1; s <= full; ++s) {
        if (!prefix_ok(g, s)) continue;
        int best = kUnset;
        std::uint64_t rest = s;
        while (rest) {
            Vertex v = __builtin_ctzll(rest);
            rest &= rest - 1;
            if (!removable(g, s, v)) continue;
            best = std::min(best, static_cast<int>(f[s ^ bit(v)]));
        }
        f[s] = static_cast<std::uint8_t>(std::max(measure_mask(g, s, kind), best));
    }

    SolveResult result;
    result.cost = f[full];
    result.witness.assign(n, 0);
    std::uint64_t s = full;
    for (int pos = n - 1; pos >= 0; --pos) {
        int target = f[s];
        int meas = measure_mask(g, s, kind);
        for (Vertex v = 0; v < n; ++v) {
            if (!(s & bit(v)) || !removable(g, s, v)) continue;
            if (std::max(meas, static_cast<int>(f[s ^ bit(v)])) == target) {
                result.witness[pos] = v;
                s ^= bit(v);
                break;
            }
        }
    }
    check_witness(g, kind, result);
    return result;
}

// Running maxima reduce to set maximization: every nonempty proper subset
// (downset) is realizable as a layout prefix.
template <class G>
SolveResult subset_max(const G& g, Problem kind) {
    int n = g.vertex_count();
    std::uint64_t full = bit(n) - 1;
    int best = -1;
    std::uint64_t best_set = 0;
    for (std::uint64_t s = 1; s < full; ++s) {
        if (!prefix_ok(g, s)) continue;
        int meas = measure_mask(g, s, kind);
        if (meas > best) {
            best = meas;
            best_set = s;
        }
    }
    SolveResult result;
    if (best < 0) {  // n == 1: no nontrivial prefix
        result.cost = 0;
        result.witness = sorted_prefix_layout(g, 0);
    } else {
        result.cost = best;
        result.witness = sorted_prefix_layout(g, best_set);
    }
    check_witness(g, kind, result);
    return result;
}

// Bisections: optimize the measure over the size-floor(n/2) layer directly.
template <class G>
SolveResult bisection_opt(const G& g, Problem kind, Objective objective) {
    int n = g.vertex_count();
    int k = n / 2;
    SolveResult result;
    if (k == 0) {
        result.cost = 0;
        result.witness = sorted_prefix_layout(g, 0);
        check_witness(g, kind, result);
        return result;
    }
    int best = -1;
    std::uint64_t best_set = 0;
    // Gosper's hack over all masks of popcount k
    std::uint64_t s = bit(k) - 1;
    std::uint64_t limit = bit(n);
    while (s < limit) {
        if (prefix_ok(g, s)) {
            int meas = measure_mask(g, s, kind);
            bool better = (best < 0) ||
                          (objective == Objective::Min ? meas < best : meas > best);
            if (better) {
                best = meas;
                best_set = s;
            }
        }
        std::uint64_t c = s & -s;
        std::uint64_t r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    result.cost = best;
    result.witness = sorted_prefix_layout(g, best_set);
    check_witness(g, kind, result);
    return result;
}

template <class G>
SolveResult solve_min_impl(const G& g, Problem kind, const SolverLimits& limits) {
    check_limit(g.vertex_count(), kind, limits);
    if (kind == Problem::EdgeBis || kind == Problem::VertBis)
        return bisection_opt(g, kind, Objective::Min);
    return dp_min(g, kind);
}

template <class G>
SolveResult solve_max_impl(const G& g, Problem kind, const SolverLimits& limits) {
    check_limit(g.vertex_count(), kind, limits);
    if (kind == Problem::EdgeBis || kind == Problem::VertBis)
        return bisection_opt(g, kind, Objective::Max);
    return subset_max(g, kind);
}

template <class G>
GapReport gap_impl(const G& g, Problem kind, const SolverLimits& limits) {
    SolveResult lo = solve_min_impl(g, kind, limits);
    SolveResult hi = solve_max_impl(g, kind, limits);
    GapReport report;
    report.kind = kind;
    report.directed = std::is_same_v<G, Dag>;
    report.min_cost = lo.cost;
    report.max_cost = hi.cost;
    report.gap = gap_ratio(lo.cost, hi.cost);
    report.min_witness = std::move(lo.witness);
    report.max_witness = std::move(hi.witness);
    report.exact = true;
    return report;
}

void for_each_layout(const Graph& g, const std::function<void(const Layout&)>& fn) {
    Layout perm(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) perm[i] = i;
    do {
        fn(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

// All linear extensions, by backtracking over available sources.
void for_each_layout(const Dag& g, const std::function<void(const Layout&)>& fn) {
    int n = g.vertex_count();
    std::vector<int> indeg(n, 0);
    for (auto [u, v] : g.edges()) {
        (void)u;
        ++indeg[v];
    }
    Layout order;
    order.reserve(n);
    std::vector<char> placed(n, 0);
    auto recurse = [&](auto&& self) -> void {
        if (static_cast<int>(order.size()) == n) {
            fn(order);
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (placed[v] || indeg[v] != 0) continue;
            placed[v] = 1;
            for (Vertex w : g.out_neighbors(v)) --indeg[w];
            order.push_back(v);
            self(self);
            order.pop_back();
            for (Vertex w : g.out_neighbors(v)) ++indeg[w];
            placed[v] = 0;
        }
    };
    recurse(recurse);
}

template <class G>
int brute_force_impl(const G& g, Problem kind, Objective objective) {
    if (g.vertex_count() > 9)
        throw SolverLimitError("brute force limited to n <= 9");
    int best = -1;
    for_each_layout(g, [&](const Layout& layout) {
        int c = cost(g, layout, kind);
        if (best < 0 || (objective == Objective::Min ? c < best : c > best)) best = c;
    });
    return best;
}

template <class G>
Layout sample_layout(const G& g, Rng& rng);

template <>
Layout sample_layout(const Graph& g, Rng& rng) {
    return random_layout(g.vertex_count(), rng);
}

template <>
Layout sample_layout(const Dag& g, Rng& rng) {
    return random_topological_layout(g, rng);
}

template <class G>
GapReport estimate_impl(const G& g, Problem kind, int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    Rng rng(seed);
    GapReport report;
    report.kind = kind;
    report.directed = std::is_same_v<G, Dag>;
    report.exact = false;
    for (int i = 0; i < samples; ++i) {
        Layout layout = sample_layout(g, rng);
        int c = cost(g, layout, kind);
        if (i == 0 || c < report.min_cost) {
            report.min_cost = c;
            report.min_witness = layout;
        }
        if (i == 0 || c > report.max_cost) {
            report.max_cost = c;
            report.max_witness = layout;
        }
    }
    report.gap = gap_ratio(report.min_cost, report.max_cost);
    return report;
}

}  // namespace

SolveResult solve_min(const Graph& g, Problem kind, const SolverLimits& limits) {
    return solve_min_impl(g, kind, limits);
}
SolveResult solve_min(const Dag& g, Problem kind, const SolverLimits& limits) {
    return solve_min_impl(g, kind, limits);
}
SolveResult solve_max(const Graph& g, Problem kind, const SolverLimits& limits) {
    return solve_max_impl(g, kind, limits);
}
SolveResult solve_max(const Dag& g, Problem kind, const SolverLimits& limits) {
    return solve_max_impl(g, kind, limits);
}

int brute_force(const Graph& g, Problem kind, Objective objective) {
    return brute_force_impl(g, kind, objective);
}
int brute_force(const Dag& g, Problem kind, Objective objective) {
    return brute_force_impl(g, kind, objective);
}

GapReport gap(const Graph& g, Problem kind, const SolverLimits& limits) {
    return gap_impl(g, kind, limits);
}
GapReport gap(const Dag& g, Problem kind, const SolverLimits& limits) {
    return gap_impl(g, kind, limits);
}

GapReport estimate_extremes(const Graph& g, Problem kind, int samples, std::uint64_t seed) {
    return estimate_impl(g, kind, samples, seed);
}
GapReport estimate_extremes(const Dag& g, Problem kind, int samples, std::uint64_t seed) {
    return estimate_impl(g, kind, samples, seed);
}

}  // namespace laygap
