#include "laygap/measures.hpp"

#include <algorithm>
#include <stdexcept>

namespace laygap {

std::string problem_name(Problem p) {
    switch (p) {
        case Problem::Cutwidth: return "cutwidth";
        case Problem::VertSep: return "vertsep";
        case Problem::EdgeBis: return "edgebis";
        case Problem::VertBis: return "vertbis";
    }
    throw std::logic_error("unreachable");
}

Problem parse_problem(const std::string& name) {
    if (name == "cutwidth") return Problem::Cutwidth;
    if (name == "vertsep") return Problem::VertSep;
    if (name == "edgebis") return Problem::EdgeBis;
    if (name == "vertbis") return Problem::VertBis;
    throw std::invalid_argument("unknown problem '" + name + "'");
}

namespace {

void check_universe(int n, const VertexSet& s) {
    if (n > VertexSet::max_universe)
        throw std::out_of_range("vertex-set measures require n <= 64");
    if (n < 64 && (s.bits >> n))
        throw std::out_of_range("set member outside universe");
}

}  // namespace

int cut_size(const Graph& g, const VertexSet& s) {
    check_universe(g.vertex_count(), s);
    int count = 0;
    for (auto [u, v] : g.edges())
        count += s.contains(u) != s.contains(v);
    return count;
}

int cut_size(const Dag& g, const VertexSet& s) {
    check_universe(g.vertex_count(), s);
    int count = 0;
    for (auto [u, v] : g.edges())
        count += s.contains(u) && !s.contains(v);
    return count;
}

int boundary_size(const Graph& g, const VertexSet& s) {
    check_universe(g.vertex_count(), s);
    int count = 0;
    std::uint64_t bits = s.bits;
    while (bits) {
        Vertex v = __builtin_ctzll(bits);
        bits &= bits - 1;
        count += (g.adj_mask(v) & ~s.bits) != 0;
    }
    return count;
}

int boundary_size(const Dag& g, const VertexSet& s) {
    check_universe(g.vertex_count(), s);
    int count = 0;
    std::uint64_t bits = s.bits;
    while (bits) {
        Vertex v = __builtin_ctzll(bits);
        bits &= bits - 1;
        count += (g.succ_mask(v) & ~s.bits) != 0;
    }
    return count;
}

namespace {

template <class G>
void check_layout(const G& g, const Layout& layout) {
    if (!is_valid_layout(g, layout))
        throw std::invalid_argument("invalid layout for this graph");
}

// Incremental profile over prefix sizes 0..n. cross[u] tracks the number of
// (out-)neighbors of a prefix vertex u still outside the prefix.
CostProfile profile_impl(const Graph& g, const Layout& layout) {
    int n = g.vertex_count();
    CostProfile pr;
    pr.theta.assign(n + 1, 0);
    pr.delta.assign(n + 1, 0);
    std::vector<char> in_prefix(n, 0);
    std::vector<int> cross(n, 0);
    int theta_now = 0, delta_now = 0;
    for (int i = 1; i <= n; ++i) {
        Vertex v = layout[i - 1];
        int inside = 0;
        for (Vertex u : g.neighbors(v)) {
            if (!in_prefix[u]) continue;
            ++inside;
            if (--cross[u] == 0) --delta_now;
        }
        theta_now += static_cast<int>(g.neighbors(v).size()) - 2 * inside;
        cross[v] = static_cast<int>(g.neighbors(v).size()) - inside;
        if (cross[v] > 0) ++delta_now;
        in_prefix[v] = 1;
        pr.theta[i] = theta_now;
        pr.delta[i] = delta_now;
    }
    return pr;
}

CostProfile profile_impl(const Dag& g, const Layout& layout) {
    int n = g.vertex_count();
    CostProfile pr;
    pr.theta.assign(n + 1, 0);
    pr.delta.assign(n + 1, 0);
    std::vector<char> in_prefix(n, 0);
    std::vector<int> cross(n, 0);
    int theta_now = 0, delta_now = 0;
    for (int i = 1; i <= n; ++i) {
        Vertex v = layout[i - 1];
        int in_from_prefix = 0;
        for (Vertex u : g.in_neighbors(v)) {
            if (!in_prefix[u]) continue;
            ++in_from_prefix;
            if (--cross[u] == 0) --delta_now;
        }
        int out_inside = 0;
        for (Vertex w : g.out_neighbors(v))
            out_inside += in_prefix[w];
        theta_now += static_cast<int>(g.out_neighbors(v).size()) - out_inside - in_from_prefix;
        cross[v] = static_cast<int>(g.out_neighbors(v).size()) - out_inside;
        if (cross[v] > 0) ++delta_now;
        in_prefix[v] = 1;
        pr.theta[i] = theta_now;
        pr.delta[i] = delta_now;
    }
    return pr;
}

template <class G>
int cost_impl(const G& g, const Layout& layout, Problem kind) {
    check_layout(g, layout);
    CostProfile pr = profile_impl(g, layout);
    int n = g.vertex_count();
    switch (kind) {
        case Problem::Cutwidth:
            return *std::max_element(pr.theta.begin(), pr.theta.end());
        case Problem::VertSep:
            return *std::max_element(pr.delta.begin(), pr.delta.end());
        case Problem::EdgeBis:
            return pr.theta[n / 2];
        case Problem::VertBis:
            return pr.delta[n / 2];
    }
    throw std::logic_error("unreachable");
}

template <class G>
int at_position(const G& g, const Layout& layout, int i, bool want_theta) {
    check_layout(g, layout);
    if (i < 0 || i > g.vertex_count())
        throw std::out_of_range("cut position outside [0,n]");
    CostProfile pr = profile_impl(g, layout);
    return want_theta ? pr.theta[i] : pr.delta[i];
}

}  // namespace

int theta(const Graph& g, const Layout& layout, int i) { return at_position(g, layout, i, true); }
int theta(const Dag& g, const Layout& layout, int i) { return at_position(g, layout, i, true); }
int delta(const Graph& g, const Layout& layout, int i) { return at_position(g, layout, i, false); }
int delta(const Dag& g, const Layout& layout, int i) { return at_position(g, layout, i, false); }

CostProfile profile(const Graph& g, const Layout& layout) {
    check_layout(g, layout);
    return profile_impl(g, layout);
}

CostProfile profile(const Dag& g, const Layout& layout) {
    check_layout(g, layout);
    return profile_impl(g, layout);
}

int cost(const Graph& g, const Layout& layout, Problem kind) { return cost_impl(g, layout, kind); }
int cost(const Dag& g, const Layout& layout, Problem kind) { return cost_impl(g, layout, kind); }

}  // namespace laygap
