#ifndef laygap_measures_hpp
#define laygap_measures_hpp

#include <string>
#include <vector>

#include "laygap/graph.hpp"

namespace laygap {

// The four layout cost functionals. Directedness is carried by the input
// graph type, not by the enum.
enum class Problem { Cutwidth, VertSep, EdgeBis, VertBis };

std::string problem_name(Problem p);
Problem parse_problem(const std::string& name);

// Per-cut-position theta/delta vectors for one layout; indices 0..n.
struct CostProfile {
    std::vector<int> theta;
    std::vector<int> delta;
};

// Number of edges with exactly one endpoint in s (undirected), or number of
// edges leaving s (directed).
int cut_size(const Graph& g, const VertexSet& s);
int cut_size(const Dag& g, const VertexSet& s);

// Number of vertices in s with at least one neighbor (out-neighbor, for a
// Dag) outside s.
int boundary_size(const Graph& g, const VertexSet& s);
int boundary_size(const Dag& g, const VertexSet& s);

// Cut and boundary measures of the i-prefix of a layout, 0 <= i <= n.
int theta(const Graph& g, const Layout& layout, int i);
int theta(const Dag& g, const Layout& layout, int i);
int delta(const Graph& g, const Layout& layout, int i);
int delta(const Dag& g, const Layout& layout, int i);

CostProfile profile(const Graph& g, const Layout& layout);
CostProfile profile(const Dag& g, const Layout& layout);

// Cutwidth / vertex separation: max of theta / delta over all cut positions.
// Edge / vertex bisection: theta / delta at cut position floor(n/2).
int cost(const Graph& g, const Layout& layout, Problem kind);
int cost(const Dag& g, const Layout& layout, Problem kind);

}  // namespace laygap

#endif
