#ifndef laygap_graph_hpp
#define laygap_graph_hpp

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace laygap {

using Vertex = int;

// Ordering of vertices: position k holds the vertex placed k-th (1-based
// position k+1 in the usual layout convention).
using Layout = std::vector<Vertex>;

// Subset of a vertex universe of size <= 64, stored as a bitmask.
struct VertexSet {
    std::uint64_t bits = 0;

    static constexpr int max_universe = 64;

    bool contains(Vertex v) const { return (bits >> v) & 1u; }
    void insert(Vertex v) { bits |= std::uint64_t{1} << v; }
    void erase(Vertex v) { bits &= ~(std::uint64_t{1} << v); }
    int size() const { return __builtin_popcountll(bits); }
    bool empty() const { return bits == 0; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

VertexSet full_set(int n);

// Simple undirected graph. Edges are normalized to (min,max), deduplicated
// and sorted; self-loops are rejected.
class Graph {
public:
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

    // Adjacency bitmask; only available when n <= 64.
    std::uint64_t adj_mask(Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint64_t> adj_mask_;
};

// Directed acyclic graph. Acyclicity is verified at construction.
class Dag {
public:
    Dag(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_[v]; }
    const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_[v]; }

    std::uint64_t succ_mask(Vertex v) const;
    std::uint64_t pred_mask(Vertex v) const;

    friend bool operator==(const Dag& a, const Dag& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::vector<std::uint64_t> succ_mask_;
    std::vector<std::uint64_t> pred_mask_;
};

// True iff `layout` is a permutation of 0..n-1 (and topological, for a Dag).
// A length mismatch is an error, not a false.
bool is_valid_layout(const Graph& g, const Layout& layout);
bool is_valid_layout(const Dag& g, const Layout& layout);

// True iff no edge (u,v) has v in s and u outside s.
bool is_downset(const Dag& d, const VertexSet& s);

// All downsets of d, generated by cardinality layers (size-k sets obtained by
// extending size-(k-1) sets with one source of the remaining poset). With
// size_filter only that layer is returned. Each downset appears exactly once.
std::vector<VertexSet> enumerate_downsets(const Dag& d,
                                          std::optional<int> size_filter = std::nullopt);

// A topological layout of d whose first |s| vertices are exactly s.
// Requires s to be a downset. Ties broken lowest-index-first.
Layout layout_with_prefix(const Dag& d, const VertexSet& s);

// Lowest-index-first topological order.
Layout canonical_topological_order(const Dag& d);

// Text format: optional '#' comment lines, header "<kind> <n> <m>" with
// kind in {ugraph, dag}, then m lines "<u> <v>" (0-based; u->v for dag).
std::variant<Graph, Dag> parse_graph_file(const std::string& text);
std::string write_graph_file(const Graph& g);
std::string write_graph_file(const Dag& g);

}  // namespace laygap

#endif
