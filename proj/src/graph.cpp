#include "laygap/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace laygap {

namespace {

void check_endpoint(Vertex v, int n) {
    if (v < 0 || v >= n)
        throw std::out_of_range("vertex index " + std::to_string(v) +
                                " out of range for n=" + std::to_string(n));
}

}  // namespace

VertexSet full_set(int n) {
    if (n < 0 || n > VertexSet::max_universe)
        throw std::out_of_range("vertex set universe must be in [0,64]");
    VertexSet s;
    s.bits = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return s;
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        check_endpoint(u, n);
        check_endpoint(v, n);
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adj_.resize(n);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    if (n <= 64) {
        adj_mask_.assign(n, 0);
        for (auto [u, v] : edges_) {
            adj_mask_[u] |= std::uint64_t{1} << v;
            adj_mask_[v] |= std::uint64_t{1} << u;
        }
    }
}

std::uint64_t Graph::adj_mask(Vertex v) const {
    if (adj_mask_.empty())
        throw std::logic_error("adjacency masks unavailable for n > 64");
    return adj_mask_[static_cast<std::size_t>(v)];
}

Dag::Dag(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("dag needs at least one vertex");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        check_endpoint(u, n);
        check_endpoint(v, n);
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    out_.resize(n);
    in_.resize(n);
    for (auto [u, v] : edges_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }

    // Kahn's algorithm; leftover vertices witness a cycle.
    std::vector<int> indeg(n, 0);
    for (auto [u, v] : edges_) {
        (void)u;
        ++indeg[v];
    }
    std::vector<Vertex> stack;
    for (Vertex v = 0; v < n; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    int placed = 0;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        ++placed;
        for (Vertex w : out_[v])
            if (--indeg[w] == 0) stack.push_back(w);
    }
    if (placed < n) {
        for (auto [u, v] : edges_) {
            if (indeg[v] > 0 && indeg[u] > 0)
                throw std::invalid_argument("cycle detected through edge " +
                                            std::to_string(u) + "->" + std::to_string(v));
        }
        throw std::invalid_argument("cycle detected");
    }

    if (n <= 64) {
        succ_mask_.assign(n, 0);
        pred_mask_.assign(n, 0);
        for (auto [u, v] : edges_) {
            succ_mask_[u] |= std::uint64_t{1} << v;
            pred_mask_[v] |= std::uint64_t{1} << u;
        }
    }
}

std::uint64_t Dag::succ_mask(Vertex v) const {
    if (succ_mask_.empty())
        throw std::logic_error("adjacency masks unavailable for n > 64");
    return succ_mask_[static_cast<std::size_t>(v)];
}

std::uint64_t Dag::pred_mask(Vertex v) const {
    if (pred_mask_.empty())
        throw std::logic_error("adjacency masks unavailable for n > 64");
    return pred_mask_[static_cast<std::size_t>(v)];
}

namespace {

bool is_permutation_of_range(int n, const Layout& layout) {
    std::vector<char> seen(n, 0);
    for (Vertex v : layout) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

}  // namespace

bool is_valid_layout(const Graph& g, const Layout& layout) {
    if (static_cast<int>(layout.size()) != g.vertex_count())
        throw std::invalid_argument("layout length does not match vertex count");
    return is_permutation_of_range(g.vertex_count(), layout);
}

bool is_valid_layout(const Dag& g, const Layout& layout) {
    int n = g.vertex_count();
    if (static_cast<int>(layout.size()) != n)
        throw std::invalid_argument("layout length does not match vertex count");
    if (!is_permutation_of_range(n, layout)) return false;
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[layout[i]] = i;
    for (auto [u, v] : g.edges())
        if (pos[u] >= pos[v]) return false;
    return true;
}

bool is_downset(const Dag& d, const VertexSet& s) {
    int n = d.vertex_count();
    if (n > VertexSet::max_universe)
        throw std::out_of_range("downset queries require n <= 64");
    std::uint64_t bits = s.bits;
    while (bits) {
        Vertex v = __builtin_ctzll(bits);
        bits &= bits - 1;
        if (v >= n) throw std::out_of_range("set member outside universe");
        if (d.pred_mask(v) & ~s.bits) return false;
    }
    return true;
}

std::vector<VertexSet> enumerate_downsets(const Dag& d, std::optional<int> size_filter) {
    int n = d.vertex_count();
    if (n > 26)
        throw std::out_of_range("downset enumeration limited to n <= 26");
    if (size_filter && (*size_filter < 0 || *size_filter > n))
        throw std::out_of_range("size filter outside [0,n]");

    std::vector<std::uint64_t> layer{0};
    std::vector<VertexSet> result;
    auto emit_layer = [&](const std::vector<std::uint64_t>& l) {
        for (std::uint64_t bits : l) result.push_back(VertexSet{bits});
    };
    if (!size_filter || *size_filter == 0) emit_layer(layer);

    for (int k = 1; k <= n; ++k) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t s : layer) {
            for (Vertex v = 0; v < n; ++v) {
                std::uint64_t bit = std::uint64_t{1} << v;
                if (s & bit) continue;
                if (d.pred_mask(v) & ~s) continue;  // v not a source of the rest
                next.push_back(s | bit);
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        layer = std::move(next);
        if (!size_filter || *size_filter == k) emit_layer(layer);
        if (size_filter && *size_filter == k) break;
    }
    return result;
}

Layout layout_with_prefix(const Dag& d, const VertexSet& s) {
    if (!is_downset(d, s))
        throw std::invalid_argument("prefix set is not a downset");
    int n = d.vertex_count();
    Layout order;
    order.reserve(n);
    std::uint64_t placed = 0;
    auto extend = [&](std::uint64_t pool) {
        while (pool & ~placed) {
            for (Vertex v = 0; v < n; ++v) {
                std::uint64_t bit = std::uint64_t{1} << v;
                if (!(pool & bit) || (placed & bit)) continue;
                if (d.pred_mask(v) & ~placed) continue;
                order.push_back(v);
                placed |= bit;
                break;
            }
        }
    };
    extend(s.bits);
    extend(full_set(n).bits);
    return order;
}

Layout canonical_topological_order(const Dag& d) {
    return layout_with_prefix(d, VertexSet{});
}

namespace {

struct ParsedHeader {
    std::string kind;
    int n = 0;
    int m = 0;
};

std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

std::variant<Graph, Dag> parse_graph_file(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw std::invalid_argument("empty graph file");

    ParsedHeader h;
    {
        std::istringstream hs(lines[0]);
        if (!(hs >> h.kind >> h.n >> h.m))
            throw std::invalid_argument("malformed header: '" + lines[0] + "'");
        std::string extra;
        if (hs >> extra)
            throw std::invalid_argument("trailing tokens in header: '" + lines[0] + "'");
    }
    if (h.kind != "ugraph" && h.kind != "dag")
        throw std::invalid_argument("unknown graph kind '" + h.kind + "'");
    if (h.n < 1 || h.m < 0)
        throw std::invalid_argument("invalid header counts");
    if (static_cast<int>(lines.size()) != 1 + h.m)
        throw std::invalid_argument("expected " + std::to_string(h.m) + " edge lines, got " +
                                    std::to_string(lines.size() - 1));

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(h.m);
    for (int i = 0; i < h.m; ++i) {
        std::istringstream es(lines[1 + i]);
        Vertex u, v;
        std::string extra;
        if (!(es >> u >> v) || (es >> extra))
            throw std::invalid_argument("malformed edge line: '" + lines[1 + i] + "'");
        edges.emplace_back(u, v);
    }
    if (h.kind == "ugraph") return Graph(h.n, edges);
    return Dag(h.n, edges);
}

namespace {

std::string write_edges(const std::string& kind, int n,
                        const std::vector<std::pair<Vertex, Vertex>>& edges) {
    std::ostringstream out;
    out << kind << ' ' << n << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace

std::string write_graph_file(const Graph& g) {
    return write_edges("ugraph", g.vertex_count(), g.edges());
}

std::string write_graph_file(const Dag& g) {
    return write_edges("dag", g.vertex_count(), g.edges());
}

}  // namespace laygap
