#include "laygap/sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace laygap {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    return mix64(mix64(master ^ mix64(a)) ^ mix64(b));
}

std::uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double Rng::next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    // modulo; bias is negligible for the bounds used here (< 2^32)
    return next() % bound;
}

double schedule_p(const SparsitySchedule& sched, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    double p = sched.K * std::pow(static_cast<double>(n), -sched.c);
    return std::min(1.0, p);
}

namespace {

void check_p(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability must be in [0,1]");
}

std::vector<std::pair<Vertex, Vertex>> sample_pairs(int n, double p, std::uint64_t seed) {
    check_p(p);
    if (n < 1) throw std::invalid_argument("n must be positive");
    Rng rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (rng.next_double() < p) edges.emplace_back(i, j);
    return edges;
}

}  // namespace

Graph sample_gnp(int n, double p, std::uint64_t seed) {
    return Graph(n, sample_pairs(n, p, seed));
}

Dag sample_dnp(int n, double p, std::uint64_t seed) {
    return Dag(n, sample_pairs(n, p, seed));
}

Layout random_layout(int n, Rng& rng) {
    Layout order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(order[i], order[j]);
    }
    return order;
}

Layout random_topological_layout(const Dag& d, Rng& rng) {
    int n = d.vertex_count();
    std::vector<int> indeg(n, 0);
    for (auto [u, v] : d.edges()) {
        (void)u;
        ++indeg[v];
    }
    std::vector<Vertex> avail;
    for (Vertex v = 0; v < n; ++v)
        if (indeg[v] == 0) avail.push_back(v);
    Layout order;
    order.reserve(n);
    while (!avail.empty()) {
        std::size_t k = rng.next_below(avail.size());
        Vertex v = avail[k];
        avail[k] = avail.back();
        avail.pop_back();
        order.push_back(v);
        for (Vertex w : d.out_neighbors(v))
            if (--indeg[w] == 0) avail.push_back(w);
    }
    return order;
}

}  // namespace laygap
