#ifndef laygap_sampler_hpp
#define laygap_sampler_hpp

#include <cstdint>

#include "laygap/graph.hpp"

namespace laygap {

// splitmix64 finalizer; used both as the sampler RNG step and as the seed
// mixing function, so results are identical across platforms.
std::uint64_t mix64(std::uint64_t x);

// Deterministic per-task seeds: mixing master with two labels (e.g. n and
// trial index) makes trials independent of execution order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b);

// splitmix64 stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    double next_double();  // uniform in [0,1), 53-bit
    // uniform in [0, bound); bound > 0
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

// p_n = min(1, K * n^{-c}).
struct SparsitySchedule {
    double K = 1.0;
    double c = 0.0;
};

double schedule_p(const SparsitySchedule& sched, int n);

// G(n,p): each of the C(n,2) unordered pairs included independently with
// probability p. Pairs (i,j), i<j, are enumerated in ascending lexicographic
// order with one uniform draw each.
Graph sample_gnp(int n, double p, std::uint64_t seed);

// D(n,p): the same pair stream as sample_gnp, every kept edge oriented from
// the smaller to the larger label. Acyclic by construction.
Dag sample_dnp(int n, double p, std::uint64_t seed);

// Uniformly random permutation of 0..n-1 (Fisher-Yates).
Layout random_layout(int n, Rng& rng);

// Random topological order obtained by repeatedly picking a uniformly random
// available source. Full support over linear extensions but not uniform.
Layout random_topological_layout(const Dag& d, Rng& rng);

}  // namespace laygap

#endif
