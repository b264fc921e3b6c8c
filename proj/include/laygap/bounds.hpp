#ifndef laygap_bounds_hpp
#define laygap_bounds_hpp

#include "laygap/measures.hpp"

namespace laygap {

enum class ProblemFamily { Edge, Vertex };

ProblemFamily family_of(Problem p);

// Exponent parameters of the concentration bounds. Edge problems use c and l
// with 0 <= c < l < 1/2; vertex problems use c, s, l with 0 < s < 1-c and
// 0 < l < s/2. delta is the band half-width, epsilon the failure budget.
struct BoundParameters {
    double c = 0.0;
    double l = 0.25;
    double s = 0.5;
    double delta = 0.5;
    double epsilon = 0.1;
};

void validate_parameters(ProblemFamily family, const BoundParameters& params);

// Midpoints of the admissible parameter intervals: edge l = (c + 1/2)/2;
// vertex s = (1-c)/2, l = s/4.
BoundParameters choose_parameters(ProblemFamily family, double c);

// exp(-2 eps^2 n), the two-sided Hoeffding tail for n Bernoulli trials.
double hoeffding_tail(int n, double eps);

// ln C(n,k) via lgamma; asymptotic form k ln(n/k) needs 1 <= k < n.
double log_binom(int n, int k);
double asymptotic_log_binom(int n, int k);

// Stirling estimate of C(n, floor(n/2)): 2^n / sqrt(pi n / 2).
double central_binom_log(int n);
double central_binom_estimate(int n);

// 1 - (1-p)^t evaluated without cancellation for small p*t.
double q_estimate(double p, double t);

// Union-bound failure probabilities, evaluated in log space. Linear values
// may exceed 1 (vacuous) and are reported as-is.
double log_failure_bound_edge(int n, double p, double l);
double failure_bound_edge(int n, double p, double l);
double log_failure_bound_vertexsep(int n, const BoundParameters& params);
double failure_bound_vertexsep(int n, const BoundParameters& params);

// Predicted [lower bound on MIN, upper bound on MAX] for one problem at one
// (n, p), plus the union-bound failure probability.
struct PredictedBand {
    Problem kind = Problem::Cutwidth;
    int n = 0;
    double p = 0.0;
    double lower_min = 0.0;
    double upper_max = 0.0;
    double failure_bound = 0.0;
};

// Edge problems: n^2 p (1 -/+ delta) / 4. Vertex separation: (1-delta)n - 1
// with cap n-1. Vertex bisection: (1-delta) floor(n/2) with cap floor(n/2).
// Directed problems use the same bands.
PredictedBand predicted_band(Problem kind, int n, double p, const BoundParameters& params);

}  // namespace laygap

#endif
