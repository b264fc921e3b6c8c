#include "laygap/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace laygap {

ProblemFamily family_of(Problem p) {
    switch (p) {
        case Problem::Cutwidth:
        case Problem::EdgeBis:
            return ProblemFamily::Edge;
        case Problem::VertSep:
        case Problem::VertBis:
            return ProblemFamily::Vertex;
    }
    throw std::logic_error("unreachable");
}

void validate_parameters(ProblemFamily family, const BoundParameters& params) {
    if (!(params.delta > 0.0 && params.delta < 1.0))
        throw std::invalid_argument("delta must be in (0,1)");
    if (!(params.epsilon > 0.0 && params.epsilon < 1.0))
        throw std::invalid_argument("epsilon must be in (0,1)");
    if (family == ProblemFamily::Edge) {
        if (!(params.c >= 0.0 && params.c < params.l && params.l < 0.5))
            throw std::invalid_argument("edge family requires 0 <= c < l < 1/2");
    } else {
        if (!(params.s > 0.0 && params.s < 1.0 - params.c))
            throw std::invalid_argument("vertex family requires 0 < s < 1-c");
        if (!(params.l > 0.0 && params.l < params.s / 2.0))
            throw std::invalid_argument("vertex family requires 0 < l < s/2");
    }
}

BoundParameters choose_parameters(ProblemFamily family, double c) {
    BoundParameters params;
    params.c = c;
    if (family == ProblemFamily::Edge) {
        if (!(c >= 0.0 && c < 0.5))
            throw std::invalid_argument("edge family requires c in [0, 1/2)");
        params.l = (c + 0.5) / 2.0;
    } else {
        if (!(c >= 0.0 && c < 1.0))
            throw std::invalid_argument("vertex family requires c in [0, 1)");
        params.s = (1.0 - c) / 2.0;
        params.l = params.s / 4.0;
    }
    return params;
}

double hoeffding_tail(int n, double eps) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    return std::exp(-2.0 * eps * eps * static_cast<double>(n));
}

double log_binom(int n, int k) {
    if (k < 0 || k > n) throw std::out_of_range("k outside [0,n]");
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double asymptotic_log_binom(int n, int k) {
    if (k < 1 || k >= n) throw std::out_of_range("asymptotic form requires 1 <= k < n");
    return k * std::log(static_cast<double>(n) / k);
}

double central_binom_log(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    return n * std::log(2.0) - 0.5 * std::log(M_PI * n / 2.0);
}

double central_binom_estimate(int n) {
    return std::exp(central_binom_log(n));
}

double q_estimate(double p, double t) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0,1]");
    if (t < 0.0) throw std::invalid_argument("t must be nonnegative");
    if (t == 0.0) return 0.0;
    if (p == 1.0) return 1.0;
    return -std::expm1(t * std::log1p(-p));
}

double log_failure_bound_edge(int n, double p, double l) {
    if (!(l > 0.0 && l < 0.5)) throw std::invalid_argument("l must be in (0, 1/2)");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0,1]");
    if (n < 1) throw std::invalid_argument("n must be positive");
    double nn = static_cast<double>(n);
    return nn * std::log(2.0) - (nn * nn - 1.0) * std::pow(nn, -2.0 * l) / 2.0;
}

double failure_bound_edge(int n, double p, double l) {
    return std::exp(log_failure_bound_edge(n, p, l));
}

double log_failure_bound_vertexsep(int n, const BoundParameters& params) {
    validate_parameters(ProblemFamily::Vertex, params);
    if (n < 1) throw std::invalid_argument("n must be positive");
    double nn = static_cast<double>(n);
    int k = static_cast<int>(std::ceil(std::pow(nn, 1.0 - params.s)));
    if (k > n) k = n;
    double m = std::floor((1.0 - std::pow(nn, -params.s)) * nn);
    return log_binom(n, k) - 2.0 * std::pow(nn, -2.0 * params.l) * m;
}

double failure_bound_vertexsep(int n, const BoundParameters& params) {
    return std::exp(log_failure_bound_vertexsep(n, params));
}

PredictedBand predicted_band(Problem kind, int n, double p, const BoundParameters& params) {
    ProblemFamily family = family_of(kind);
    validate_parameters(family, params);
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0,1]");

    PredictedBand band;
    band.kind = kind;
    band.n = n;
    band.p = p;
    double nn = static_cast<double>(n);
    switch (kind) {
        case Problem::Cutwidth:
        case Problem::EdgeBis:
            band.lower_min = nn * nn * p * (1.0 - params.delta) / 4.0;
            band.upper_max = nn * nn * p * (1.0 + params.delta) / 4.0;
            band.failure_bound = failure_bound_edge(n, p, params.l);
            break;
        case Problem::VertSep:
            band.lower_min = (1.0 - params.delta) * nn - 1.0;
            band.upper_max = nn - 1.0;
            band.failure_bound = failure_bound_vertexsep(n, params);
            break;
        case Problem::VertBis:
            band.lower_min = (1.0 - params.delta) * std::floor(nn / 2.0);
            band.upper_max = std::floor(nn / 2.0);
            // union bound over the C(n, floor(n/2)) possible left halves
            band.failure_bound =
                std::exp(log_binom(n, n / 2) - params.delta * params.delta * nn);
            break;
    }
    return band;
}

}  // namespace laygap
