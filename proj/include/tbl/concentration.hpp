#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tbl/measure.hpp"
#include "tbl/metric.hpp"

namespace tbl {

// Rates governing how fast an empirical measure approaches its source in the
// 1/2-Hoelder Wasserstein distance on a k-point space of the given diameter:
//   r1 = log2(n) / sqrt(n)
//   r2 = k * diam^{1/2} / sqrt(n)
//   r3 = n^{-1/ceil(4 M^{5+log2 5})}      (M = doubling constant)
//   t_dev = sqrt(3 log2(2/delta) diam) / sqrt(n)
struct RateBundle {
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;
    double t_dev = 0.0;
    int n = 0;
    int k = 0;
    double diam = 0.0;
    double delta = 0.0;
    int doubling_M = 0;
    long long r3_exponent_den = 0;  // ceil(4 M^{5+log2 5})
};

RateBundle concentration_rates(int k, int n, double diam, double delta, int doubling_M);

// Rate/constant rows for the empirical-measure concentration bound
// E[W_alpha] <= C * diam * rate(n) on m-dimensional sup-norm spaces; the
// three regimes split on m vs 2*alpha.
struct WassersteinRate {
    int m = 0;
    double alpha = 0.0;
    std::string regime;           // "m<2a", "m=2a", "m>2a"
    double constant = 0.0;
    std::string rate_descriptor;  // human-readable form of rate(n)

    double rate(int n) const;
};

WassersteinRate wasserstein_rate(int m, double alpha);

// E[W_{1/2}(mu, mu^n)] <= diam^{1/2} * min(2 r1, 24 r2).
double mean_wasserstein_bound(int k, int n, double diam);

// (1-delta)-confidence bound on |W_{1/2} - E[W_{1/2}]|:
// diam^{1/2} * min(r1, 24 r2, r3) + t_dev.
double deviation_wasserstein_bound(int k, int n, double diam, double delta, int doubling_M);

struct ConcentrationRow {
    int n = 0;
    double mean_w = 0.0;
    double std_w = 0.0;
    double quantile_dev = 0.0;  // empirical (1-delta) quantile of |W - mean|
    double bound_mean = 0.0;
    double bound_dev = 0.0;
    bool pass = false;
};

// Seeded Monte Carlo estimate of E[W_{1/2}(base, empirical_n)] for each n,
// reported next to the analytic bounds. Requires min distance >= 1. Trials
// use per-(n, trial) substreams, so results are independent of execution
// order and thread count.
std::vector<ConcentrationRow> run_concentration_experiment(const FiniteMetric& metric,
                                                           const DiscreteMeasure& base,
                                                           std::span<const int> n_values,
                                                           int trials, std::uint64_t seed,
                                                           double delta, int doubling_M);

std::string concentration_csv(const std::vector<ConcentrationRow>& rows);

}  // namespace tbl
