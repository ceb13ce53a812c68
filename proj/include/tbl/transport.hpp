#pragma once

#include <span>
#include <vector>

#include "tbl/matrix.hpp"
#include "tbl/measure.hpp"
#include "tbl/metric.hpp"

namespace tbl {

struct TransportResult {
    double value = 0.0;              // optimal transport cost under dist^alpha
    Matrix plan;                     // k x k, row marginals mu, column marginals nu
    std::vector<double> potential;   // f on all k points, |f_i - f_j| <= dist_ij^alpha
    double dual_value = 0.0;         // sum_i f_i (mu_i - nu_i); matches value to 1e-8
};

// Exact Hoelder Wasserstein distance on a finite metric space: solves the
// transportation problem with cost dist^alpha by network simplex (Bland's
// anti-cycling rule) and returns the optimal plan together with a feasible
// dual potential certifying optimality. Zero-weight support points are
// dropped before the solve and reinserted with zero mass in the plan; ties
// among optimal plans follow the solver's deterministic pivot order, so only
// the value and the certificate are contractual.
TransportResult wasserstein(const FiniteMetric& metric, const DiscreteMeasure& mu,
                            const DiscreteMeasure& nu, double alpha);

// Dual objective for a caller-supplied potential. Throws InfeasibleDual when
// f violates the Hoelder constraint |f_i - f_j| <= dist_ij^alpha beyond 1e-9.
double wasserstein_dual_value(const FiniteMetric& metric, const DiscreteMeasure& mu,
                              const DiscreteMeasure& nu, double alpha,
                              std::span<const double> f);

}  // namespace tbl
