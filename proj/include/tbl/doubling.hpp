#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tbl/graph.hpp"
#include "tbl/measure.hpp"
#include "tbl/metric.hpp"

namespace tbl {

// Doubling constant of a finite metric space, read as the max over centers x
// and radii r of the minimum number of closed r/2-balls (centered at points
// of the space) needed to cover B(x, r). exact_M is absent when some ball
// exceeded exact_limit points and only the greedy upper bound is known.
struct DoublingReport {
    std::optional<int> exact_M;
    int greedy_M = 1;
    std::optional<int> bound_degree;          // deg_max + 1            (diam <= 2 only)
    std::optional<double> bound_spectral;     // (1 + rho)^4            (diam <= 2 only)
    std::optional<double> bound_edge_count;   // 8(1 + 2k_E - ...)^2    (diam <= 2, valid radicand)
    std::vector<double> radii_examined;
};

// Covering-number search over the finite candidate radius set. Cover
// subproblems with at most exact_limit ball elements are solved exactly by
// branch-and-bound seeded with the greedy incumbent; larger ones fall back
// to greedy and mark the result upper-only.
DoublingReport exact_doubling_constant(const FiniteMetric& m, int exact_limit = 18);

// deg_max + 1; valid for non-singleton graphs with diameter at most 2.
int degree_doubling_bound(const Graph& g);

// first: (1 + rho)^4; second: 8(1 + 2k_E - (k-1)deg_max + (deg_max-1)deg_min)^2,
// absent when the underlying radius bound's radicand is negative.
std::pair<double, std::optional<double>> spectral_doubling_bound(const Graph& g);

struct LeastMeasureDoublingBound {
    std::optional<int> exact_value;  // #V when diam = 1
    double upper_bound = 0.0;        // 1 + rho in both diam-1 and diam-2 cases
};

LeastMeasureDoublingBound least_measure_doubling_bound(const Graph& g);

// sup over centers and radii of mu(B(v, 2r)) / mu(B(v, r)); requires a fully
// supported measure on a finite metric.
double measure_doubling_constant(const FiniteMetric& m, const DiscreteMeasure& mu);

// Assembles the full report for a graph: covering search plus whichever
// upper bounds apply at its diameter.
DoublingReport graph_doubling_report(const Graph& g, int exact_limit = 18);

}  // namespace tbl
