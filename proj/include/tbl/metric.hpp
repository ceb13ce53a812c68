#pragma once

#include <limits>
#include <span>
#include <vector>

#include "tbl/graph.hpp"
#include "tbl/matrix.hpp"

namespace tbl {

inline constexpr double kMetricTol = 1e-12;

// Unreachable pairs carry this sentinel; no finite stand-in is ever used.
inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

// k-point metric space given by its distance matrix. Construction checks
// the metric axioms to kMetricTol. Infinite entries are allowed (they arise
// from disconnected graphs) and flag the space as non-finite; operations
// that need a genuine metric reject non-finite inputs explicitly.
class FiniteMetric {
public:
    static FiniteMetric from_matrix(const Matrix& dist);
    static FiniteMetric singleton();

    int size() const { return k_; }
    double dist(int i, int j) const { return d_[static_cast<std::size_t>(i) * k_ + j]; }
    bool is_finite() const { return finite_; }

    // Max entry; kUnreachable when the space is disconnected.
    double diameter() const;
    // Min off-diagonal entry; meaningless for k = 1 (returns kUnreachable).
    double min_distance() const;

    std::vector<double> distinct_distances() const;  // finite off-diagonal values, sorted

private:
    FiniteMetric() = default;

    int k_ = 0;
    std::vector<double> d_;
    bool finite_ = true;
};

// Unweighted shortest-path (BFS) distances. Disconnected graphs yield
// kUnreachable entries and a non-finite result rather than an error.
FiniteMetric shortest_path_metric(const Graph& g);

double diameter(const FiniteMetric& m);

// Metric on pairs (point, label): dist'(i,j) = max(base(i,j), |label_i - label_j|).
FiniteMetric product_metric(const FiniteMetric& base, std::span<const double> labels);

}  // namespace tbl
