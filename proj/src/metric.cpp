#include "tbl/metric.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "tbl/errors.hpp"

namespace tbl {

FiniteMetric FiniteMetric::from_matrix(const Matrix& dist) {
    const int k = dist.rows();
    if (k < 1 || dist.cols() != k)
        throw DomainError(errc::shape_mismatch, "distance matrix must be square, k >= 1");

    FiniteMetric m;
    m.k_ = k;
    m.d_.resize(static_cast<std::size_t>(k) * k);
    m.finite_ = true;

    for (int i = 0; i < k; ++i) {
        if (dist(i, i) != 0.0)
            throw DomainError(errc::invalid_graph, "nonzero diagonal in distance matrix");
        for (int j = 0; j < k; ++j) {
            const double v = dist(i, j);
            if (std::isnan(v) || v < 0.0)
                throw DomainError(errc::invalid_graph, "negative or NaN distance");
            if (i != j && v == 0.0)
                throw DomainError(errc::invalid_graph, "zero off-diagonal distance");
            if (std::abs(v - dist(j, i)) > kMetricTol && !(std::isinf(v) && std::isinf(dist(j, i))))
                throw DomainError(errc::invalid_graph, "asymmetric distance matrix");
            if (std::isinf(v)) m.finite_ = false;
            m.d_[static_cast<std::size_t>(i) * k + j] = v;
        }
    }
    // Triangle inequality; infinite entries are consistent whenever at least
    // one leg of every detour is also infinite.
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l) {
                const double lhs = m.dist(i, j);
                const double rhs = m.dist(i, l) + m.dist(l, j);
                if (std::isinf(lhs) && std::isinf(rhs)) continue;
                if (lhs > rhs + kMetricTol)
                    throw DomainError(errc::invalid_graph, "triangle inequality violated");
            }
    return m;
}

FiniteMetric FiniteMetric::singleton() {
    FiniteMetric m;
    m.k_ = 1;
    m.d_.assign(1, 0.0);
    m.finite_ = true;
    return m;
}

double FiniteMetric::diameter() const {
    double d = 0.0;
    for (double v : d_) {
        if (std::isinf(v)) return kUnreachable;
        d = std::max(d, v);
    }
    return d;
}

double FiniteMetric::min_distance() const {
    double d = kUnreachable;
    for (int i = 0; i < k_; ++i)
        for (int j = i + 1; j < k_; ++j) d = std::min(d, dist(i, j));
    return d;
}

std::vector<double> FiniteMetric::distinct_distances() const {
    std::vector<double> values;
    for (int i = 0; i < k_; ++i)
        for (int j = i + 1; j < k_; ++j)
            if (!std::isinf(dist(i, j))) values.push_back(dist(i, j));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

FiniteMetric shortest_path_metric(const Graph& g) {
    const int k = g.vertex_count();
    Matrix dist(k, k, kUnreachable);
    std::vector<int> hop(k);
    for (int src = 0; src < k; ++src) {
        std::fill(hop.begin(), hop.end(), -1);
        std::queue<int> q;
        q.push(src);
        hop[src] = 0;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int w : g.adjacency()[u]) {
                if (hop[w] < 0) {
                    hop[w] = hop[u] + 1;
                    q.push(w);
                }
            }
        }
        for (int j = 0; j < k; ++j)
            dist(src, j) = hop[j] >= 0 ? static_cast<double>(hop[j]) : kUnreachable;
    }
    return FiniteMetric::from_matrix(dist);
}

double diameter(const FiniteMetric& m) { return m.diameter(); }

FiniteMetric product_metric(const FiniteMetric& base, std::span<const double> labels) {
    if (static_cast<int>(labels.size()) != base.size())
        throw DomainError(errc::shape_mismatch, "one label per point required");
    const int k = base.size();
    Matrix dist(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            dist(i, j) = i == j ? 0.0 : std::max(base.dist(i, j), std::abs(labels[i] - labels[j]));
    return FiniteMetric::from_matrix(dist);
}

}  // namespace tbl
