#include "tbl/transport.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "tbl/errors.hpp"

namespace tbl {

namespace {

// Transportation simplex on the complete bipartite graph of the reduced
// supports. Basis cells always form a spanning tree; entering arcs follow
// Bland's rule (first negative reduced cost in row-major order) and the
// leaving arc is the lexicographically smallest minimizer, which prevents
// cycling on degenerate pivots.
class TransportSimplex {
public:
    TransportSimplex(std::vector<double> supply, std::vector<double> demand,
                     std::vector<double> cost)
        : m_(static_cast<int>(supply.size())),
          n_(static_cast<int>(demand.size())),
          supply_(std::move(supply)),
          demand_(std::move(demand)),
          cost_(std::move(cost)),
          x_(static_cast<std::size_t>(m_) * n_, 0.0),
          basic_(static_cast<std::size_t>(m_) * n_, 0),
          u_(m_, 0.0),
          v_(n_, 0.0) {
        double scale = 1.0;
        for (double c : cost_) scale = std::max(scale, std::abs(c));
        tol_ = 1e-12 * scale;
    }

    void solve() {
        northwest_corner();
        const long long pivot_cap = 1000LL * (m_ + n_) * (m_ + n_) + 100000;
        for (long long pivots = 0;; ++pivots) {
            if (pivots > pivot_cap) throw NumericError("transport simplex exceeded pivot cap");
            compute_potentials();
            int ei = -1, ej = -1;
            for (int i = 0; i < m_ && ei < 0; ++i)
                for (int j = 0; j < n_; ++j) {
                    if (basic_[idx(i, j)]) continue;
                    if (cost_[idx(i, j)] - u_[i] - v_[j] < -tol_) {
                        ei = i;
                        ej = j;
                        break;
                    }
                }
            if (ei < 0) return;
            pivot(ei, ej);
        }
    }

    double objective() const {
        double total = 0.0;
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < n_; ++j) total += x_[idx(i, j)] * cost_[idx(i, j)];
        return total;
    }

    double plan(int i, int j) const { return x_[idx(i, j)]; }
    const std::vector<double>& col_potentials() const { return v_; }

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

    void northwest_corner() {
        std::vector<double> s = supply_, d = demand_;
        int i = 0, j = 0;
        for (;;) {
            const double q = std::max(0.0, std::min(s[i], d[j]));
            x_[idx(i, j)] = q;
            basic_[idx(i, j)] = 1;
            s[i] -= q;
            d[j] -= q;
            if (i == m_ - 1 && j == n_ - 1) break;
            if (j == n_ - 1) {
                ++i;
            } else if (i == m_ - 1) {
                ++j;
            } else if (s[i] < d[j]) {
                ++i;
            } else {
                ++j;
            }
        }
    }

    void compute_potentials() {
        // Solve u_i + v_j = c_ij over the basis tree, rooted at row 0.
        std::vector<std::vector<int>> row_cols(m_), col_rows(n_);
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < n_; ++j)
                if (basic_[idx(i, j)]) {
                    row_cols[i].push_back(j);
                    col_rows[j].push_back(i);
                }
        std::vector<char> row_done(m_, 0), col_done(n_, 0);
        std::queue<int> q;  // node id: rows 0..m-1, cols m..m+n-1
        u_[0] = 0.0;
        row_done[0] = 1;
        q.push(0);
        int settled = 1;
        while (!q.empty()) {
            const int node = q.front();
            q.pop();
            if (node < m_) {
                for (int j : row_cols[node])
                    if (!col_done[j]) {
                        v_[j] = cost_[idx(node, j)] - u_[node];
                        col_done[j] = 1;
                        ++settled;
                        q.push(m_ + j);
                    }
            } else {
                const int j = node - m_;
                for (int i : col_rows[j])
                    if (!row_done[i]) {
                        u_[i] = cost_[idx(i, j)] - v_[j];
                        row_done[i] = 1;
                        ++settled;
                        q.push(i);
                    }
            }
        }
        if (settled != m_ + n_) throw NumericError("transport basis is not a spanning tree");
    }

    void pivot(int ei, int ej) {
        // Unique tree path from row ei to column ej; closing it with the
        // entering cell forms the pivot cycle.
        const int nodes = m_ + n_;
        std::vector<int> parent(nodes, -2);
        std::queue<int> q;
        parent[ei] = -1;
        q.push(ei);
        while (!q.empty() && parent[m_ + ej] == -2) {
            const int node = q.front();
            q.pop();
            if (node < m_) {
                for (int j = 0; j < n_; ++j)
                    if (basic_[idx(node, j)] && parent[m_ + j] == -2) {
                        parent[m_ + j] = node;
                        q.push(m_ + j);
                    }
            } else {
                const int j = node - m_;
                for (int i = 0; i < m_; ++i)
                    if (basic_[idx(i, j)] && parent[i] == -2) {
                        parent[i] = m_ + j;
                        q.push(i);
                    }
            }
        }
        if (parent[m_ + ej] == -2) throw NumericError("transport basis lost connectivity");

        std::vector<std::pair<int, int>> cycle;  // alternating +,-,+,... cells
        cycle.emplace_back(ei, ej);
        int node = m_ + ej;
        while (parent[node] != -1) {
            const int par = parent[node];
            if (node >= m_)
                cycle.emplace_back(par, node - m_);
            else
                cycle.emplace_back(node, par - m_);
            node = par;
        }

        double theta = std::numeric_limits<double>::infinity();
        std::size_t leave = 0;
        for (std::size_t c = 1; c < cycle.size(); c += 2) {
            const double amount = x_[idx(cycle[c].first, cycle[c].second)];
            if (amount < theta - 1e-15 ||
                (std::abs(amount - theta) <= 1e-15 &&
                 (leave == 0 || cycle[c] < cycle[leave]))) {
                theta = amount;
                leave = c;
            }
        }
        for (std::size_t c = 0; c < cycle.size(); ++c) {
            double& cell = x_[idx(cycle[c].first, cycle[c].second)];
            cell += (c % 2 == 0) ? theta : -theta;
            if (cell < 0.0) cell = 0.0;
        }
        basic_[idx(cycle[leave].first, cycle[leave].second)] = 0;
        basic_[idx(ei, ej)] = 1;
    }

    int m_, n_;
    std::vector<double> supply_, demand_, cost_;
    std::vector<double> x_;
    std::vector<char> basic_;
    std::vector<double> u_, v_;
    double tol_;
};

void check_inputs(const FiniteMetric& metric, const DiscreteMeasure& mu,
                  const DiscreteMeasure& nu, double alpha) {
    if (mu.size() != metric.size() || nu.size() != metric.size())
        throw DomainError(errc::marginal_mismatch, "measures must live on the metric's points");
    if (!metric.is_finite())
        throw DomainError(errc::non_finite_metric, "transport needs finite distances");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError(errc::bad_alpha, "alpha must lie in (0, 1]");
}

}  // namespace

TransportResult wasserstein(const FiniteMetric& metric, const DiscreteMeasure& mu,
                            const DiscreteMeasure& nu, double alpha) {
    check_inputs(metric, mu, nu, alpha);
    const int k = metric.size();

    std::vector<int> sources, sinks;
    for (int i = 0; i < k; ++i) {
        if (mu.weight(i) > 0.0) sources.push_back(i);
        if (nu.weight(i) > 0.0) sinks.push_back(i);
    }
    const int m = static_cast<int>(sources.size());
    const int n = static_cast<int>(sinks.size());

    std::vector<double> supply(m), demand(n);
    double supply_total = 0.0, demand_total = 0.0;
    for (int i = 0; i < m; ++i) supply_total += mu.weight(sources[i]);
    for (int j = 0; j < n; ++j) demand_total += nu.weight(sinks[j]);
    for (int i = 0; i < m; ++i) supply[i] = mu.weight(sources[i]) / supply_total;
    for (int j = 0; j < n; ++j) demand[j] = nu.weight(sinks[j]) / demand_total;

    std::vector<double> cost(static_cast<std::size_t>(m) * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            cost[static_cast<std::size_t>(i) * n + j] =
                std::pow(metric.dist(sources[i], sinks[j]), alpha);

    TransportSimplex simplex(supply, demand, cost);
    simplex.solve();

    TransportResult result;
    result.value = simplex.objective();
    result.plan = Matrix(k, k);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) result.plan(sources[i], sinks[j]) = simplex.plan(i, j);

    // Kantorovich potential on the whole space by c-transform of the column
    // potentials; it is 1-Lipschitz for the cost metric dist^alpha because
    // each term x -> dist(x, sink)^alpha is.
    result.potential.assign(k, 0.0);
    const auto& v = simplex.col_potentials();
    for (int x = 0; x < k; ++x) {
        double best = std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j)
            best = std::min(best, std::pow(metric.dist(x, sinks[j]), alpha) - v[j]);
        result.potential[x] = best;
    }
    result.dual_value = 0.0;
    for (int x = 0; x < k; ++x)
        result.dual_value += result.potential[x] * (mu.weight(x) - nu.weight(x));

    if (std::abs(result.value - result.dual_value) > 1e-8)
        throw NumericError("transport optimality certificate failed (primal/dual gap)");
    return result;
}

double wasserstein_dual_value(const FiniteMetric& metric, const DiscreteMeasure& mu,
                              const DiscreteMeasure& nu, double alpha,
                              std::span<const double> f) {
    check_inputs(metric, mu, nu, alpha);
    if (static_cast<int>(f.size()) != metric.size())
        throw DomainError(errc::shape_mismatch, "one potential value per point required");
    for (int i = 0; i < metric.size(); ++i)
        for (int j = i + 1; j < metric.size(); ++j)
            if (std::abs(f[i] - f[j]) > std::pow(metric.dist(i, j), alpha) + 1e-9)
                throw DomainError(errc::infeasible_dual, "potential violates the Hoelder constraint");
    double value = 0.0;
    for (int i = 0; i < metric.size(); ++i) value += f[i] * (mu.weight(i) - nu.weight(i));
    return value;
}

}  // namespace tbl
