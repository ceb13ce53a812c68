#include "tbl/doubling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

#include "tbl/errors.hpp"
#include "tbl/spectral.hpp"

namespace tbl {

namespace {

// Candidate radii where a covering function can change value: the thresholds
// themselves plus midpoints of consecutive thresholds, so open intervals
// between jumps are also sampled.
std::vector<double> with_midpoints(std::vector<double> thresholds) {
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
    std::vector<double> out;
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        if (i > 0) out.push_back(0.5 * (thresholds[i - 1] + thresholds[i]));
        out.push_back(thresholds[i]);
    }
    return out;
}

// Greedy cover over word-packed sets; handles balls of any size.
int greedy_cover(const std::vector<std::vector<std::uint64_t>>& sets,
                 std::vector<std::uint64_t> remaining) {
    auto popcount = [](const std::vector<std::uint64_t>& bits) {
        int n = 0;
        for (std::uint64_t w : bits) n += std::popcount(w);
        return n;
    };
    int used = 0;
    while (popcount(remaining) > 0) {
        int best = -1, best_gain = 0;
        for (std::size_t s = 0; s < sets.size(); ++s) {
            int gain = 0;
            for (std::size_t w = 0; w < remaining.size(); ++w)
                gain += std::popcount(sets[s][w] & remaining[w]);
            if (gain > best_gain) {
                best_gain = gain;
                best = static_cast<int>(s);
            }
        }
        for (std::size_t w = 0; w < remaining.size(); ++w) remaining[w] &= ~sets[best][w];
        ++used;
    }
    return used;
}

// Exact minimum cover by branch-and-bound, single-word universes only
// (callers guarantee at most exact_limit <= 64 elements). Branches on the
// uncovered element with the fewest candidate sets.
void exact_cover_dfs(const std::vector<std::uint64_t>& sets, std::uint64_t remaining, int depth,
                     int& best) {
    if (remaining == 0) {
        best = std::min(best, depth);
        return;
    }
    int max_gain = 0;
    for (std::uint64_t s : sets) max_gain = std::max(max_gain, std::popcount(s & remaining));
    if (max_gain == 0) return;
    if (depth + (std::popcount(remaining) + max_gain - 1) / max_gain >= best) return;

    int elem = -1, fewest = INT32_MAX;
    for (std::uint64_t rem = remaining; rem != 0; rem &= rem - 1) {
        const int e = std::countr_zero(rem);
        int covers = 0;
        for (std::uint64_t s : sets)
            if (s & (1ULL << e)) ++covers;
        if (covers < fewest) {
            fewest = covers;
            elem = e;
        }
    }
    for (std::uint64_t s : sets) {
        if (!(s & (1ULL << elem))) continue;
        exact_cover_dfs(sets, remaining & ~s, depth + 1, best);
    }
}

void require_diam_le_2(const Graph& g) {
    if (g.vertex_count() < 2)
        throw DomainError(errc::bad_params, "non-singleton graph required");
    const double diam = shortest_path_metric(g).diameter();
    if (!(diam <= 2.0))
        throw DomainError(errc::diameter_too_large, "bound applies to diameter <= 2 graphs only");
}

double edge_count_radicand(const Graph& g) {
    const auto stats = degree_stats(g);
    return 2.0 * static_cast<double>(g.edge_count()) -
           static_cast<double>(g.vertex_count() - 1) * stats.deg_max +
           static_cast<double>(stats.deg_max - 1) * stats.deg_min;
}

}  // namespace

DoublingReport exact_doubling_constant(const FiniteMetric& m, int exact_limit) {
    if (!m.is_finite())
        throw DomainError(errc::non_finite_metric, "doubling constant needs finite distances");
    const int k = m.size();

    DoublingReport report;
    if (k == 1) {
        report.exact_M = 1;
        report.greedy_M = 1;
        return report;
    }

    std::vector<double> thresholds;
    for (double d : m.distinct_distances()) {
        thresholds.push_back(d);
        thresholds.push_back(2.0 * d);
    }
    report.radii_examined = with_midpoints(std::move(thresholds));
    exact_limit = std::min(exact_limit, 64);

    bool all_exact = true;
    int exact_max = 1, greedy_max = 1;
    std::vector<int> ball;
    for (double r : report.radii_examined) {
        for (int center = 0; center < k; ++center) {
            ball.clear();
            for (int y = 0; y < k; ++y)
                if (m.dist(center, y) <= r) ball.push_back(y);
            const int b = static_cast<int>(ball.size());
            if (b <= 1) continue;

            const std::size_t words = (ball.size() + 63) / 64;
            std::vector<std::vector<std::uint64_t>> sets;
            sets.reserve(k);
            for (int c = 0; c < k; ++c) {
                std::vector<std::uint64_t> s(words, 0);
                bool nonempty = false;
                for (std::size_t e = 0; e < ball.size(); ++e)
                    if (m.dist(c, ball[e]) <= r / 2.0) {
                        s[e / 64] |= 1ULL << (e % 64);
                        nonempty = true;
                    }
                if (nonempty) sets.push_back(std::move(s));
            }
            std::sort(sets.begin(), sets.end());
            sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

            std::vector<std::uint64_t> universe(words, ~0ULL);
            if (ball.size() % 64 != 0) universe.back() = (1ULL << (ball.size() % 64)) - 1;

            const int greedy = greedy_cover(sets, universe);
            greedy_max = std::max(greedy_max, greedy);
            if (b <= exact_limit) {
                std::vector<std::uint64_t> flat;
                flat.reserve(sets.size());
                for (const auto& s : sets) flat.push_back(s[0]);
                int best = greedy;
                exact_cover_dfs(flat, universe[0], 0, best);
                exact_max = std::max(exact_max, best);
            } else {
                all_exact = false;
            }
        }
    }
    report.greedy_M = greedy_max;
    if (all_exact) report.exact_M = exact_max;
    return report;
}

int degree_doubling_bound(const Graph& g) {
    require_diam_le_2(g);
    return degree_stats(g).deg_max + 1;
}

std::pair<double, std::optional<double>> spectral_doubling_bound(const Graph& g) {
    require_diam_le_2(g);
    const double rho = spectral_radius(g);
    const double b1 = std::pow(1.0 + rho, 4.0);
    std::optional<double> b2;
    const double radicand = edge_count_radicand(g);
    if (radicand >= 0.0) b2 = 8.0 * (1.0 + radicand) * (1.0 + radicand);
    return {b1, b2};
}

LeastMeasureDoublingBound least_measure_doubling_bound(const Graph& g) {
    require_diam_le_2(g);
    LeastMeasureDoublingBound out;
    out.upper_bound = 1.0 + spectral_radius(g);
    if (shortest_path_metric(g).diameter() <= 1.0) out.exact_value = g.vertex_count();
    return out;
}

double measure_doubling_constant(const FiniteMetric& m, const DiscreteMeasure& mu) {
    if (!m.is_finite())
        throw DomainError(errc::non_finite_metric, "measure doubling needs finite distances");
    if (mu.size() != m.size())
        throw DomainError(errc::shape_mismatch, "measure must live on the metric's points");
    if (!mu.fully_supported())
        throw DomainError(errc::not_fully_supported, "doubling measures have full support");

    const int k = m.size();
    // Jumps of r -> mu(B(v, r)) happen at the distances; jumps of the outer
    // ball B(v, 2r) happen at half-distances.
    std::vector<double> thresholds;
    for (double d : m.distinct_distances()) {
        thresholds.push_back(d);
        thresholds.push_back(d / 2.0);
    }
    const auto radii = with_midpoints(std::move(thresholds));

    double worst = 1.0;
    for (int v = 0; v < k; ++v) {
        for (double r : radii) {
            double inner = 0.0, outer = 0.0;
            for (int y = 0; y < k; ++y) {
                const double d = m.dist(v, y);
                if (d <= r) inner += mu.weight(y);
                if (d <= 2.0 * r) outer += mu.weight(y);
            }
            worst = std::max(worst, outer / inner);
        }
    }
    return worst;
}

DoublingReport graph_doubling_report(const Graph& g, int exact_limit) {
    const FiniteMetric metric = shortest_path_metric(g);
    DoublingReport report = exact_doubling_constant(metric, exact_limit);
    if (g.vertex_count() >= 2 && metric.is_finite() && metric.diameter() <= 2.0) {
        report.bound_degree = degree_doubling_bound(g);
        const auto [b1, b2] = spectral_doubling_bound(g);
        report.bound_spectral = b1;
        report.bound_edge_count = b2;
    }
    return report;
}

}  // namespace tbl
