#include "tbl/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tbl/embedding.hpp"
#include "tbl/errors.hpp"
#include "tbl/parallel.hpp"
#include "tbl/rng.hpp"
#include "tbl/transport.hpp"

namespace tbl {

RateBundle concentration_rates(int k, int n, double diam, double delta, int doubling_M) {
    if (n < 4 || k < 2 || doubling_M < 2 || !(delta > 0.0 && delta < 1.0) || !(diam > 0.0))
        throw DomainError(errc::bad_params,
                          "need n >= 4, k >= 2, M >= 2, diam > 0, delta in (0,1)");
    RateBundle b;
    b.n = n;
    b.k = k;
    b.diam = diam;
    b.delta = delta;
    b.doubling_M = doubling_M;
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    b.r1 = std::log2(static_cast<double>(n)) / sqrt_n;
    b.r2 = k * std::sqrt(diam) / sqrt_n;
    b.r3_exponent_den = assouad_dimension(0.05, doubling_M);
    b.r3 = std::pow(static_cast<double>(n), -1.0 / static_cast<double>(b.r3_exponent_den));
    b.t_dev = std::sqrt(3.0 * std::log2(2.0 / delta) * diam) / sqrt_n;
    return b;
}

double WassersteinRate::rate(int n) const {
    if (n < 1) throw DomainError(errc::bad_params, "n >= 1 required");
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    if (regime == "m<2a") return 1.0 / sqrt_n;
    if (regime == "m=2a") {
        // Exact integer ceil(log2 n).
        int c = 0;
        for (int p = 1; p < n; p *= 2) {
            ++c;
            if (p > (1 << 29)) break;
        }
        return static_cast<double>(c) / sqrt_n;
    }
    return std::pow(static_cast<double>(n), -alpha / m);
}

WassersteinRate wasserstein_rate(int m, double alpha) {
    if (m < 1) throw DomainError(errc::bad_params, "dimension must be >= 1");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError(errc::bad_alpha, "alpha must lie in (0, 1]");
    WassersteinRate entry;
    entry.m = m;
    entry.alpha = alpha;
    const double md = static_cast<double>(m);
    if (std::abs(md - 2.0 * alpha) <= 1e-12) {
        entry.regime = "m=2a";
        entry.constant = 1.0 / (std::pow(2.0, alpha - 1.0) * alpha);
        entry.rate_descriptor = "ceil(log2 n) * n^-1/2";
    } else if (md < 2.0 * alpha) {
        entry.regime = "m<2a";
        entry.constant =
            std::pow(2.0, md / 2.0 - 2.0 * alpha) / (1.0 - std::pow(2.0, md / 2.0 - alpha));
        entry.rate_descriptor = "n^-1/2";
    } else {
        entry.regime = "m>2a";
        const double half_gap = md / 2.0 - alpha;
        entry.constant =
            2.0 *
            std::pow(half_gap / (2.0 * alpha * (1.0 - std::pow(2.0, alpha - md / 2.0))),
                     2.0 * alpha / md) *
            (1.0 + alpha / (std::pow(2.0, alpha) * half_gap));
        entry.rate_descriptor = "n^-alpha/m";
    }
    return entry;
}

double mean_wasserstein_bound(int k, int n, double diam) {
    if (n < 4 || k < 1) throw DomainError(errc::bad_params, "need n >= 4, k >= 1");
    if (diam == 0.0) return 0.0;
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    const double r1 = std::log2(static_cast<double>(n)) / sqrt_n;
    const double r2 = k * std::sqrt(diam) / sqrt_n;
    return std::sqrt(diam) * std::min(2.0 * r1, 24.0 * r2);
}

double deviation_wasserstein_bound(int k, int n, double diam, double delta, int doubling_M) {
    const RateBundle b = concentration_rates(k, n, diam, delta, doubling_M);
    return std::sqrt(diam) * std::min({b.r1, 24.0 * b.r2, b.r3}) + b.t_dev;
}

std::vector<ConcentrationRow> run_concentration_experiment(const FiniteMetric& metric,
                                                           const DiscreteMeasure& base,
                                                           std::span<const int> n_values,
                                                           int trials, std::uint64_t seed,
                                                           double delta, int doubling_M) {
    if (trials < 1) throw DomainError(errc::bad_params, "trials must be >= 1");
    if (base.size() != metric.size())
        throw DomainError(errc::marginal_mismatch, "measure must live on the metric's points");
    if (metric.size() >= 2 && metric.min_distance() < 1.0)
        throw DomainError(errc::min_distance_below_one,
                          "the bounds assume all distances >= 1");

    std::vector<ConcentrationRow> rows;
    rows.reserve(n_values.size());
    const double diam = metric.diameter();

    for (std::size_t ni = 0; ni < n_values.size(); ++ni) {
        const int n = n_values[ni];
        std::vector<double> w(trials, 0.0);
        parallel_for(static_cast<std::size_t>(trials), [&](std::size_t trial) {
            Rng rng = Rng::substream(mix_seed(seed, ni), trial);
            const DiscreteMeasure emp = empirical_measure(base, n, rng);
            w[trial] = wasserstein(metric, base, emp, 0.5).value;
        });

        ConcentrationRow row;
        row.n = n;
        double sum = 0.0;
        for (double v : w) sum += v;
        row.mean_w = sum / trials;
        double ss = 0.0;
        for (double v : w) ss += (v - row.mean_w) * (v - row.mean_w);
        row.std_w = trials > 1 ? std::sqrt(ss / (trials - 1)) : 0.0;

        std::vector<double> dev(trials);
        for (int t = 0; t < trials; ++t) dev[t] = std::abs(w[t] - row.mean_w);
        std::sort(dev.begin(), dev.end());
        const int q_index =
            std::min(trials - 1, static_cast<int>(std::ceil((1.0 - delta) * trials)) - 1);
        row.quantile_dev = dev[std::max(0, q_index)];

        row.bound_mean = mean_wasserstein_bound(metric.size(), n, diam);
        row.bound_dev = diam > 0.0
                            ? deviation_wasserstein_bound(metric.size(), n, diam, delta, doubling_M)
                            : 0.0;
        row.pass = row.mean_w <= row.bound_mean + 1e-12 && row.quantile_dev <= row.bound_dev + 1e-12;
        rows.push_back(row);
    }
    return rows;
}

std::string concentration_csv(const std::vector<ConcentrationRow>& rows) {
    std::ostringstream out;
    out.precision(17);
    out << "n,mean_w,std_w,quantile_dev,bound_mean,bound_dev,pass\n";
    for (const auto& r : rows)
        out << r.n << ',' << r.mean_w << ',' << r.std_w << ',' << r.quantile_dev << ','
            << r.bound_mean << ',' << r.bound_dev << ',' << (r.pass ? 1 : 0) << "\n";
    return out.str();
}

}  // namespace tbl
