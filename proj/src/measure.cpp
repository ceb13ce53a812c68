#include "tbl/measure.hpp"

#include <cmath>

#include "tbl/errors.hpp"
#include "tbl/rng.hpp"

namespace tbl {

DiscreteMeasure::DiscreteMeasure(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw DomainError(errc::invalid_measure, "empty weight vector");
    double total = 0.0;
    for (double w : weights_) {
        if (std::isnan(w) || w < 0.0)
            throw DomainError(errc::invalid_measure, "negative or NaN weight");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw DomainError(errc::invalid_measure, "weights must sum to 1");
}

DiscreteMeasure DiscreteMeasure::uniform(int k) {
    if (k < 1) throw DomainError(errc::invalid_measure, "k >= 1 required");
    std::vector<double> w(k, 1.0 / k);
    // Remove the residual so the sum is exactly 1 in floating point.
    double total = 0.0;
    for (double v : w) total += v;
    w[0] += 1.0 - total;
    return DiscreteMeasure(std::move(w));
}

DiscreteMeasure DiscreteMeasure::point_mass(int k, int v) {
    if (k < 1 || v < 0 || v >= k) throw DomainError(errc::invalid_measure, "point out of range");
    std::vector<double> w(k, 0.0);
    w[v] = 1.0;
    return DiscreteMeasure(std::move(w));
}

bool DiscreteMeasure::fully_supported() const {
    for (double w : weights_)
        if (w <= 0.0) return false;
    return true;
}

DiscreteMeasure empirical_measure(const DiscreteMeasure& base, int n, std::uint64_t seed) {
    Rng rng(seed);
    return empirical_measure(base, n, rng);
}

DiscreteMeasure empirical_measure(const DiscreteMeasure& base, int n, Rng& rng) {
    if (n < 1) throw DomainError(errc::bad_params, "sample count must be >= 1");
    std::vector<double> counts(base.size(), 0.0);
    for (int i = 0; i < n; ++i) counts[rng.discrete(base.weights())] += 1.0;
    // counts/n sums to 1 within a few ulp, inside the measure tolerance
    for (double& c : counts) c /= n;
    return DiscreteMeasure(std::move(counts));
}

}  // namespace tbl
