#pragma once

#include <cstdint>
#include <vector>

namespace tbl {

class Rng;

// Probability weights over the points of an associated FiniteMetric.
class DiscreteMeasure {
public:
    explicit DiscreteMeasure(std::vector<double> weights);

    static DiscreteMeasure uniform(int k);
    static DiscreteMeasure point_mass(int k, int v);

    int size() const { return static_cast<int>(weights_.size()); }
    double weight(int i) const { return weights_[i]; }
    const std::vector<double>& weights() const { return weights_; }
    bool fully_supported() const;

private:
    std::vector<double> weights_;
};

// Counts/n over n i.i.d. index draws from base; deterministic given seed.
DiscreteMeasure empirical_measure(const DiscreteMeasure& base, int n, std::uint64_t seed);
DiscreteMeasure empirical_measure(const DiscreteMeasure& base, int n, Rng& rng);

}  // namespace tbl
