#include "tbl/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tbl/errors.hpp"

namespace tbl {

namespace {

// ceil with a guard for values that are integers up to round-off, so that
// formula-pinned dimensions like 4 * 2^{5 + log2 5} = 640 come out exact.
long long ceil_guarded(double x) {
    const double nearest = std::round(x);
    if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(x)))
        return static_cast<long long>(nearest);
    return static_cast<long long>(std::ceil(x));
}

double sup_dist(const Matrix& coords, int i, int j) {
    double d = 0.0;
    for (int c = 0; c < coords.cols(); ++c) d = std::max(d, std::abs(coords(i, c) - coords(j, c)));
    return d;
}

DistortionStats distortion_of(const FiniteMetric& source, const Matrix& coords) {
    DistortionStats s;
    if (source.size() < 2) return s;
    double expansion = 0.0, contraction = 0.0;
    for (int i = 0; i < source.size(); ++i)
        for (int j = i + 1; j < source.size(); ++j) {
            const double src = source.dist(i, j);
            const double emb = sup_dist(coords, i, j);
            if (emb == 0.0)
                throw DomainError(errc::collapsed_pair, "distinct points share coordinates");
            expansion = std::max(expansion, emb / src);
            contraction = std::max(contraction, src / emb);
        }
    s.expansion = expansion;
    s.contraction = contraction;
    s.distortion = expansion * contraction;
    return s;
}

Embedding finish(const FiniteMetric& source, Matrix coords) {
    Embedding emb;
    emb.dim = coords.cols();
    emb.coords = std::move(coords);
    const auto stats = distortion_of(source, emb.coords);
    emb.expansion = stats.expansion;
    emb.contraction = stats.contraction;
    emb.distortion = stats.distortion;
    return emb;
}

}  // namespace

FiniteMetric snowflake(const FiniteMetric& m, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError(errc::bad_alpha, "snowflake degree must lie in (0, 1]");
    const int k = m.size();
    Matrix dist(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j) dist(i, j) = std::pow(m.dist(i, j), alpha);
    return FiniteMetric::from_matrix(dist);
}

Embedding frechet_embed(const FiniteMetric& m) {
    const int k = m.size();
    Matrix coords(k, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) coords(j, i) = m.dist(j, i);
    return finish(m, std::move(coords));
}

Embedding line_embed_snowflake(const FiniteMetric& m) {
    const int k = m.size();
    if (k >= 2 && m.min_distance() < 1.0)
        throw DomainError(errc::min_distance_below_one,
                          "line embedding assumes all distances >= 1");
    if (!m.is_finite())
        throw DomainError(errc::non_finite_metric, "line embedding needs finite distances");

    const FiniteMetric snow = snowflake(m, 0.5);
    const double step = k >= 2 ? std::sqrt(m.diameter()) : 1.0;

    auto place = [&](const std::vector<int>& order) {
        Matrix coords(k, 1);
        for (int slot = 0; slot < k; ++slot) coords(order[slot], 0) = slot * step;
        return coords;
    };

    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    Matrix best_coords = place(order);
    if (k >= 3 && k <= 8) {
        double best = distortion_of(snow, best_coords).distortion;
        std::vector<int> perm = order;
        while (std::next_permutation(perm.begin(), perm.end())) {
            const Matrix coords = place(perm);
            const double d = distortion_of(snow, coords).distortion;
            if (d < best) {
                best = d;
                best_coords = coords;
            }
        }
    }
    return finish(snow, std::move(best_coords));
}

long long assouad_dimension(double eta, int doubling_M, double c_abs) {
    if (!(eta > 0.0 && eta < 1.0))
        throw DomainError(errc::bad_eta, "eta must lie in (0, 1)");
    if (doubling_M < 2) throw DomainError(errc::bad_params, "doubling constant must be >= 2");
    if (c_abs < 1.0) throw DomainError(errc::bad_params, "absolute constant must be >= 1");
    if (eta <= 0.05)
        return ceil_guarded(4.0 * std::pow(static_cast<double>(doubling_M),
                                           5.0 + std::log2(5.0)));
    return ceil_guarded(std::pow(eta, -c_abs * std::log2(static_cast<double>(doubling_M))));
}

DistortionStats measure_distortion(const FiniteMetric& source, const Embedding& emb) {
    if (emb.coords.rows() != source.size())
        throw DomainError(errc::shape_mismatch, "embedding and metric point counts differ");
    return distortion_of(source, emb.coords);
}

}  // namespace tbl
