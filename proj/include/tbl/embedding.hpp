#pragma once

#include "tbl/matrix.hpp"
#include "tbl/metric.hpp"

namespace tbl {

struct Embedding {
    int dim = 0;
    Matrix coords;  // one row per point, dim columns; distances under the sup norm
    double expansion = 1.0;
    double contraction = 1.0;
    double distortion = 1.0;  // expansion * contraction, always >= 1
};

struct DistortionStats {
    double expansion = 1.0;
    double contraction = 1.0;
    double distortion = 1.0;
};

// Entrywise dist^alpha; a metric again for alpha in (0, 1].
FiniteMetric snowflake(const FiniteMetric& m, double alpha);

// Isometric embedding into (R^k, sup norm): point j maps to its distance
// profile (dist(j, 0), ..., dist(j, k-1)).
Embedding frechet_embed(const FiniteMetric& m);

// One-dimensional embedding of the 1/2-snowflake of m, for spaces with all
// distances >= 1. Points are placed on an equally spaced grid with step
// diam^{1/2} (snowflaked distances then lie within one grid step), which
// keeps the distortion below 12k * diam^{1/2}; for k <= 8 an exhaustive
// ordering search further minimizes the measured distortion.
Embedding line_embed_snowflake(const FiniteMetric& m);

// Target dimension sufficient for a (1 + eta)-distortion sup-norm embedding
// of a 1/2-snowflaked space with the given doubling constant:
//   eta <= 1/20:        ceil(4 M^{5 + log2 5})
//   eta in (1/20, 1):   ceil(eta^{-c_abs log2 M})   (equals 2 near eta = 1)
// c_abs is the absolute constant of the high-eta regime; only its existence
// is known, so it is a parameter rather than a baked-in value.
long long assouad_dimension(double eta, int doubling_M, double c_abs = 1.0);

// Worst stretch/shrink ratios of an embedding against a source metric.
DistortionStats measure_distortion(const FiniteMetric& source, const Embedding& emb);

}  // namespace tbl
