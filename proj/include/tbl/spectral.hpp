#pragma once

#include <vector>

#include "tbl/graph.hpp"
#include "tbl/matrix.hpp"

namespace tbl {

// Symmetric eigensolve: cyclic Jacobi up to n = 256, shifted power iteration
// above. Deterministic; eigenvalues returned in ascending order (Jacobi path)
// or as the extreme pair (power-iteration path feeds operator_norm only).
std::vector<double> symmetric_eigenvalues(const Matrix& a);

// Largest absolute eigenvalue of a symmetric matrix, relative accuracy 1e-10.
double operator_norm(const Matrix& a);

// Largest singular value (general rectangular matrix), via eigensolve of A^T A.
double operator_norm_rect(const Matrix& a);

Matrix adjacency_matrix(const Graph& g);

// I - D^{-1/2} A D^{-1/2}; requires minimum degree >= 1.
Matrix normalized_laplacian(const Graph& g);

// 1 + sqrt(k-1)/sqrt(deg_min): row-sum disc bound on the spectrum of the
// normalized Laplacian. Requires k >= 2 and no isolated vertices.
double gershgorin_bound(const Graph& g);

// Largest adjacency eigenvalue.
double spectral_radius(const Graph& g);

// sqrt(2*k_E - (k-1)*deg_max + (deg_max-1)*deg_min), an adjacency spectral
// radius upper bound for connected graphs. The radicand can go negative
// outside the regime the source inequality assumes (stars do this); that
// case is reported as NegativeRadicand instead of returning NaN.
double das_kumar_radius_bound(const Graph& g, long long edge_count);

}  // namespace tbl
