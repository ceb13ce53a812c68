#include "tbl/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "tbl/errors.hpp"

namespace tbl {

namespace {

constexpr int kJacobiLimit = 256;

std::vector<double> jacobi_eigenvalues(Matrix a) {
    const int n = a.rows();
    double off = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) off += 2.0 * a(i, j) * a(i, j);
    double scale = 0.0;
    for (double v : a.data()) scale = std::max(scale, std::abs(v));
    const double stop = std::max(1e-300, scale * scale * 1e-30);

    for (int sweep = 0; sweep < 100 && off > stop; ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = aip - s * (aiq + tau * aip);
                    a(p, i) = a(i, p);
                    a(i, q) = aiq + s * (aip - tau * aiq);
                    a(q, i) = a(i, q);
                }
            }
        }
        off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * a(i, j) * a(i, j);
    }
    if (off > stop) throw NumericError("jacobi eigensolver did not converge");

    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

// Dominant eigenvalue of a symmetric PSD-shifted matrix by power iteration
// with a deterministic start vector.
double power_dominant(const Matrix& a) {
    const int n = a.rows();
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) x[i] = 1.0 + 1e-3 * std::sin(static_cast<double>(i + 1));
    double norm = 0.0;
    for (double v : x) norm += v * v;
    norm = std::sqrt(norm);
    for (double& v : x) v /= norm;

    double lambda = 0.0;
    for (int iter = 0; iter < 200000; ++iter) {
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) acc += a(i, j) * x[j];
            y[i] = acc;
        }
        double rayleigh = 0.0, ynorm = 0.0;
        for (int i = 0; i < n; ++i) {
            rayleigh += x[i] * y[i];
            ynorm += y[i] * y[i];
        }
        ynorm = std::sqrt(ynorm);
        if (ynorm == 0.0) return 0.0;
        for (int i = 0; i < n; ++i) x[i] = y[i] / ynorm;
        if (iter > 2 && std::abs(rayleigh - lambda) <= 1e-12 * std::max(1.0, std::abs(rayleigh)))
            return rayleigh;
        lambda = rayleigh;
    }
    throw NumericError("power iteration did not converge");
}

std::pair<double, double> extreme_eigenvalues_large(const Matrix& a) {
    const int n = a.rows();
    // Shift by the max absolute row sum so both shifted matrices are PSD.
    double shift = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += std::abs(a(i, j));
        shift = std::max(shift, row);
    }
    Matrix plus(n, n), minus(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            plus(i, j) = a(i, j) + (i == j ? shift : 0.0);
            minus(i, j) = -a(i, j) + (i == j ? shift : 0.0);
        }
    const double lo = shift - power_dominant(minus);
    const double hi = power_dominant(plus) - shift;
    return {lo, hi};
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const Matrix& a) {
    if (!is_symmetric(a)) throw DomainError(errc::shape_mismatch, "symmetric matrix required");
    if (a.rows() <= kJacobiLimit) return jacobi_eigenvalues(a);
    const auto [lo, hi] = extreme_eigenvalues_large(a);
    return {lo, hi};
}

double operator_norm(const Matrix& a) {
    if (a.rows() == 0) return 0.0;
    const auto eig = symmetric_eigenvalues(a);
    return std::max(std::abs(eig.front()), std::abs(eig.back()));
}

double operator_norm_rect(const Matrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    const Matrix gram = multiply(transpose(a), a);
    // Symmetrize away multiplication round-off before the eigensolve.
    Matrix sym(gram.rows(), gram.cols());
    for (int i = 0; i < gram.rows(); ++i)
        for (int j = 0; j < gram.cols(); ++j) sym(i, j) = 0.5 * (gram(i, j) + gram(j, i));
    const auto eig = symmetric_eigenvalues(sym);
    return std::sqrt(std::max(0.0, eig.back()));
}

Matrix adjacency_matrix(const Graph& g) {
    const int k = g.vertex_count();
    Matrix a(k, k);
    for (const auto& [u, v] : g.edges()) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    return a;
}

Matrix normalized_laplacian(const Graph& g) {
    const int k = g.vertex_count();
    const auto stats = degree_stats(g);
    if (stats.deg_min < 1)
        throw DomainError(errc::isolated_vertex, "normalized laplacian needs deg_min >= 1");
    Matrix lap = Matrix::identity(k);
    for (const auto& [u, v] : g.edges()) {
        const double w = -1.0 / std::sqrt(static_cast<double>(stats.degrees[u]) * stats.degrees[v]);
        lap(u, v) = w;
        lap(v, u) = w;
    }
    return lap;
}

double gershgorin_bound(const Graph& g) {
    const auto stats = degree_stats(g);
    if (g.vertex_count() < 2)
        throw DomainError(errc::bad_params, "gershgorin bound needs k >= 2");
    if (stats.deg_min < 1)
        throw DomainError(errc::isolated_vertex, "gershgorin bound needs deg_min >= 1");
    return 1.0 + std::sqrt(static_cast<double>(g.vertex_count() - 1)) /
                     std::sqrt(static_cast<double>(stats.deg_min));
}

double spectral_radius(const Graph& g) {
    if (g.edge_count() == 0) return 0.0;
    const auto eig = symmetric_eigenvalues(adjacency_matrix(g));
    // Adjacency matrices are nonnegative, so the top eigenvalue is the radius.
    return eig.back();
}

double das_kumar_radius_bound(const Graph& g, long long edge_count) {
    if (!is_connected(g)) throw DomainError(errc::disconnected, "bound assumes a connected graph");
    const auto stats = degree_stats(g);
    const double radicand = 2.0 * static_cast<double>(edge_count) -
                            static_cast<double>(g.vertex_count() - 1) * stats.deg_max +
                            static_cast<double>(stats.deg_max - 1) * stats.deg_min;
    if (radicand < 0.0)
        throw DomainError(errc::negative_radicand,
                          "radius bound radicand negative; outside the inequality's regime");
    return std::sqrt(radicand);
}

}  // namespace tbl
