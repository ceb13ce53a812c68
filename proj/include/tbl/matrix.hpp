#pragma once

#include <cstddef>
#include <vector>

namespace tbl {

// Dense row-major matrix. Small and dependency-free on purpose: every
// numeric claim in this project is backed by deterministic arithmetic.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix matrix_power(const Matrix& a, int exponent);

// Entrywise max absolute value (the sup norm used for feature matrices).
double max_abs(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);

bool is_symmetric(const Matrix& a, double tol = 1e-12);

}  // namespace tbl
