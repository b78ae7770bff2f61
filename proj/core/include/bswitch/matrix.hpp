#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace bswitch {

/// Dense row-major matrix of doubles. Only the handful of operations the
/// switched/Lyapunov pipeline needs.
class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    Mat(std::initializer_list<std::initializer_list<double>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw std::invalid_argument("Mat: ragged rows");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    double& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    double operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    bool all_finite() const {
        for (double v : data_) {
            if (!std::isfinite(v)) return false;
        }
        return true;
    }

    /// y = A x
    std::vector<double> apply(std::span<const double> x) const {
        if (x.size() != cols_) throw std::invalid_argument("Mat::apply: dimension mismatch");
        std::vector<double> y(rows_, 0.0);
        for (size_t i = 0; i < rows_; ++i) {
            double acc = 0.0;
            for (size_t j = 0; j < cols_; ++j) acc += data_[i * cols_ + j] * x[j];
            y[i] = acc;
        }
        return y;
    }

    bool operator==(const Mat& other) const = default;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace bswitch
