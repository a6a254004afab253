// Small dense matrices over double with LU (partial pivoting) solves.
// Everything here is sized by the geometry (chart/ambient dims), at most a few dozen.
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace warpcheck {

using Vec = std::vector<double>;

class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    Vec col(int j) const {
        Vec c(rows_);
        for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Mat transposed() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : a_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    int rows_ = 0, cols_ = 0;
    Vec a_;
};

inline Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    Mat c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline Vec operator*(const Mat& a, const Vec& x) {
    if (a.cols() != static_cast<int>(x.size())) throw std::invalid_argument("matrix-vector shape mismatch");
    Vec y(a.rows(), 0.0);
    for (int i = 0; i < a.rows(); ++i) {
        double acc = 0.0;
        for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

// LU decomposition with partial pivoting. Singularity is reported, not thrown:
// callers decide whether a degenerate matrix is an error or a verdict.
class Lu {
public:
    explicit Lu(Mat m) : lu_(std::move(m)), piv_(lu_.rows()), sign_(1) {
        if (lu_.rows() != lu_.cols()) throw std::invalid_argument("LU requires a square matrix");
        const int n = lu_.rows();
        for (int i = 0; i < n; ++i) piv_[i] = i;
        for (int k = 0; k < n; ++k) {
            int p = k;
            double best = std::abs(lu_(k, k));
            for (int i = k + 1; i < n; ++i) {
                const double v = std::abs(lu_(i, k));
                if (v > best) { best = v; p = i; }
            }
            if (p != k) {
                for (int j = 0; j < n; ++j) std::swap(lu_(p, j), lu_(k, j));
                std::swap(piv_[p], piv_[k]);
                sign_ = -sign_;
            }
            const double pivot = lu_(k, k);
            if (pivot == 0.0) { singular_ = true; continue; }
            for (int i = k + 1; i < n; ++i) {
                lu_(i, k) /= pivot;
                const double f = lu_(i, k);
                if (f == 0.0) continue;
                for (int j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
            }
        }
    }

    bool singular() const { return singular_; }

    double det() const {
        double d = sign_;
        for (int i = 0; i < lu_.rows(); ++i) d *= lu_(i, i);
        return d;
    }

    Vec solve(const Vec& b) const {
        if (singular_) throw std::runtime_error("LU solve on singular matrix");
        const int n = lu_.rows();
        Vec x(n);
        for (int i = 0; i < n; ++i) x[i] = b[piv_[i]];
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
        for (int i = n - 1; i >= 0; --i) {
            for (int j = i + 1; j < n; ++j) x[i] -= lu_(i, j) * x[j];
            x[i] /= lu_(i, i);
        }
        return x;
    }

    Mat solve(const Mat& b) const {
        Mat x(b.rows(), b.cols());
        for (int j = 0; j < b.cols(); ++j) {
            Vec xj = solve(b.col(j));
            for (int i = 0; i < b.rows(); ++i) x(i, j) = xj[i];
        }
        return x;
    }

    Mat inverse() const { return solve(Mat::identity(lu_.rows())); }

private:
    Mat lu_;
    std::vector<int> piv_;
    int sign_;
    bool singular_ = false;
};

inline double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline double max_abs(const Vec& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace warpcheck
