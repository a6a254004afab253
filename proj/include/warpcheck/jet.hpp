// Second-order forward-mode jets: value, gradient, and dense symmetric Hessian
// (stored as the upper triangle) in a fixed number of seed variables.
// Third derivatives are deliberately not carried; consumers that need them
// differentiate a coarser quantity (e.g. the metric, not the Christoffels).
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace warpcheck {

class Jet2 {
public:
    Jet2() = default;

    static Jet2 constant(double v, int nvars) {
        Jet2 j;
        j.n_ = nvars;
        j.val_ = v;
        j.g_.assign(nvars, 0.0);
        j.h_.assign(tri(nvars), 0.0);
        return j;
    }

    static Jet2 seed(double v, int var, int nvars) {
        Jet2 j = constant(v, nvars);
        j.g_[var] = 1.0;
        return j;
    }

    int vars() const { return n_; }
    double value() const { return val_; }
    double grad(int i) const { return g_[i]; }
    double hess(int i, int j) const { return i <= j ? h_[idx(i, j)] : h_[idx(j, i)]; }

    Jet2 operator-() const {
        Jet2 r = *this;
        r.val_ = -r.val_;
        for (double& x : r.g_) x = -x;
        for (double& x : r.h_) x = -x;
        return r;
    }

    Jet2& operator+=(const Jet2& o) {
        match(o);
        val_ += o.val_;
        for (int i = 0; i < n_; ++i) g_[i] += o.g_[i];
        for (std::size_t k = 0; k < h_.size(); ++k) h_[k] += o.h_[k];
        return *this;
    }
    Jet2& operator-=(const Jet2& o) {
        match(o);
        val_ -= o.val_;
        for (int i = 0; i < n_; ++i) g_[i] -= o.g_[i];
        for (std::size_t k = 0; k < h_.size(); ++k) h_[k] -= o.h_[k];
        return *this;
    }
    Jet2& operator*=(double s) {
        val_ *= s;
        for (double& x : g_) x *= s;
        for (double& x : h_) x *= s;
        return *this;
    }
    Jet2& operator+=(double s) { val_ += s; return *this; }
    Jet2& operator-=(double s) { val_ -= s; return *this; }

    friend Jet2 operator+(Jet2 a, const Jet2& b) { a += b; return a; }
    friend Jet2 operator-(Jet2 a, const Jet2& b) { a -= b; return a; }
    friend Jet2 operator+(Jet2 a, double s) { a += s; return a; }
    friend Jet2 operator+(double s, Jet2 a) { a += s; return a; }
    friend Jet2 operator-(Jet2 a, double s) { a -= s; return a; }
    friend Jet2 operator-(double s, const Jet2& a) { return (-a) + s; }
    friend Jet2 operator*(Jet2 a, double s) { a *= s; return a; }
    friend Jet2 operator*(double s, Jet2 a) { a *= s; return a; }
    friend Jet2 operator/(Jet2 a, double s) { a *= 1.0 / s; return a; }

    friend Jet2 operator*(const Jet2& a, const Jet2& b) {
        a.match(b);
        Jet2 r = constant(a.val_ * b.val_, a.n_);
        for (int i = 0; i < a.n_; ++i) r.g_[i] = a.g_[i] * b.val_ + a.val_ * b.g_[i];
        std::size_t k = 0;
        for (int i = 0; i < a.n_; ++i)
            for (int j = i; j < a.n_; ++j, ++k)
                r.h_[k] = a.h_[k] * b.val_ + a.val_ * b.h_[k] + a.g_[i] * b.g_[j] + a.g_[j] * b.g_[i];
        return r;
    }

    friend Jet2 operator/(const Jet2& a, const Jet2& b) {
        if (b.val_ == 0.0) throw std::domain_error("jet division by zero value");
        return a * b.reciprocal();
    }
    friend Jet2 operator/(double s, const Jet2& b) {
        if (b.val_ == 0.0) throw std::domain_error("jet division by zero value");
        return b.reciprocal() * s;
    }

    // f(value) with first and second derivative supplied: full chain rule
    //   grad_i -> f' g_i,  hess_ij -> f' H_ij + f'' g_i g_j.
    Jet2 compose(double f0, double f1, double f2) const {
        Jet2 r = constant(f0, n_);
        for (int i = 0; i < n_; ++i) r.g_[i] = f1 * g_[i];
        std::size_t k = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i; j < n_; ++j, ++k) r.h_[k] = f1 * h_[k] + f2 * g_[i] * g_[j];
        return r;
    }

private:
    static std::size_t tri(int n) { return static_cast<std::size_t>(n) * (n + 1) / 2; }
    // packed upper-triangle index for i <= j
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * n_ - static_cast<std::size_t>(i) * (i - 1) / 2 + (j - i);
    }
    void match(const Jet2& o) const {
        if (n_ != o.n_) throw std::invalid_argument("jet variable-count mismatch");
    }
    Jet2 reciprocal() const {
        const double v = val_;
        return compose(1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
    }

    int n_ = 0;
    double val_ = 0.0;
    std::vector<double> g_;
    std::vector<double> h_;
};

inline void require_domain(bool ok, const char* what, double value) {
    if (!ok) throw std::domain_error(std::string(what) + " (offending value " + std::to_string(value) + ")");
}

inline Jet2 log(const Jet2& x) {
    const double v = x.value();
    require_domain(v > 0.0, "log requires a positive argument", v);
    return x.compose(std::log(v), 1.0 / v, -1.0 / (v * v));
}

inline Jet2 sqrt(const Jet2& x) {
    const double v = x.value();
    require_domain(v > 0.0, "sqrt requires a positive argument", v);
    const double s = std::sqrt(v);
    return x.compose(s, 0.5 / s, -0.25 / (s * v));
}

inline Jet2 sin(const Jet2& x) {
    const double v = x.value();
    return x.compose(std::sin(v), std::cos(v), -std::sin(v));
}

inline Jet2 cos(const Jet2& x) {
    const double v = x.value();
    return x.compose(std::cos(v), -std::sin(v), -std::cos(v));
}

inline Jet2 tan(const Jet2& x) {
    const double v = x.value();
    require_domain(std::abs(std::cos(v)) > 1e-12, "tan requires cos != 0", v);
    const double t = std::tan(v);
    return x.compose(t, 1.0 + t * t, 2.0 * t * (1.0 + t * t));
}

inline Jet2 sinh(const Jet2& x) {
    const double v = x.value();
    return x.compose(std::sinh(v), std::cosh(v), std::sinh(v));
}

inline Jet2 cosh(const Jet2& x) {
    const double v = x.value();
    return x.compose(std::cosh(v), std::sinh(v), std::cosh(v));
}

inline Jet2 coth(const Jet2& x) {
    const double v = x.value();
    require_domain(std::abs(v) > 1e-12, "coth requires a nonzero argument", v);
    const double c = 1.0 / std::tanh(v);
    return x.compose(c, 1.0 - c * c, 2.0 * c * (c * c - 1.0));
}

// Seeds all coordinates of a point as jet variables.
inline std::vector<Jet2> seed_all(const std::vector<double>& x) {
    const int n = static_cast<int>(x.size());
    std::vector<Jet2> j;
    j.reserve(x.size());
    for (int i = 0; i < n; ++i) j.push_back(Jet2::seed(x[i], i, n));
    return j;
}

}  // namespace warpcheck
