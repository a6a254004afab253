// Para-complex (split-complex) scalars over double: j*j = +1.
// The null cone re = +-jm carries zero divisors, so no division is provided.
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace warpcheck {

struct ParaComplex {
    double re = 0.0;
    double jm = 0.0;

    friend ParaComplex operator+(ParaComplex a, ParaComplex b) { return {a.re + b.re, a.jm + b.jm}; }
    friend ParaComplex operator-(ParaComplex a, ParaComplex b) { return {a.re - b.re, a.jm - b.jm}; }
    friend ParaComplex operator-(ParaComplex a) { return {-a.re, -a.jm}; }
    // (a + jb)(s + jt) = (as + bt) + j(at + bs)
    friend ParaComplex operator*(ParaComplex a, ParaComplex b) {
        return {a.re * b.re + a.jm * b.jm, a.re * b.jm + a.jm * b.re};
    }
    friend ParaComplex operator*(double s, ParaComplex a) { return {s * a.re, s * a.jm}; }
    friend ParaComplex operator*(ParaComplex a, double s) { return {s * a.re, s * a.jm}; }
    friend bool operator==(ParaComplex a, ParaComplex b) { return a.re == b.re && a.jm == b.jm; }
};

inline ParaComplex conj(ParaComplex v) { return {v.re, -v.jm}; }

// v * conj(v) is real; its real part re^2 - jm^2 is the (indefinite) squared modulus.
inline double modulus_sq(ParaComplex v) { return v.re * v.re - v.jm * v.jm; }

inline bool is_null(ParaComplex v, double tol = 0.0) { return std::abs(modulus_sq(v)) <= tol; }

using ParaVector = std::vector<ParaComplex>;

// (x_1 + j y_1, ..., x_m + j y_m) -> (x_1..x_m, y_1..y_m), the coordinate order
// of the neutral plane; multiplication by j becomes the block swap.
inline std::vector<double> identify(const ParaVector& v) {
    const std::size_t m = v.size();
    std::vector<double> r(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        r[i] = v[i].re;
        r[m + i] = v[i].jm;
    }
    return r;
}

inline ParaVector unidentify(const std::vector<double>& x) {
    if (x.size() % 2 != 0) throw std::invalid_argument("unidentify requires even length");
    const std::size_t m = x.size() / 2;
    ParaVector v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = {x[i], x[m + i]};
    return v;
}

// Neutral pairing on R^{2h}: minus on the first half, plus on the second.
inline double pseudo_dot(const std::vector<double>& u, const std::vector<double>& v) {
    if (u.size() != v.size()) throw std::invalid_argument("pseudo_dot length mismatch");
    if (u.size() % 2 != 0) throw std::invalid_argument("pseudo_dot requires even length");
    const std::size_t h = u.size() / 2;
    double neg = 0.0, pos = 0.0;
    for (std::size_t i = 0; i < h; ++i) neg += u[i] * v[i];
    for (std::size_t i = h; i < 2 * h; ++i) pos += u[i] * v[i];
    return pos - neg;
}

inline double euclid_dot(const std::vector<double>& u, const std::vector<double>& v) {
    if (u.size() != v.size()) throw std::invalid_argument("euclid_dot length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
    return acc;
}

}  // namespace warpcheck
