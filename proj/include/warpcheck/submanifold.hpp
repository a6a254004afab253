// Second fundamental form and the identity battery for immersed submanifolds
// of the para-Kaehler plane: P/F decomposition of the product structure,
// shape operators, squared norms and their distribution blocks, mean
// curvature, the shape-operator identities tied to warped products, the
// optimal-inequality margin, and the Gauss/Codazzi residuals.
//
// Convention: ||X||_2 denotes the indefinite squared norm g(X, X) throughout.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "chart.hpp"
#include "connection.hpp"
#include "immersion.hpp"
#include "jet.hpp"
#include "linalg.hpp"

namespace warpcheck {

struct SecondFF {
    int n = 0, adim = 0;
    Vec sig;  // [i][j][comp], symmetric in (i, j)

    Vec at(int i, int j) const {
        Vec v(adim);
        for (int c = 0; c < adim; ++c)
            v[c] = sig[(static_cast<std::size_t>(i) * n + j) * adim + c];
        return v;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : sig) m = std::max(m, std::abs(v));
        return m;
    }
};

// sigma(d_i, d_j) = normal part of the ambient Hessian column
inline SecondFF second_ff(const FramedPoint& fp) {
    SecondFF s;
    s.n = fp.n;
    s.adim = fp.ambient.dim;
    s.sig.assign(static_cast<std::size_t>(fp.n) * fp.n * fp.ambient.dim, 0.0);
    for (int i = 0; i < fp.n; ++i)
        for (int j = i; j < fp.n; ++j) {
            const Vec v = fp.normal_part(fp.hess_vec(i, j));
            for (int c = 0; c < fp.ambient.dim; ++c) {
                s.sig[(static_cast<std::size_t>(i) * fp.n + j) * fp.ambient.dim + c] = v[c];
                s.sig[(static_cast<std::size_t>(j) * fp.n + i) * fp.ambient.dim + c] = v[c];
            }
        }
    return s;
}

// residual of sigma's normality: tangential parts should vanish
inline double sigma_tangency_residual(const FramedPoint& fp, const SecondFF& s) {
    double worst = 0.0;
    for (int i = 0; i < fp.n; ++i)
        for (int j = i; j < fp.n; ++j) worst = std::max(worst, max_abs(fp.tangential(s.at(i, j))));
    return worst;
}

// S_sigma = G^{ik} G^{jl} g0(sigma_ij, sigma_kl), restricted to index sets A
// (for i, k) and B (for j, l). With a block-diagonal Gram the full contraction
// splits exactly into the D/D-perp blocks.
inline double s_sigma_restricted(const FramedPoint& fp, const SecondFF& s,
                                 const std::vector<int>& a_idx, const std::vector<int>& b_idx) {
    double acc = 0.0;
    for (int i : a_idx)
        for (int k : a_idx) {
            const double gik = fp.gram_inv(i, k);
            if (gik == 0.0) continue;
            for (int j : b_idx)
                for (int l : b_idx) {
                    const double gjl = fp.gram_inv(j, l);
                    if (gjl == 0.0) continue;
                    acc += gik * gjl * fp.pairing(s.at(i, j), s.at(k, l));
                }
        }
    return acc;
}

inline std::vector<int> all_indices(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

inline double s_sigma(const FramedPoint& fp, const SecondFF& s) {
    const std::vector<int> all = all_indices(fp.n);
    return s_sigma_restricted(fp, s, all, all);
}

// Splits the chart frame into the invariant distribution D (base directions)
// and the anti-invariant D-perp (fiber directions).
struct Split {
    std::vector<int> d, dp;
    static Split warped(int h, int p) {
        Split sp;
        for (int i = 0; i < 2 * h; ++i) sp.d.push_back(i);
        for (int a = 0; a < p; ++a) sp.dp.push_back(2 * h + a);
        return sp;
    }
};

struct SigmaBlocks {
    double dd = 0.0, ddp = 0.0, dpdp = 0.0, total = 0.0;
    double additivity_residual = 0.0;  // |total - (dd + 2 ddp + dpdp)| / (1 + |total|)
};

inline SigmaBlocks sigma_blocks(const FramedPoint& fp, const SecondFF& s, const Split& sp) {
    SigmaBlocks b;
    b.dd = s_sigma_restricted(fp, s, sp.d, sp.d);
    b.ddp = s_sigma_restricted(fp, s, sp.d, sp.dp);
    b.dpdp = s_sigma_restricted(fp, s, sp.dp, sp.dp);
    b.total = s_sigma(fp, s);
    b.additivity_residual = std::abs(b.total - (b.dd + 2.0 * b.ddp + b.dpdp)) / (1.0 + std::abs(b.total));
    return b;
}

// H = (1/n) G^{ij} sigma_ij
inline Vec mean_curvature(const FramedPoint& fp, const SecondFF& s) {
    Vec h(fp.ambient.dim, 0.0);
    for (int i = 0; i < fp.n; ++i)
        for (int j = 0; j < fp.n; ++j) {
            const double gij = fp.gram_inv(i, j);
            if (gij == 0.0) continue;
            const Vec sij = s.at(i, j);
            for (int c = 0; c < fp.ambient.dim; ++c) h[c] += gij * sij[c];
        }
    for (double& v : h) v /= fp.n;
    return h;
}

// quasi-minimal: H light-like and nowhere zero
struct QuasiMinimal {
    double null_residual = 0.0;  // |g0(H, H)|
    double h_inf = 0.0;          // max |H component|
};

inline QuasiMinimal quasi_minimal_check(const FramedPoint& fp, const SecondFF& s) {
    const Vec h = mean_curvature(fp, s);
    return {std::abs(fp.pairing(h, h)), max_abs(h)};
}

// tangential / normal parts of the product structure applied to a vector
inline Vec p_of(const FramedPoint& fp, const Vec& v) { return fp.tangential(fp.ambient.structure(v)); }
inline Vec f_of(const FramedPoint& fp, const Vec& v) { return fp.normal_part(fp.ambient.structure(v)); }

// F(P X) = 0 for every tangent X characterizes the PR-submanifold property.
inline double check_fp_zero(const FramedPoint& fp) {
    double worst = 0.0;
    for (int i = 0; i < fp.n; ++i) {
        const Vec px = p_of(fp, fp.tangent(i));
        worst = std::max(worst, max_abs(f_of(fp, px)));
    }
    return worst;
}

// P^2 + tF = id on tangents (consequence of the ambient structure being
// involutive); reported as a frame-level residual.
inline double structure_decomposition_residual(const FramedPoint& fp) {
    double worst = 0.0;
    for (int i = 0; i < fp.n; ++i) {
        const Vec x = fp.tangent(i);
        const Vec px = p_of(fp, x);
        const Vec fx = f_of(fp, x);
        const Vec ppx = p_of(fp, px);
        const Vec tfx = fp.tangential(fp.ambient.structure(fx));
        for (int c = 0; c < fp.ambient.dim; ++c)
            worst = std::max(worst, std::abs(ppx[c] + tfx[c] - x[c]));
    }
    return worst;
}

// shape operator A_xi: g(A_xi X, Y) = g0(sigma(X, Y), xi), as a chart-frame
// matrix A = G^{-1} S with S_ij = g0(sigma_ij, xi)
inline Mat shape_operator(const FramedPoint& fp, const SecondFF& s, const Vec& xi_normal) {
    Mat sm(fp.n, fp.n);
    for (int i = 0; i < fp.n; ++i)
        for (int j = i; j < fp.n; ++j) {
            const double v = fp.pairing(s.at(i, j), xi_normal);
            sm(i, j) = v;
            sm(j, i) = v;
        }
    return fp.gram_inv * sm;
}

struct Lemma33Residuals {
    double adjoint = 0.0;    // g0(A_{FZ} U, P X) = g(nabla_U Z, X)
    double symmetry = 0.0;   // A_{FZ} W = A_{FW} Z on fiber pairs
};

inline Lemma33Residuals lemma33_check(const FramedPoint& fp, const SecondFF& s, const Split& sp) {
    Lemma33Residuals r;
    std::vector<Mat> a_fz;
    a_fz.reserve(sp.dp.size());
    for (int z : sp.dp) a_fz.push_back(shape_operator(fp, s, f_of(fp, fp.tangent(z))));

    for (std::size_t zi = 0; zi < sp.dp.size(); ++zi) {
        const int z = sp.dp[zi];
        for (int u = 0; u < fp.n; ++u) {
            Vec au(fp.n);
            for (int k = 0; k < fp.n; ++k) au[k] = a_fz[zi](k, u);
            const Vec au_amb = fp.push(au);
            for (int x : sp.d) {
                const double lhs = fp.pairing(au_amb, p_of(fp, fp.tangent(x)));
                // g(nabla_U Z, X) = g0(ambient Hessian column, X) since X is tangent
                const double rhs = fp.pairing(fp.hess_vec(u, z), fp.tangent(x));
                r.adjoint = std::max(r.adjoint, std::abs(lhs - rhs));
            }
        }
    }

    for (std::size_t zi = 0; zi < sp.dp.size(); ++zi)
        for (std::size_t wi = zi + 1; wi < sp.dp.size(); ++wi) {
            const int z = sp.dp[zi], w = sp.dp[wi];
            for (int k = 0; k < fp.n; ++k)
                r.symmetry = std::max(r.symmetry, std::abs(a_fz[zi](k, w) - a_fz[wi](k, z)));
        }
    return r;
}

// A_{FZ} X = (P X (ln f)) Z for X in D, Z in D-perp: the shape-operator form
// of the warped-product characterization. psi is ln f as a chart jet (its
// fiber partials vanish).
inline double warped_characterization_check(const FramedPoint& fp, const SecondFF& s,
                                            const Split& sp, const Jet2& psi) {
    double worst = 0.0;
    for (int z : sp.dp) {
        const Mat a = shape_operator(fp, s, f_of(fp, fp.tangent(z)));
        for (int x : sp.d) {
            const Vec cx = fp.chart_components(fp.ambient.structure(fp.tangent(x)));
            double px_psi = 0.0;
            for (int b = 0; b < fp.n; ++b) px_psi += cx[b] * psi.grad(b);
            for (int k = 0; k < fp.n; ++k) {
                const double want = k == z ? px_psi : 0.0;
                worst = std::max(worst, std::abs(a(k, x) - want));
            }
        }
    }
    return worst;
}

// Projection of a normal vector onto span{F Z_a : Z_a fiber frame} using the
// g0-Gram of that basis; the complement is the purely-real normal bundle nu.
class NormalSplitter {
public:
    NormalSplitter(const FramedPoint& fp, const Split& sp) : fp_(&fp) {
        for (int z : sp.dp) fz_.push_back(f_of(fp, fp.tangent(z)));
        const int q = static_cast<int>(fz_.size());
        Mat m(q, q);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) m(a, b) = fp.pairing(fz_[a], fz_[b]);
        lu_.emplace(m);
        if (lu_->singular()) throw DegenerateMetric(0.0);
    }

    Vec coefficients(const Vec& normal_vec) const {
        const int q = static_cast<int>(fz_.size());
        Vec rhs(q);
        for (int a = 0; a < q; ++a) rhs[a] = fp_->pairing(fz_[a], normal_vec);
        return lu_->solve(rhs);
    }

    Vec project(const Vec& normal_vec) const {
        const Vec c = coefficients(normal_vec);
        Vec out(fp_->ambient.dim, 0.0);
        for (std::size_t a = 0; a < fz_.size(); ++a)
            for (int k = 0; k < fp_->ambient.dim; ++k) out[k] += c[a] * fz_[a][k];
        return out;
    }

    Vec nu_part(const Vec& normal_vec) const {
        Vec pr = project(normal_vec);
        Vec out(normal_vec.size());
        for (std::size_t k = 0; k < normal_vec.size(); ++k) out[k] = normal_vec[k] - pr[k];
        return out;
    }

    const std::vector<Vec>& fz_basis() const { return fz_; }

private:
    const FramedPoint* fp_;
    std::vector<Vec> fz_;
    std::optional<Lu> lu_;
};

// ||sigma_nu^D||_2: D-block contraction of the nu-components of sigma.
inline double sigma_nu_d_norm(const FramedPoint& fp, const SecondFF& s, const Split& sp) {
    const NormalSplitter ns(fp, sp);
    const std::size_t q = sp.d.size();
    std::vector<Vec> nu(q * q);
    for (std::size_t ii = 0; ii < q; ++ii)
        for (std::size_t jj = 0; jj < q; ++jj)
            nu[ii * q + jj] = ns.nu_part(s.at(sp.d[ii], sp.d[jj]));
    double acc = 0.0;
    for (std::size_t ii = 0; ii < q; ++ii)
        for (std::size_t kk = 0; kk < q; ++kk) {
            const double gik = fp.gram_inv(sp.d[ii], sp.d[kk]);
            if (gik == 0.0) continue;
            for (std::size_t jj = 0; jj < q; ++jj)
                for (std::size_t ll = 0; ll < q; ++ll) {
                    const double gjl = fp.gram_inv(sp.d[jj], sp.d[ll]);
                    if (gjl == 0.0) continue;
                    acc += gik * gjl * fp.pairing(nu[ii * q + jj], nu[kk * q + ll]);
                }
        }
    return acc;
}

// The optimal inequality S_sigma <= 2p ||grad ln f||_2 + ||sigma_nu^D||_2 for
// space-like fibers; the sense reverses for time-like fibers. `margin` is
// rhs - lhs oriented so that nonnegative means the inequality holds.
struct InequalityResult {
    double s_sig = 0.0;
    double grad_term = 0.0;   // 2p ||grad ln f||_2
    double nu_term = 0.0;     // ||sigma_nu^D||_2
    double margin = 0.0;
    bool fiber_spacelike = true;
};

inline InequalityResult inequality_check(const FramedPoint& fp, const SecondFF& s, const Split& sp,
                                         const Jet2& psi) {
    InequalityResult r;
    r.s_sig = s_sigma(fp, s);
    const int p = static_cast<int>(sp.dp.size());
    r.grad_term = 2.0 * p * grad_sq_norm(psi, fp.gram);
    r.nu_term = sigma_nu_d_norm(fp, s, sp);
    double fiber_sign = 0.0;
    for (int z : sp.dp) fiber_sign += fp.gram(z, z);
    r.fiber_spacelike = fiber_sign > 0.0;
    const double rhs = r.grad_term + r.nu_term;
    r.margin = r.fiber_spacelike ? rhs - r.s_sig : r.s_sig - rhs;
    return r;
}

// equality case of the least-codimension inequality: S_sigma = 2p||grad ln f||_2
// forces sigma(D, D) = sigma(D-perp, D-perp) = {0}
struct EqualityCase {
    double gap = 0.0;       // |S_sigma - 2p ||grad ln f||_2| / (1 + |S_sigma|)
    double sigma_dd = 0.0;  // max |sigma(D, D) component|
    double sigma_dpdp = 0.0;
};

inline EqualityCase equality_case_check(const FramedPoint& fp, const SecondFF& s, const Split& sp,
                                        const Jet2& psi) {
    EqualityCase e;
    const double ss = s_sigma(fp, s);
    const double grad_term = 2.0 * sp.dp.size() * grad_sq_norm(psi, fp.gram);
    e.gap = std::abs(ss - grad_term) / (1.0 + std::abs(ss));
    for (int i : sp.d)
        for (int j : sp.d) e.sigma_dd = std::max(e.sigma_dd, max_abs(s.at(i, j)));
    for (int i : sp.dp)
        for (int j : sp.dp) e.sigma_dpdp = std::max(e.sigma_dpdp, max_abs(s.at(i, j)));
    return e;
}

// Three structural conditions on sigma relative to the P/F split:
//   (i)   g0(sigma(D, D-perp), P D-perp) = 0   (reported; fails off totally
//         geodesic D-perp, which warped products with nonconstant f are not)
//   (ii)  g0(sigma(D, D), P D-perp) = 0
//   (iii) sigma(X, Y) = g(X, P Y) F Z0 mod nu for a best-fit Z0
struct Prop34Residuals {
    double dperp_geodesic = 0.0;
    double dd_component = 0.0;
    double umbilic_form = 0.0;
};

inline Prop34Residuals prop34_checks(const FramedPoint& fp, const SecondFF& s, const Split& sp) {
    Prop34Residuals r;
    std::vector<Vec> fz;
    for (int z : sp.dp) fz.push_back(f_of(fp, fp.tangent(z)));

    for (int x : sp.d)
        for (std::size_t zi = 0; zi < sp.dp.size(); ++zi)
            for (const Vec& fw : fz)
                r.dperp_geodesic =
                    std::max(r.dperp_geodesic, std::abs(fp.pairing(s.at(x, sp.dp[zi]), fw)));

    for (int x : sp.d)
        for (int y : sp.d)
            for (const Vec& fw : fz)
                r.dd_component = std::max(r.dd_component, std::abs(fp.pairing(s.at(x, y), fw)));

    // least-squares Z0 over the F-basis coefficients of sigma(D, D)
    const NormalSplitter ns(fp, sp);
    const std::size_t q = sp.dp.size();
    Vec z0(q, 0.0);
    double denom = 0.0;
    std::vector<std::pair<double, Vec>> rows;  // (g(X, PY), coefficients)
    for (int x : sp.d)
        for (int y : sp.d) {
            const Vec py = p_of(fp, fp.tangent(y));
            const double gxpy = fp.pairing(fp.tangent(x), py);
            rows.emplace_back(gxpy, ns.coefficients(s.at(x, y)));
            denom += gxpy * gxpy;
        }
    if (denom > 1e-12) {
        for (std::size_t a = 0; a < q; ++a) {
            double num = 0.0;
            for (const auto& [gxpy, c] : rows) num += gxpy * c[a];
            z0[a] = num / denom;
        }
    }
    for (const auto& [gxpy, c] : rows) {
        Vec diff(fp.ambient.dim, 0.0);
        for (std::size_t a = 0; a < q; ++a) {
            const double coeff = c[a] - gxpy * z0[a];
            for (int k = 0; k < fp.ambient.dim; ++k) diff[k] += coeff * ns.fz_basis()[a][k];
        }
        r.umbilic_form = std::max(r.umbilic_form, max_abs(diff));
    }
    return r;
}

// totally umbilical residual: sigma_ij = G_ij H
inline double umbilic_residual(const FramedPoint& fp, const SecondFF& s) {
    const Vec h = mean_curvature(fp, s);
    double worst = 0.0;
    for (int i = 0; i < fp.n; ++i)
        for (int j = 0; j < fp.n; ++j) {
            const Vec sij = s.at(i, j);
            for (int c = 0; c < fp.ambient.dim; ++c)
                worst = std::max(worst, std::abs(sij[c] - fp.gram(i, j) * h[c]));
        }
    return worst;
}

struct GaussCodazzi {
    double gauss = 0.0;
    double codazzi = 0.0;
};

// Gauss: g(R(X,Y)Z, W) = g0(sigma(Y,Z), sigma(X,W)) - g0(sigma(X,Z), sigma(Y,W))
// with flat ambient; the left side is the intrinsic curvature of the chart
// metric (certified isometric to the pullback separately).
// Codazzi: the antisymmetrized covariant derivative of sigma vanishes; the
// normal-bundle derivative is a central difference of the sigma field, the
// Christoffel terms come from the chart metric. See the tolerance note: the
// finite-difference step makes this the one residual looser than 1e-8.
inline GaussCodazzi gauss_codazzi_residual(const Immersion& im, const WarpedChart& chart,
                                           const Vec& xi, double fd_step = 1e-4) {
    const FramedPoint fp = frame_or_throw(im, xi);
    const SecondFF s = second_ff(fp);
    const int n = fp.n;
    GaussCodazzi gc;

    const MetricJets mj = chart.metric_jets(xi);
    const RiemannTensor rt(mj);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int w = 0; w < n; ++w) {
                    const double lhs = rt.lowered(w, k, i, j);
                    const double rhs =
                        fp.pairing(s.at(j, k), s.at(i, w)) - fp.pairing(s.at(i, k), s.at(j, w));
                    gc.gauss = std::max(gc.gauss, std::abs(lhs - rhs));
                }

    const Christoffels ch = christoffel_numeric(mj);
    // d_i sigma_jk by central differences, stored per direction
    std::vector<SecondFF> plus(n), minus(n);
    for (int i = 0; i < n; ++i) {
        Vec xp = xi, xm = xi;
        xp[i] += fd_step;
        xm[i] -= fd_step;
        plus[i] = second_ff(frame_or_throw(im, xp));
        minus[i] = second_ff(frame_or_throw(im, xm));
    }
    auto dsigma = [&](int i, int j, int k) {
        const Vec a = plus[i].at(j, k), b = minus[i].at(j, k);
        Vec d(a.size());
        for (std::size_t c = 0; c < a.size(); ++c) d[c] = (a[c] - b[c]) / (2.0 * fd_step);
        return d;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec diff = dsigma(i, j, k);
                const Vec dj = dsigma(j, i, k);
                for (std::size_t c = 0; c < diff.size(); ++c) diff[c] -= dj[c];
                Vec res = fp.normal_part(diff);
                for (int g = 0; g < n; ++g) {
                    const double cik = ch.at(g, i, k), cjk = ch.at(g, j, k);
                    if (cik != 0.0) {
                        const Vec sgj = s.at(g, j);
                        for (int c = 0; c < fp.ambient.dim; ++c) res[c] -= cik * sgj[c];
                    }
                    if (cjk != 0.0) {
                        const Vec sgi = s.at(g, i);
                        for (int c = 0; c < fp.ambient.dim; ++c) res[c] += cjk * sgi[c];
                    }
                }
                gc.codazzi = std::max(gc.codazzi, max_abs(res));
            }
    return gc;
}

}  // namespace warpcheck
