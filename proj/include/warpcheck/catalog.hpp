// The classified warped-product PR-immersions into the para-Kaehler plane and
// the exact solutions of their warping PDE system.
//
// Coefficient data: a, b are real h-vectors with b_1 = 0 (cases 1-3); the
// combined vector v = (a, b) has neutral causal character +1 / -1 / 0 for the
// sphere / hyperbolic / flat fiber respectively. Writing
//   S = sum a_i s_i + sum b_j t_j,   T = sum a_i t_i + sum b_j s_j,
// the warp is f^2 = S^2 - T^2 for cases 1-3 and f^2 = sum b_k (s_k - eps t_k)
// for case 4. Case 4 is kept in two flavors: the printed chart, whose pullback
// metric is degenerate everywhere (a negative control), and a corrected chart
// for h = p = 1 that is a genuine isometric immersion.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ambient.hpp"
#include "chart.hpp"
#include "fiber.hpp"
#include "immersion.hpp"
#include "jet.hpp"
#include "paracomplex.hpp"
#include "sampling.hpp"

namespace warpcheck {

enum class CaseTag { Case1, Case2, Case3, Case4Printed, Case4Corrected, Custom };

inline const char* case_name(CaseTag t) {
    switch (t) {
        case CaseTag::Case1: return "case1";
        case CaseTag::Case2: return "case2";
        case CaseTag::Case3: return "case3";
        case CaseTag::Case4Printed: return "case4-printed";
        case CaseTag::Case4Corrected: return "case4-corrected";
        case CaseTag::Custom: return "custom";
    }
    return "?";
}

struct ImmersionCase {
    CaseTag tag = CaseTag::Case1;
    int h = 1, p = 1;
    Vec a, b;     // size h each; b[0] = 0 for cases 1-3
    int eps = 1;  // case 4
    double c = 0.5;  // case 4 corrected

    static ImmersionCase case1(int h, int p, Vec a, Vec b) {
        ImmersionCase ic{CaseTag::Case1, h, p, std::move(a), std::move(b)};
        ic.validate_common("case1", 2);
        ic.require_causal_type(+1.0, "case1 requires a space-like coefficient vector, <v,v> = 1");
        return ic;
    }

    static ImmersionCase case2(int h, int p, Vec a, Vec b) {
        ImmersionCase ic{CaseTag::Case2, h, p, std::move(a), std::move(b)};
        ic.validate_common("case2", 1);
        ic.require_causal_type(-1.0, "case2 requires a time-like coefficient vector, <v,v> = -1");
        return ic;
    }

    static ImmersionCase case3(int h, int p, Vec a, Vec b) {
        ImmersionCase ic{CaseTag::Case3, h, p, std::move(a), std::move(b)};
        ic.validate_common("case3", 2);
        ic.require_causal_type(0.0, "case3 requires a light-like coefficient vector, <v,v> = 0");
        double m = 0.0;
        for (double x : ic.a) m = std::max(m, std::abs(x));
        for (double x : ic.b) m = std::max(m, std::abs(x));
        if (m == 0.0) throw std::invalid_argument("case3 requires a nonzero coefficient vector");
        return ic;
    }

    static ImmersionCase case4_printed(int h, int p, Vec b, int eps) {
        ImmersionCase ic;
        ic.tag = CaseTag::Case4Printed;
        ic.h = h;
        ic.p = p;
        ic.a.assign(h, 0.0);
        ic.b = std::move(b);
        ic.eps = eps;
        if (h < 1 || p < 1) throw std::invalid_argument("case4 requires h >= 1 and p >= 1");
        if (static_cast<int>(ic.b.size()) != h) throw std::invalid_argument("case4 needs h coefficients b");
        if (ic.b[0] <= 0.0) throw std::invalid_argument("case4 requires b_1 > 0");
        if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
        return ic;
    }

    static ImmersionCase case4_corrected(int eps, double c) {
        ImmersionCase ic;
        ic.tag = CaseTag::Case4Corrected;
        ic.h = 1;
        ic.p = 1;
        ic.a = {0.0};
        ic.b = {1.0};
        ic.eps = eps;
        ic.c = c;
        if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
        if (c == 0.0) throw std::invalid_argument("case4-corrected requires c != 0");
        return ic;
    }

    // reference parameters used by the acceptance battery
    static ImmersionCase reference(CaseTag t) {
        switch (t) {
            case CaseTag::Case1: return case1(2, 2, {1.0, 0.0}, {0.0, std::sqrt(2.0)});
            case CaseTag::Case2: return case2(1, 2, {1.0}, {0.0});
            case CaseTag::Case3: return case3(2, 1, {1.0, 0.0}, {0.0, 1.0});
            case CaseTag::Case4Printed: return case4_printed(1, 1, {1.0}, 1);
            case CaseTag::Case4Corrected: return case4_corrected(1, 0.5);
            case CaseTag::Custom: break;
        }
        throw std::invalid_argument("no reference parameters for custom cases");
    }

    bool expect_degenerate() const { return tag == CaseTag::Case4Printed; }

    Fiber fiber() const {
        switch (tag) {
            case CaseTag::Case1: return {FiberKind::Sphere, p};
            case CaseTag::Case2: return {FiberKind::Hyperbolic, p};
            default: return {FiberKind::Flat, p};
        }
    }

    int ambient_m() const { return h + p; }

    WarpSqField warp_sq() const {
        if (tag == CaseTag::Case4Printed || tag == CaseTag::Case4Corrected) {
            return [b = b, eps = eps, h = h](const std::vector<Jet2>& q) {
                Jet2 acc = Jet2::constant(0.0, q[0].vars());
                for (int k = 0; k < h; ++k) acc += b[k] * (q[k] - static_cast<double>(eps) * q[h + k]);
                return acc;
            };
        }
        return [a = a, b = b, h = h](const std::vector<Jet2>& q) {
            const auto [S, T] = st_pair(a, b, h, q);
            return S * S - T * T;
        };
    }

    WarpedChart chart() const { return {h, fiber(), warp_sq()}; }

    // S and T on base-coordinate jets (s_1..s_h, t_1..t_h)
    static std::pair<Jet2, Jet2> st_pair(const Vec& a, const Vec& b, int h,
                                         const std::vector<Jet2>& q) {
        Jet2 S = Jet2::constant(0.0, q[0].vars());
        Jet2 T = S;
        for (int i = 0; i < h; ++i) {
            S += a[i] * q[i] + b[i] * q[h + i];
            T += a[i] * q[h + i] + b[i] * q[i];
        }
        return {S, T};
    }

    // ambient components on chart-coordinate jets (base then fiber), any seed space
    std::vector<Jet2> eval(const std::vector<Jet2>& q) const {
        const int nv = q[0].vars();
        const int m = ambient_m();
        std::vector<Jet2> out(2 * m, Jet2::constant(0.0, nv));
        const std::vector<Jet2> qf(q.begin() + 2 * h, q.end());

        switch (tag) {
            case CaseTag::Case1:
            case CaseTag::Case2: {
                const double sign = tag == CaseTag::Case1 ? -1.0 : 1.0;
                const auto [S, T] = st_pair(a, b, h, q);
                const std::vector<Jet2> w = fiber().model_jets_from(qf);
                const Jet2 cfac = (w[0] - 1.0) * sign;
                for (int i = 0; i < h; ++i) {
                    out[i] = q[i] + cfac * (a[i] * S - b[i] * T);
                    out[m + i] = q[h + i] + cfac * (a[i] * T - b[i] * S);
                }
                for (int aa = 1; aa <= p; ++aa) {
                    out[h + aa - 1] = w[aa] * T;      // x_{h+a}
                    out[m + h + aa - 1] = w[aa] * S;  // y_{h+a}
                }
                break;
            }
            case CaseTag::Case3: {
                const auto [S, T] = st_pair(a, b, h, q);
                Jet2 quad = Jet2::constant(0.0, nv);
                for (const Jet2& u : qf) quad += u * u;
                quad *= 0.5;
                for (int i = 0; i < h; ++i) {
                    out[i] = q[i] + quad * (a[i] * S - b[i] * T);
                    out[m + i] = q[h + i] + quad * (a[i] * T - b[i] * S);
                }
                for (int aa = 0; aa < p; ++aa) {
                    out[h + aa] = qf[aa] * T;
                    out[m + h + aa] = qf[aa] * S;
                }
                break;
            }
            case CaseTag::Case4Printed: {
                Jet2 quad = Jet2::constant(0.0, nv);
                for (const Jet2& u : qf) quad += u * u;
                const double rb = std::sqrt(b[0]) / 2.0;
                for (int i = 0; i < h; ++i) {
                    out[i] = q[i] + quad * (b[i] / 2.0);
                    out[m + i] = q[h + i] + quad * (eps * b[i] / 2.0);
                }
                for (int aa = 0; aa < p; ++aa) {
                    out[h + aa] = qf[aa] * rb;
                    out[m + h + aa] = qf[aa] * (eps * rb);
                }
                break;
            }
            case CaseTag::Case4Corrected: {
                const Jet2 &s = q[0], &t = q[1], &u = q[2];
                const Jet2 qq = s - static_cast<double>(eps) * t;  // f^2
                const Jet2 uu4 = u * u * 0.25;
                const Jet2 cuq = (u * qq) * c;
                const Jet2 lin = u * (1.0 / (4.0 * c));
                if (eps == 1) {
                    out[0] = s + uu4;
                    out[1] = cuq - lin;
                    out[2] = t + uu4;
                    out[3] = -cuq - lin;
                } else {
                    out[0] = s + uu4;
                    out[1] = cuq - lin;
                    out[2] = t - uu4;
                    out[3] = cuq + lin;
                }
                break;
            }
            case CaseTag::Custom:
                throw std::logic_error("custom cases carry their own immersion");
        }
        return out;
    }

    Immersion immersion() const {
        Immersion im;
        im.ambient = Ambient::neutral_plane(ambient_m());
        im.chart_dim = 2 * h + p;
        im.components = [self = *this](const Vec& xi) { return self.eval(seed_all(xi)); };
        im.in_domain = [ch = chart()](const Vec& xi) { return ch.in_domain(xi); };
        return im;
    }

    // leaf through fixed fiber point u0: totally geodesic copy of the base
    Immersion base_leaf(const Vec& u0) const {
        if (static_cast<int>(u0.size()) != p) throw std::invalid_argument("base leaf needs a fiber point");
        Immersion im;
        im.ambient = Ambient::neutral_plane(ambient_m());
        im.chart_dim = 2 * h;
        im.components = [self = *this, u0](const Vec& st) {
            std::vector<Jet2> q = seed_all(st);
            for (int aa = 0; aa < self.p; ++aa) q.push_back(Jet2::constant(u0[aa], 2 * self.h));
            return self.eval(q);
        };
        im.in_domain = [ch = chart(), u0](const Vec& st) {
            Vec xi = st;
            xi.insert(xi.end(), u0.begin(), u0.end());
            return ch.in_domain(xi);
        };
        return im;
    }

    // leaf through fixed base point: totally umbilical copy of the fiber
    Immersion fiber_leaf(const Vec& st0) const {
        if (static_cast<int>(st0.size()) != 2 * h)
            throw std::invalid_argument("fiber leaf needs a base point");
        Immersion im;
        im.ambient = Ambient::neutral_plane(ambient_m());
        im.chart_dim = p;
        im.components = [self = *this, st0](const Vec& u) {
            std::vector<Jet2> q;
            q.reserve(2 * self.h + self.p);
            for (int i = 0; i < 2 * self.h; ++i) q.push_back(Jet2::constant(st0[i], self.p));
            for (int aa = 0; aa < self.p; ++aa) q.push_back(Jet2::seed(u[aa], aa, self.p));
            return self.eval(q);
        };
        im.in_domain = [ch = chart(), st0](const Vec& u) {
            Vec xi = st0;
            xi.insert(xi.end(), u.begin(), u.end());
            return ch.in_domain(xi);
        };
        return im;
    }

    // para-complex packaging of cases 1-3 (values only): with v_i = a_i + j b_i
    // and z_i = s_i + j t_i, sum v_j z_j = S + jT, and the catalog immersion is
    //   Phi_i     = z_i -/+ conj(v_i) (w_0 - 1) (S + jT)      (case 1 / case 2)
    //   Phi_i     = z_i + conj(v_i) (1/2 sum u^2) (S + jT)    (case 3)
    //   Phi_{h+a} = w_a j (S + jT)   resp.  u_a j (S + jT).
    Vec eval_paracomplex(const Vec& xi) const {
        if (tag != CaseTag::Case1 && tag != CaseTag::Case2 && tag != CaseTag::Case3)
            throw std::logic_error("para-complex packaging exists for cases 1-3 only");
        ParaVector z(h);
        for (int i = 0; i < h; ++i) z[i] = {xi[i], xi[h + i]};
        ParaComplex st{0.0, 0.0};
        for (int i = 0; i < h; ++i) st = st + ParaComplex{a[i], b[i]} * z[i];
        const ParaComplex jst = ParaComplex{0.0, 1.0} * st;

        const Vec u(xi.begin() + 2 * h, xi.end());
        ParaVector phi(ambient_m());
        if (tag == CaseTag::Case3) {
            double quad = 0.0;
            for (double ua : u) quad += ua * ua;
            for (int i = 0; i < h; ++i)
                phi[i] = z[i] + (0.5 * quad) * (conj(ParaComplex{a[i], b[i]}) * st);
            for (int aa = 0; aa < p; ++aa) phi[h + aa] = u[aa] * jst;
        } else {
            const double sign = tag == CaseTag::Case1 ? -1.0 : 1.0;
            const std::vector<double> w = fiber().chart_to_model(u);
            for (int i = 0; i < h; ++i)
                phi[i] = z[i] + (sign * (w[0] - 1.0)) * (conj(ParaComplex{a[i], b[i]}) * st);
            for (int aa = 1; aa <= p; ++aa) phi[h + aa - 1] = w[aa] * jst;
        }
        return identify(phi);
    }

private:
    void validate_common(const char* name, int min_h) const {
        if (h < min_h)
            throw std::invalid_argument(std::string(name) + " requires h >= " + std::to_string(min_h));
        if (p < 1) throw std::invalid_argument("fiber dimension p must be >= 1");
        if (static_cast<int>(a.size()) != h || static_cast<int>(b.size()) != h)
            throw std::invalid_argument("coefficient vectors a, b must have length h");
        if (b[0] != 0.0) throw std::invalid_argument("b_1 must be 0");
        if (a[0] <= 0.0) throw std::invalid_argument("a_1 must be positive");
    }

    void require_causal_type(double want, const char* msg) const {
        Vec v = a;
        v.insert(v.end(), b.begin(), b.end());
        if (std::abs(pseudo_dot(v, v) - want) > 1e-12) throw std::invalid_argument(msg);
    }
};

// Embeds an immersion totally geodesically into a larger para-Kaehler plane by
// zero-padding both blocks; enlarges the purely-real normal bundle nu.
inline Immersion extend_ambient(const Immersion& im, int extra) {
    if (!im.ambient.neutral) throw std::invalid_argument("extend_ambient needs the neutral plane");
    Immersion out = im;
    const int m = im.ambient.m;
    out.ambient = Ambient::neutral_plane(m + extra);
    out.components = [inner = im.components, m, extra](const Vec& xi) {
        std::vector<Jet2> c = inner(xi);
        const int nv = c[0].vars();
        std::vector<Jet2> padded;
        padded.reserve(2 * (m + extra));
        for (int i = 0; i < m; ++i) padded.push_back(c[i]);
        for (int i = 0; i < extra; ++i) padded.push_back(Jet2::constant(0.0, nv));
        for (int i = 0; i < m; ++i) padded.push_back(c[m + i]);
        for (int i = 0; i < extra; ++i) padded.push_back(Jet2::constant(0.0, nv));
        return padded;
    };
    return out;
}

// Seeded quadratic perturbation of an immersion: each ambient component gains
// amplitude * (random symmetric quadratic form in the chart coordinates).
// Destroys the PR property and the equality case; used as a negative control.
inline Immersion perturb_quadratic(const Immersion& im, std::uint64_t seed, double amplitude) {
    Immersion out = im;
    out.components = [inner = im.components, seed, amplitude](const Vec& xi) {
        std::vector<Jet2> c = inner(xi);
        const int n = static_cast<int>(xi.size());
        std::vector<Jet2> q = seed_all(xi);
        SampleStream rng{seed};
        std::uint64_t k = 0;
        for (auto& comp : c) {
            Jet2 bump = Jet2::constant(0.0, n);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    const double coeff = 2.0 * rng.uniform(k++) - 1.0;
                    bump += (coeff * amplitude) * (q[i] * q[j]);
                }
            comp += bump;
        }
        return c;
    };
    return out;
}

// ---------------------------------------------------------------------------
// Exact solutions psi(z) of the warping PDE system on R^{2h}, z = (s, t):
//   psi_{s_i s_j} + psi_{s_i} psi_{s_j} + psi_{t_i} psi_{t_j} = 0
//   psi_{s_i t_j} + psi_{s_i} psi_{t_j} + psi_{t_i} psi_{s_j} = 0
//   psi_{t_i t_j} + psi_{t_i} psi_{t_j} + psi_{s_i} psi_{s_j} = 0
// Pairings here are Euclidean; jv swaps the s- and t-halves of v.
// ---------------------------------------------------------------------------

struct PdeSolution {
    enum class Family { Sol1, Sol2 };
    Family family = Family::Sol1;
    int h = 1;
    Vec v;               // sol1: (a_1..a_h, 0, b_2..b_h)
    double c1 = 0, c2 = 0;
    Vec v1, v2;          // sol2: (0, a_2..a_h, 0, eps a_2..a_h), (b, -eps b)
    double c = 0, d = 0;

    //   psi = 1/2 ln |(<v,z> + c1)^2 - (<jv,z> + c2)^2|
    static PdeSolution sol1(int h, Vec v, double c1 = 0, double c2 = 0) {
        PdeSolution s;
        s.family = Family::Sol1;
        s.h = h;
        s.v = std::move(v);
        s.c1 = c1;
        s.c2 = c2;
        if (static_cast<int>(s.v.size()) != 2 * h) throw std::invalid_argument("sol1 needs a 2h-vector v");
        if (s.v[0] == 0.0) throw std::invalid_argument("sol1 requires a_1 != 0");
        if (s.v[h] != 0.0) throw std::invalid_argument("sol1 requires b_1 = 0");
        return s;
    }

    //   psi = 1/2 ln |(<v1,z> + c)(<v2,z> + d)|
    // a_tail = (a_2..a_h); all-zero a_tail is the constant-first-factor branch
    // and then requires c != 0.
    static PdeSolution sol2(int h, Vec a_tail, Vec b, int eps, double c = 1, double d = 0) {
        if (static_cast<int>(a_tail.size()) != h - 1)
            throw std::invalid_argument("sol2 needs h-1 coefficients a_2..a_h");
        if (static_cast<int>(b.size()) != h) throw std::invalid_argument("sol2 needs h coefficients b");
        if (b[0] == 0.0) throw std::invalid_argument("sol2 requires b_1 != 0");
        if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
        PdeSolution s;
        s.family = Family::Sol2;
        s.h = h;
        s.c = c;
        s.d = d;
        s.v1.assign(2 * h, 0.0);
        s.v2.assign(2 * h, 0.0);
        bool any_a = false;
        for (int i = 1; i < h; ++i) {
            s.v1[i] = a_tail[i - 1];
            s.v1[h + i] = eps * a_tail[i - 1];
            any_a = any_a || a_tail[i - 1] != 0.0;
        }
        for (int i = 0; i < h; ++i) {
            s.v2[i] = b[i];
            s.v2[h + i] = -eps * b[i];
        }
        if (!any_a && c == 0.0)
            throw std::invalid_argument("sol2 with zero a-part requires the offset c != 0");
        return s;
    }

    // smallest |log argument|; sampling keeps this above a margin
    double domain_margin(const Vec& z) const {
        if (family == Family::Sol1) {
            const double A = euclid_dot(v, z) + c1;
            const double B = euclid_dot(jswap(v), z) + c2;
            return std::abs(A * A - B * B);
        }
        return std::min(std::abs(euclid_dot(v1, z) + c), std::abs(euclid_dot(v2, z) + d));
    }

    Jet2 psi(const Vec& z) const {
        if (static_cast<int>(z.size()) != 2 * h) throw std::invalid_argument("pde point has wrong dimension");
        std::vector<Jet2> zj = seed_all(z);
        auto pair_with = [&](const Vec& w, double off) {
            Jet2 acc = Jet2::constant(off, 2 * h);
            for (int i = 0; i < 2 * h; ++i) acc += w[i] * zj[i];
            return acc;
        };
        Jet2 arg = Jet2::constant(0.0, 2 * h);
        if (family == Family::Sol1) {
            const Jet2 A = pair_with(v, c1);
            const Jet2 B = pair_with(jswap(v), c2);
            arg = A * A - B * B;
        } else {
            arg = pair_with(v1, c) * pair_with(v2, d);
        }
        if (arg.value() == 0.0) throw std::domain_error("pde solution evaluated on its singular set");
        if (arg.value() < 0.0) arg = -arg;
        return log(arg) * 0.5;
    }

private:
    static Vec jswap(const Vec& w) {
        const std::size_t hh = w.size() / 2;
        Vec r(w.size());
        for (std::size_t i = 0; i < hh; ++i) {
            r[i] = w[hh + i];
            r[hh + i] = w[i];
        }
        return r;
    }
};

// max |residual| of the three PDE families over all index pairs (i, j)
inline double pde_residual(const Jet2& psi, int h) {
    double worst = 0.0;
    auto upd = [&](double r) { worst = std::max(worst, std::abs(r)); };
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
            upd(psi.hess(i, j) + psi.grad(i) * psi.grad(j) + psi.grad(h + i) * psi.grad(h + j));
            upd(psi.hess(i, h + j) + psi.grad(i) * psi.grad(h + j) + psi.grad(h + i) * psi.grad(j));
            upd(psi.hess(h + i, h + j) + psi.grad(h + i) * psi.grad(h + j) + psi.grad(i) * psi.grad(j));
        }
    return worst;
}

// |ln f to the case warp - psi of the solution| at a base point
inline double warp_solution_mismatch(const ImmersionCase& ic, const PdeSolution& sol, const Vec& st) {
    const WarpedChart ch = ic.chart();
    return std::abs(ch.psi_base_jet(st).value() - sol.psi(st).value());
}

// The solution family each catalog warp belongs to.
inline PdeSolution matching_solution(const ImmersionCase& ic) {
    if (ic.tag == CaseTag::Case4Printed || ic.tag == CaseTag::Case4Corrected)
        return PdeSolution::sol2(ic.h, Vec(ic.h - 1, 0.0), ic.b, ic.eps, 1.0, 0.0);
    Vec v = ic.a;
    v.insert(v.end(), ic.b.begin(), ic.b.end());
    return PdeSolution::sol1(ic.h, std::move(v), 0.0, 0.0);
}

}  // namespace warpcheck
