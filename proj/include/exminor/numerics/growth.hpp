#pragma once

#include "exminor/numerics/real.hpp"
#include "exminor/series/cascade.hpp"

#include <array>
#include <functional>
#include <limits>
#include <map>
#include <vector>

namespace exminor {

enum class GrowthMethod { BranchPoint, TreeFunctionSingularity, ClosedForm, CompositionCritical };

inline std::string to_string(GrowthMethod m) {
    switch (m) {
        case GrowthMethod::BranchPoint: return "BranchPoint";
        case GrowthMethod::TreeFunctionSingularity: return "TreeFunctionSingularity";
        case GrowthMethod::ClosedForm: return "ClosedForm";
        case GrowthMethod::CompositionCritical: return "CompositionCritical";
    }
    return "?";
}

struct GrowthResult {
    Real gamma, rho;
    GrowthMethod method = GrowthMethod::ClosedForm;
    Real residual;
};

inline GrowthResult growth_from_rho(const Real& rho, GrowthMethod m, const Real& residual) {
    return {1 / rho, rho, m, boost::multiprecision::abs(residual)};
}

// ---------------------------------------------------------------- networks D

struct NetworkSingularity {
    Real t0, rho_D, D_at_rho;
};

// t0 solves (1-t^2)^{-1} exp(-t^2/(1+t)) = 2 on (0,1).
inline NetworkSingularity solve_t0() {
    auto f = [](const Real& t) { return exp(-t * t / (1 + t)) / (1 - t * t) - 2; };
    NetworkSingularity s;
    s.t0 = bracket_root(f, Real("0.5"), Real("0.99"), "solve_t0");
    const Real& t = s.t0;
    s.rho_D = (1 + t) * (t - 1) * (t - 1) / (t * t * t);
    s.D_at_rho = t * t / (1 - t * t);
    return s;
}

// x as a function of d = D(x): x = L / (d (d - L)), L = ln((1+d)/2).
template <class T>
T psi_D(const T& d) {
    T L = log((d + Real(1)) / Real(2));
    return L / (d * (d - L));
}

inline Real network_residual(const Real& x, const Real& d) {
    return x * d * d / (1 + x * d) - log((1 + d) / 2);
}

// D(x) on [0, rho_D] by inverting psi_D, which increases on [1, D(rho_D)].
inline Real eval_D(const Real& x, const NetworkSingularity& s) {
    if (x < 0 || x > s.rho_D) throw std::domain_error("eval_D: x outside [0, rho_D]");
    if (x == 0) return 1;
    if (x >= psi_D(s.D_at_rho)) return s.D_at_rho;
    return bracket_root([&](const Real& d) { return psi_D(d) - x; }, Real(1) + x / 4, s.D_at_rho, "eval_D");
}
inline Real eval_D(const Real& x) { return eval_D(x, solve_t0()); }

// Taylor jet of D at x, to the given order, by reverting the jet of psi_D.
inline Jet d_jet(const Real& x, int order, const NetworkSingularity& s) {
    Real d0 = eval_D(x, s);
    Jet psi = psi_D(Jet::x(order) + d0);
    Real a1 = psi[1];
    if (order >= 1 && boost::multiprecision::abs(a1) < Real("1e-25"))
        throw NumericsError("d_jet: x is at the branch point of D");
    Jet high = psi;
    high[0] = 0;
    if (order >= 1) high[1] = 0;
    Jet h = Jet::x(order);
    Jet delta = h / a1;
    for (int i = 1; i < order; ++i) delta = (h - compose(high, delta)) / a1;
    return delta + d0;
}

// ------------------------------------------------------------ tree function

// Principal branch of R = u e^R on [0, 1/e].
inline Real eval_R(const Real& u) {
    if (u < 0) throw std::domain_error("eval_R: u < 0");
    Real ie = inv_e();
    if (u > ie) {
        if (u - ie > ie * Real("1e-40")) throw std::domain_error("eval_R: u > 1/e");
        return 1;
    }
    if (u == 0) return 0;
    if (u == ie) return 1;
    return bracket_root([&](const Real& r) { return r * exp(-r) - u; }, Real(0), Real(1), "eval_R");
}

// ------------------------------------------------------------- B_k and E_l

namespace detail {
inline const std::map<ShapeGF, long long>& cached_census(int k) {
    static const std::array<std::map<ShapeGF, long long>, 6> all = [] {
        std::array<std::map<ShapeGF, long long>, 6> a;
        for (int j = 2; j <= 5; ++j) a[j] = shape_census(j);
        return a;
    }();
    if (k < 2 || k > 5) throw std::out_of_range("shape census: k must be in 2..5");
    return all[k];
}
}  // namespace detail

// B_k(x) for k = 1..l from the shape census; index 0 is zero.
inline std::vector<Real> b_values(const Real& x, int l, const NetworkSingularity& s) {
    Real D = eval_D(x, s);
    std::vector<Real> B(l + 1, Real(0));
    if (l >= 1) B[1] = x * D / (1 + x * D);
    Real sub = 1 - x * D * D;
    for (int k = 2; k <= l; ++k)
        for (const auto& [g, mult] : detail::cached_census(k))
            B[k] += mult * pow(x, g.a) * pow(D, g.e + g.f) * pow(1 + D, g.g) / pow(sub, g.e);
    return B;
}

// Cascade operations on reals.  tree() is NaN past 1/e so callers can detect
// that x lies beyond the singularity of a lower A_j.
struct RealOps {
    Real zero() const { return Real(0); }
    Real exp(const Real& a) const { return boost::multiprecision::exp(a); }
    Real tree(const Real& a) const {
        Real ie = inv_e();
        if (a > ie * (1 + Real("1e-40"))) return std::numeric_limits<Real>::quiet_NaN();
        return eval_R(a > ie ? ie : a);
    }
    Real scale(const Real& a, long long c) const { return a * c; }
};

inline CascadeValues<Real> cascade_at(const Real& x, int l, const NetworkSingularity& s) {
    if (l < 1 || l > 5) throw std::out_of_range("cascade_at: l must be in 1..5");
    return cascade(b_values(x, l, s), l, RealOps{});
}

// Tree-function argument E_l(x) of A_l.
inline Real e_value(int l, const Real& x, const NetworkSingularity& s) { return cascade_at(x, l, s).E[l]; }
inline Real e_value(int l, const Real& x) { return e_value(l, x, solve_t0()); }

// The three-colour argument as printed, with Ahat_1^2 instead of Ahat_1 in the
// B_2 Ahat_1 Ahat_2 term.  Only rest_3 changes, and E_3 carries e^{rest_3}.
inline Real e3_printed(const Real& x, const NetworkSingularity& s) {
    auto B = b_values(x, 3, s);
    auto cv = cascade(B, 3, RealOps{});
    return cv.E[3] * exp(3 * B[2] * cv.Ahat[2] * cv.Ahat[1] * (cv.Ahat[1] - 1));
}

// Dominant singularity of A_l: rho_D for l = 1, otherwise the root of
// E_l(x) = 1/e below rho_a(l-1).
struct SingularityRoot {
    Real x, residual;
};

inline SingularityRoot rho_a_detail(int l, const NetworkSingularity& s,
                                    const std::function<Real(const Real&)>& E = {}) {
    if (l < 1 || l > 5) throw std::out_of_range("rho_a: l must be in 1..5");
    if (l == 1) return {s.rho_D, Real(0)};
    Real hi = rho_a_detail(l - 1, s).x;
    auto f = [&](const Real& x) { return (E ? E(x) : e_value(l, x, s)) - inv_e(); };
    Real x = bracket_root(f, Real(0), hi, "rho_a(" + std::to_string(l) + ")");
    return {x, f(x)};
}
inline Real rho_a(int l, const NetworkSingularity& s) { return rho_a_detail(l, s).x; }
inline Real rho_a(int l) { return rho_a(l, solve_t0()); }

// ------------------------------------------------- rooted series-parallel F

// Biconnected SP graphs: 1/2 ln(1+xD) - xD (x^2 D^2 + xD + 2 - 2x) / (4 (1+xD)).
template <class T>
T biconnected_value(const T& x, const T& D) {
    T q = x * D;
    return log(q + Real(1)) / Real(2) - q * (q * q + q + Real(2) - x * Real(2)) / ((q + Real(1)) * Real(4));
}

// B(u + h) as a jet in h.
inline Jet biconnected_jet(const Real& u, int order, const NetworkSingularity& s) {
    Jet X = Jet::x(order) + u;
    return biconnected_value(X, d_jet(u, order, s));
}

inline Real psi_f_sp(const Real& u, const NetworkSingularity& s) {
    if (u <= 0) throw std::domain_error("psi_f_sp: u must be positive");
    return u * exp(-biconnected_jet(u, 1, s)[1]);
}
inline Real psi_f_sp(const Real& u) { return psi_f_sp(u, solve_t0()); }

struct BranchPoint {
    Real u0, rho_F, residual;
};

// Maximum of psi_F: psi_F'(u) = 0 <=> 1 - u B''(u) = 0.
inline BranchPoint branch_point_sp(const NetworkSingularity& s) {
    auto g = [&](const Real& u) { return 1 - u * 2 * biconnected_jet(u, 2, s)[2]; };
    Real hi = s.rho_D * (1 - Real("1e-12"));
    Real u0 = bracket_root(g, s.rho_D / 2, hi, "branch_point_sp");
    return {u0, psi_f_sp(u0, s), g(u0)};
}
inline BranchPoint branch_point_sp() { return branch_point_sp(solve_t0()); }

// Growth constant of rd_l K4 (and of Ex (k+1) K4 for l = 2k+1).
inline GrowthResult gamma_rd_k4(int l) {
    if (l < 1 || l > 5) throw std::out_of_range("gamma_rd_k4: l must be in 1..5");
    auto s = solve_t0();
    auto bp = branch_point_sp(s);
    auto ra = rho_a_detail(l, s);
    if (ra.x < bp.u0) return growth_from_rho(psi_f_sp(ra.x, s), GrowthMethod::TreeFunctionSingularity, ra.residual);
    return growth_from_rho(bp.rho_F, GrowthMethod::CompositionCritical, bp.residual);
}

// ------------------------------------------------------------- outerplanar

inline Real outer_network_value(const Real& x) {
    if (x <= 0) throw std::domain_error("outer_network_value: x must be positive");
    return (1 + x - sqrt(x * x - 6 * x + 1)) / (4 * x);
}

// rho(D~) as the smaller root of x^2 - 6x + 1.
inline Real rho_outer_network() {
    return bracket_root([](const Real& x) { return x * x - 6 * x + 1; }, Real(0), Real("0.5"), "rho_outer_network");
}

inline Real psi_f_outer(const Real& u) { return u * exp((sqrt(1 - 6 * u + u * u) - 5 * u - 1) / 8); }

// Unique solution of 2^l x D~(x) = 1.
inline Rational r_l(int l) {
    if (l < 2 || l > 11) throw std::out_of_range("r_l: l must be in 2..11");
    Rational p = Rational(1) / Rational(Integer(1) << l);
    return p * (1 - Rational(1) / Rational((Integer(1) << l) - 1));
}

inline Real outer_tau() {
    auto f = [](const Real& u) { return ((3 * u - 28) * u + 70) * u * u - 58 * u + 8; };
    return bracket_root(f, Real(0), Real("0.2"), "outer_tau");
}

// gamma(rd_l {K23, K4}) = 1 / psi_F(r_l).
inline GrowthResult outer_rd(int l) {
    Real r = to_real(r_l(l));
    Real resid = (1 << l) * r * outer_network_value(r) - 1;
    return growth_from_rho(psi_f_outer(r), GrowthMethod::ClosedForm, resid);
}

// gamma'_k for Ex (k+1) {K23, K4}.
inline GrowthResult outer_ex(int k) {
    if (k < 1 || k > 5) throw std::out_of_range("outer_ex: k must be in 1..5");
    if (k >= 2) return outer_rd(2 * k + 1);
    Real tau = outer_tau();
    Real resid = ((3 * tau - 28) * tau + 70) * tau * tau - 58 * tau + 8;
    return growth_from_rho(psi_f_outer(tau) / 2, GrowthMethod::BranchPoint, resid);
}

// ---------------------------------------------------- tree substitution

using RealFunction = std::function<Real(const Real&)>;

struct TreeFraction {
    Real rho, a, residual;
};

// For A'(x, s) with f(x, s) = s x D I e^{s x D (L - I)}: rho solves f(rho, 1) = 1/e
// inside (0, radius), and a = f_s / (rho f_x) by central differences.
inline TreeFraction tree_fraction(const RealFunction& D, const RealFunction& I, const RealFunction& L,
                                  const Real& radius) {
    auto f = [&](const Real& x, const Real& sv) {
        Real xd = x * D(x);
        return sv * xd * I(x) * exp(sv * xd * (L(x) - I(x)));
    };
    auto g = [&](const Real& x) { return f(x, Real(1)) - inv_e(); };
    Real hi = radius * (1 - Real("1e-30"));
    if (g(hi) <= 0) throw NumericsError("tree_fraction: f(x,1) = 1/e has no solution inside the component radius");
    TreeFraction t;
    t.rho = bracket_root(g, Real(0), hi, "tree_fraction");
    t.residual = g(t.rho);
    if (t.rho * D(t.rho) * I(t.rho) >= 1) throw NumericsError("tree_fraction: rho D(rho) I(rho) >= 1");
    Real h("1e-15");
    Real fs = (f(t.rho, 1 + h) - f(t.rho, 1 - h)) / (2 * h);
    Real fx = (f(t.rho + h, Real(1)) - f(t.rho - h, Real(1))) / (2 * h);
    t.a = fs / (t.rho * fx);
    return t;
}

}  // namespace exminor
