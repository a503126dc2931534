#pragma once

#include "exminor/series/cascade.hpp"

namespace exminor {

// Biconnected series-parallel graphs (K2 included), rooted at no vertex:
//   B = 1/2 ln(1+xD) - xD (x^2 D^2 + xD + 2 - 2x) / (4 (1+xD))
inline TruncatedEGF biconnected_sp(const TruncatedEGF& D) {
    auto x = TruncatedEGF::x(D.order());
    auto q = x * D;
    auto one = TruncatedEGF::constant(1, D.order());
    return log(one + q) / Rational(2) - q * (q * q + q + Rational(2) - Rational(2) * x) / (Rational(4) * (one + q));
}

struct RootedSP {
    TruncatedEGF B;  // biconnected, order N+1
    TruncatedEGF F;  // connected, rooted at a vertex
};

// Vertex-rooted connected SP graphs, F = x e^{B'(F)}.  The root is one of the
// labelled vertices (F_1 = 1).  Checked against psi_F(u) = u e^{-B'(u)} being its inverse.
inline RootedSP rooted_sp(int order) {
    auto net = sp_networks(order + 1);
    RootedSP r;
    r.B = biconnected_sp(net.D);
    auto B1 = derive(r.B);
    auto B2 = derive(B1);
    auto x = TruncatedEGF::x(order);
    std::function<TruncatedEGF(const TruncatedEGF&)> phi = [&](const TruncatedEGF& y) {
        return x * exp(compose(B1, y));
    };
    std::function<TruncatedEGF(const TruncatedEGF&)> dphi = [&](const TruncatedEGF& y) {
        return x * exp(compose(B1, y)) * compose(B2.padded(y.order()), y);
    };
    r.F = newton_implicit<Rational>(phi, dphi, order);
    auto psi = x * exp(-B1.truncated(order));
    if (compose(psi, r.F) != x) throw SeriesError("rooted_sp: psi_F(F(x)) != x");
    return r;
}

// 2^l F e^{sum_m C(l,m) A_m(F)}: graphs of the connected l-coloured class
// rooted at a rootable vertex.  l = 3 gives the three-colour series.
inline TruncatedEGF rooted_crd(int l, int order) {
    auto F = rooted_sp(order).F;
    auto cs = a_c_cascade(l, order);
    TruncatedEGF s(order);
    for (int m = 1; m <= l; ++m) s += compose(cs.values.A[m], F) * Rational(binomial(l, m));
    return Rational(1LL << l) * F * exp(s);
}

inline TruncatedEGF rooted_crd3(int order) { return rooted_crd(3, order); }

}  // namespace exminor
