#pragma once

#include "exminor/series/series.hpp"

namespace exminor {

// Rooted Cayley trees, R = x e^R.
inline TruncatedEGF cayley(int order) {
    auto x = TruncatedEGF::x(order);
    std::function<TruncatedEGF(const TruncatedEGF&)> phi = [&](const TruncatedEGF& y) { return x * exp(y); };
    return newton_implicit<Rational>(phi, phi, order);
}

struct CayleyLeaf {
    BivariatePoly R;        // root counted as a leaf iff its degree is <= 1
    BivariatePoly R_tilde;  // root counted as a leaf only for the one-vertex tree
};

// z marks leaves.  Both forms go through the univariate tree function:
//   R~(x,z) = x(z-1) + R(x e^{x(z-1)})
//   R(x,z)  = R(x e^{x(z-1)}) (x(z-1) + 1) + x^2 (z-1)^2 + x(z-1)
inline CayleyLeaf cayley_leaf(int order) {
    auto R = cayley(order);
    auto x = BivariatePoly::x(order);
    auto zm1 = BivariatePoly::constant(Polynomial(std::vector<Rational>{-1, 1}), order);
    auto t = x * zm1;
    auto Rc = compose(R, x * exp(t));
    CayleyLeaf out;
    out.R = Rc * (t + Rational(1)) + t * t + t;
    out.R_tilde = t + Rc;
    return out;
}

// R~ - (xz + x(e^{R~} - 1)); zero when the closed form is right.
inline BivariatePoly cayley_leaf_tilde_residual(const BivariatePoly& Rt) {
    auto x = BivariatePoly::x(Rt.order());
    auto z = BivariatePoly::constant(Polynomial::monomial(1, 1), Rt.order());
    return Rt - (x * z + x * (exp(Rt) - Rational(1)));
}

struct TreeSubstitution {
    BivariatePoly f;       // s x D I e^{s x D (L - I)}
    BivariatePoly A2;      // A2 = f e^{A2}
    BivariatePoly Aprime;  // rooted trees with substituted edges, internal nodes, leaves; s marks tree size
};

// Trees whose edges, internal nodes and leaves carry objects from D, I, L.
inline TreeSubstitution tree_substitution(const TruncatedEGF& D, const TruncatedEGF& I, const TruncatedEGF& L,
                                          int order) {
    if (D.is_zero() || I.is_zero() || L.is_zero()) throw SeriesError("tree_substitution: empty component class");
    auto x = BivariatePoly::x(order);
    auto s = BivariatePoly::constant(Polynomial::monomial(1, 1), order);
    auto Db = lift<Polynomial>(D.truncated(order));
    auto Ib = lift<Polynomial>(I.truncated(order));
    auto Lb = lift<Polynomial>(L.truncated(order));
    auto sxLI = s * x * (Lb - Ib);
    TreeSubstitution ts;
    ts.f = s * x * Db * Ib * exp(sxLI * Db);
    std::function<BivariatePoly(const BivariatePoly&)> phi = [&](const BivariatePoly& y) { return ts.f * exp(y); };
    ts.A2 = newton_implicit<Polynomial>(phi, phi, order);
    auto num = (sxLI * Db + Rational(1)) * compose(cayley(order), ts.f);
    auto q = divide(num, Db);
    int n = q.order();
    ts.Aprime = q + (sxLI * sxLI * Db + sxLI).truncated(n);
    return ts;
}

}  // namespace exminor
