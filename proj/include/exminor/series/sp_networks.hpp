#pragma once

#include "exminor/series/series.hpp"

namespace exminor {

struct NetworkSeries {
    TruncatedEGF D, S, P;
};

// x D^2/(1+xD) - ln((1+D)/2); identically zero for the network series.
inline TruncatedEGF network_identity_residual(const TruncatedEGF& D) {
    int n = D.order();
    auto x = TruncatedEGF::x(n);
    auto xD = x * D;
    return x * D * D / (xD + Rational(1)) - log((D + Rational(1)) / Rational(2));
}

// D/(1+xD) - (P+1)
inline TruncatedEGF parallel_identity_residual(const TruncatedEGF& D, const TruncatedEGF& P) {
    auto x = TruncatedEGF::x(D.order());
    return D / (x * D + Rational(1)) - (P + Rational(1));
}

// Series-parallel networks: D = 1 + S + P with
//   S = (P+1) * x(P+1) / (1 - x(P+1))      (series compositions)
//   P = (e^S - 1) + (e^S - 1 - S)            (parallel compositions, with/without pole edge)
// Solved as a fixed point in P.
inline NetworkSeries sp_networks(int order) {
    auto x = TruncatedEGF::x(order);
    auto series_of = [&](const TruncatedEGF& P) {
        auto u = x * (P + Rational(1));
        return (P + Rational(1)) * u / (Rational(1) - u);
    };
    auto phi = [&](const TruncatedEGF& P) {
        auto S = series_of(P);
        return Rational(2) * exp(S) - Rational(2) - S;
    };
    auto dphi = [&](const TruncatedEGF& P) {
        auto S = series_of(P);
        auto u = x * (P + Rational(1));
        auto one_minus = Rational(1) - u;
        auto dS = u * (Rational(2) - u) / (one_minus * one_minus);
        return (Rational(2) * exp(S) - Rational(1)) * dS;
    };
    NetworkSeries r;
    r.P = newton_implicit<Rational>(phi, dphi, order);
    r.S = series_of(r.P);
    r.D = r.S + r.P + Rational(1);
    if (!network_identity_residual(r.D).is_zero() || !parallel_identity_residual(r.D, r.P).is_zero())
        throw SeriesError("sp_networks: network identities failed");
    return r;
}

}  // namespace exminor
