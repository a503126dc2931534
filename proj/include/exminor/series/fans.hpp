#pragma once

#include "exminor/oracle/ut_trees.hpp"
#include "exminor/series/sp_networks.hpp"

#include <map>
#include <tuple>

namespace exminor {

// Closed form of one tree shape after subdividing its edges and adding the
// root edges: x^a y^(e+f) (1+y)^g (1 - x y^2)^(-e).
//   y^f          mandatory root edges to the leaves
//   (1+y)^g      optional root edges to coloured non-leaves and branch vertices
//   1/(1-xy^2)   per tree edge: any number of subdivision vertices, each with
//                two tree edges and a mandatory root edge
struct ShapeGF {
    int a = 0, e = 0, f = 0, g = 0;

    static ShapeGF of(const TreeShape& t) {
        return {t.vertices(), t.edge_count(), t.leaves(), t.optional_root_edges()};
    }
    auto key() const { return std::tie(a, e, f, g); }
    friend bool operator<(const ShapeGF& l, const ShapeGF& r) { return l.key() < r.key(); }

    BivariatePoly expand(int order) const {
        auto mono = BivariatePoly::monomial(Polynomial::monomial(1, e + f), a, order);
        auto opt = pow(BivariatePoly::constant(Polynomial(std::vector<Rational>{1, 1}), order), g);
        auto sub = BivariatePoly::constant(Polynomial(1), order) - BivariatePoly::monomial(Polynomial::monomial(1, 2), 1, order);
        return mono * opt * pow(inverse(sub), e);
    }

    // y replaced by the network series D
    TruncatedEGF substitute(const TruncatedEGF& D) const {
        int n = D.order();
        auto x = TruncatedEGF::x(n);
        auto one = TruncatedEGF::constant(1, n);
        return pow(x, a) * pow(D, e + f) * pow(one + D, g) * pow(inverse(one - x * D * D), e);
    }
};

// Shapes of UT'_k grouped by their closed form, with multiplicities.
inline std::map<ShapeGF, long long> shape_census(int k) {
    std::map<ShapeGF, long long> m;
    for (const auto& t : enumerate_ut_trees(k)) ++m[ShapeGF::of(t)];
    return m;
}

// F'_k(x, y): y marks edges, x marks labelled (non-root) vertices.
inline BivariatePoly fan_bivariate(int k, int order) {
    if (k < 2 || k > 6) throw std::out_of_range("fan_bivariate: k must be in 2..6");
    BivariatePoly r(order);
    for (const auto& [s, mult] : shape_census(k)) r += s.expand(order) * Rational(mult);
    return r;
}

inline BivariatePoly fan2_closed_form(int order) {
    auto x = BivariatePoly::x(order);
    auto y = BivariatePoly::constant(Polynomial::monomial(1, 1), order);
    auto one = BivariatePoly::constant(Polynomial(1), order);
    return x * x * pow(y, 3) * inverse(one - x * y * y);
}

inline BivariatePoly fan3_closed_form(int order) {
    auto x = BivariatePoly::x(order);
    auto y = BivariatePoly::constant(Polynomial::monomial(1, 1), order);
    auto one = BivariatePoly::constant(Polynomial(1), order);
    auto den = inverse(one - x * y * y);
    return pow(x, 3) * pow(y, 4) * (one * Rational(3) - Rational(2) * x * y * y) * (one + y) * pow(den, 3);
}

// Blocks with k singleton colours.  B_1 = x(P+1); for k >= 2 every edge of a
// fan in F'_k is replaced by a network, i.e. y -> D(x).
inline TruncatedEGF b_series(int k, const NetworkSeries& net) {
    if (k < 1 || k > 6) throw std::out_of_range("b_series: k must be in 1..6");
    if (k == 1) return TruncatedEGF::x(net.P.order()) * (net.P + Rational(1));
    TruncatedEGF r(net.D.order());
    for (const auto& [s, mult] : shape_census(k)) r += s.substitute(net.D) * Rational(mult);
    return r;
}

inline TruncatedEGF b_series(int k, int order) { return b_series(k, sp_networks(order)); }

inline TruncatedEGF b2_closed_form(const TruncatedEGF& D) {
    auto x = TruncatedEGF::x(D.order());
    return x * x * pow(D, 3) / (Rational(1) - x * D * D);
}

}  // namespace exminor
