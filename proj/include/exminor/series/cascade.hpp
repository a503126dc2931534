#pragma once

#include "exminor/series/fans.hpp"
#include "exminor/series/trees.hpp"

#include <functional>
#include <vector>

namespace exminor {

// Integer partitions of j as non-increasing part lists.
inline std::vector<std::vector<int>> integer_partitions(int j) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) { out.push_back(cur); return; }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(j, j);
    return out;
}

// Number of set partitions of [j] with the given block sizes.
inline long long set_partitions_of_type(const std::vector<int>& parts) {
    int j = 0;
    for (int p : parts) j += p;
    Integer r = factorial(j);
    std::vector<int> mult(j + 1);
    for (int p : parts) r /= factorial(p), ++mult[p];
    for (int m : mult) r /= factorial(m);
    return r.convert_to<long long>();
}

// Values of the C-tree system for colour sets of size 1..l (index 0 unused).
// E[j] is the tree-function argument: A_j = R(E_j) + rest_j.
template <class T>
struct CascadeValues {
    std::vector<T> A, Ahat, E, rest;
};

// The system
//   A_j    = sum over set partitions P of [j] of B_|P| prod_{S in P} Ahat_|S|
//   Ahat_j = sum_i C(j,i) (-1)^(j-i) 2^i exp(sum_{m<=i} C(i,m) A_m)
// is triangular except for the term B_1 * 2^j e^(A_j + ...) inside Ahat_j.
// Isolating it gives A_j - rest_j = E_j e^(A_j - rest_j), hence A_j = R(E_j) + rest_j.
// T is a series or a real; Ops supplies exp, the tree function R and scaling.
template <class T, class Ops>
CascadeValues<T> cascade(const std::vector<T>& B, int l, const Ops& ops) {
    CascadeValues<T> cv;
    T zero = ops.zero();
    cv.A.assign(l + 1, zero);
    cv.Ahat.assign(l + 1, zero);
    cv.E.assign(l + 1, zero);
    cv.rest.assign(l + 1, zero);
    auto exponent = [&](int i, int upto) {
        T s = zero;
        for (int m = 1; m <= upto; ++m) s = s + ops.scale(cv.A[m], binomial(i, m).template convert_to<long long>());
        return s;
    };
    for (int j = 1; j <= l; ++j) {
        T hat_low = zero;
        for (int i = 0; i < j; ++i) {
            long long c = binomial(j, i).template convert_to<long long>() << i;
            if ((j - i) % 2) c = -c;
            hat_low = hat_low + ops.scale(ops.exp(exponent(i, i)), c);
        }
        T rest = B[1] * hat_low;
        for (const auto& parts : integer_partitions(j)) {
            if (parts.size() < 2) continue;
            T term = B[parts.size()];
            for (int p : parts) term = term * cv.Ahat[p];
            rest = rest + ops.scale(term, set_partitions_of_type(parts));
        }
        cv.rest[j] = rest;
        cv.E[j] = ops.scale(B[1], 1LL << j) * ops.exp(exponent(j, j - 1) + rest);
        cv.A[j] = ops.tree(cv.E[j]) + rest;
        cv.Ahat[j] = hat_low + ops.scale(ops.exp(exponent(j, j)), 1LL << j);
    }
    return cv;
}

struct SeriesOps {
    int order;
    TruncatedEGF R;
    explicit SeriesOps(int n) : order(n), R(cayley(n)) {}
    TruncatedEGF zero() const { return TruncatedEGF(order); }
    TruncatedEGF exp(const TruncatedEGF& a) const { return exminor::exp(a); }
    TruncatedEGF tree(const TruncatedEGF& a) const { return compose(R, a); }
    TruncatedEGF scale(const TruncatedEGF& a, long long c) const { return a * Rational(c); }
};

struct CascadeSeries {
    NetworkSeries net;
    std::vector<TruncatedEGF> B;
    CascadeValues<TruncatedEGF> values;
};

// A_1..A_l and Ahat_1..Ahat_l; A_C depends on C only through |C|.
inline CascadeSeries a_c_cascade(int l, int order) {
    if (l < 1 || l > 5) throw std::out_of_range("a_c_cascade: l must be in 1..5");
    CascadeSeries cs;
    cs.net = sp_networks(order);
    cs.B.push_back(TruncatedEGF(order));
    for (int k = 1; k <= l; ++k) cs.B.push_back(b_series(k, cs.net));
    cs.values = cascade(cs.B, l, SeriesOps(order));
    return cs;
}

// Closed form for one colour: R(2 B_1 e^{-B_1}) - B_1.
inline TruncatedEGF a1_closed_form(const TruncatedEGF& B1) {
    return compose(cayley(B1.order()), Rational(2) * B1 * exp(-B1)) - B1;
}

}  // namespace exminor
