#pragma once

#include "exminor/series/polynomial.hpp"
#include "exminor/series/rational.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace exminor {

struct SeriesError : std::domain_error {
    using std::domain_error::domain_error;
};

// Operations a coefficient ring must offer on constant terms.  Exact rings
// only know exp/log/sqrt at the trivial points; the mpfr specialisation in
// numerics/real.hpp knows them everywhere.
template <class K>
struct coeff_traits;

template <>
struct coeff_traits<Rational> {
    using scalar = Rational;
    static Rational inverse(const Rational& a) {
        if (a == 0) throw SeriesError("inverse: constant term is zero");
        return 1 / a;
    }
    static Rational exp(const Rational& a) {
        if (a != 0) throw SeriesError("exp: constant term must be 0");
        return 1;
    }
    static Rational log(const Rational& a) {
        if (a != 1) throw SeriesError("log: constant term must be 1");
        return 0;
    }
    static Rational sqrt(const Rational& a) {
        if (a <= 0) throw SeriesError("sqrt: constant term must be positive");
        Integer p = boost::multiprecision::numerator(a), q = boost::multiprecision::denominator(a);
        Integer sp = boost::multiprecision::sqrt(p), sq = boost::multiprecision::sqrt(q);
        if (sp * sp != p || sq * sq != q) throw SeriesError("sqrt: constant term is not a rational square");
        return Rational(sp, sq);
    }
};

template <>
struct coeff_traits<Polynomial> {
    using scalar = Rational;
    static Polynomial inverse(const Polynomial& a) {
        if (!a.is_constant() || a.is_zero()) throw SeriesError("inverse: constant term is not a unit");
        return Polynomial(1 / a[0]);
    }
    static Polynomial exp(const Polynomial& a) {
        if (!a.is_zero()) throw SeriesError("exp: constant term must be 0");
        return Polynomial(1);
    }
    static Polynomial log(const Polynomial& a) {
        if (!(a == Polynomial(1))) throw SeriesError("log: constant term must be 1");
        return {};
    }
    static Polynomial sqrt(const Polynomial& a) {
        if (!a.is_constant()) throw SeriesError("sqrt: constant term is not constant");
        return Polynomial(coeff_traits<Rational>::sqrt(a[0]));
    }
};

// Truncated power series c_0 + c_1 x + ... + c_N x^N.  For EGFs c_n = |A_n|/n!.
// Binary operations return the smaller of the two orders; nothing is dropped
// silently below it.
template <class K>
class Series {
public:
    using coeff_type = K;
    using scalar_type = typename coeff_traits<K>::scalar;

    Series() : c_(1) {}
    explicit Series(int order) : c_(check_order(order) + 1) {}
    Series(int order, std::vector<K> c) : c_(std::move(c)) {
        c_.resize(check_order(order) + 1);
    }

    static Series constant(const K& v, int order) {
        Series s(order);
        s.c_[0] = v;
        return s;
    }
    static Series x(int order) {
        Series s(order);
        if (order >= 1) s.c_[1] = K(1);
        return s;
    }
    static Series monomial(const K& v, int deg, int order) {
        Series s(order);
        if (deg <= order) s.c_[deg] = v;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const K& operator[](int n) const { return c_.at(n); }
    K& operator[](int n) { return c_.at(n); }
    const std::vector<K>& coeffs() const { return c_; }

    // Lower the order.  Raising it is only allowed through padded(), which
    // makes the claim "higher coefficients are zero" explicit.
    Series truncated(int order) const {
        if (order > this->order()) throw SeriesError("truncated: cannot raise order");
        return Series(order, std::vector<K>(c_.begin(), c_.begin() + order + 1));
    }
    Series padded(int order) const { return Series(order, c_); }

    int valuation() const {
        for (int i = 0; i <= order(); ++i)
            if (!is_zero_coeff(c_[i])) return i;
        return order() + 1;
    }
    bool is_zero() const { return valuation() > order(); }

    Series& operator+=(const Series& o) {
        shrink_to(o.order());
        for (int i = 0; i <= order(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Series& operator-=(const Series& o) {
        shrink_to(o.order());
        for (int i = 0; i <= order(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Series& operator*=(const scalar_type& s) {
        for (auto& v : c_) v *= s;
        return *this;
    }
    Series& operator/=(const scalar_type& s) {
        for (auto& v : c_) v /= s;
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator-(Series a) {
        for (auto& v : a.c_) v = -v;
        return a;
    }
    friend Series operator*(Series a, const scalar_type& s) { return a *= s; }
    friend Series operator*(const scalar_type& s, Series a) { return a *= s; }
    friend Series operator/(Series a, const scalar_type& s) { return a /= s; }
    friend Series operator+(Series a, const scalar_type& s) {
        a.c_[0] += K(s);
        return a;
    }
    friend Series operator+(const scalar_type& s, Series a) { return std::move(a) + s; }
    friend Series operator-(Series a, const scalar_type& s) {
        a.c_[0] -= K(s);
        return a;
    }
    friend Series operator-(const scalar_type& s, Series a) { return -std::move(a) + s; }

    friend Series operator*(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r(n);
        for (int i = 0; i <= n; ++i) {
            if (is_zero_coeff(a.c_[i])) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (is_zero_coeff(b.c_[j])) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    Series& operator*=(const Series& o) { return *this = *this * o; }
    friend Series operator/(const Series& a, const Series& b) { return a * inverse(b); }

    friend bool operator==(const Series& a, const Series& b) {
        return a.order() == b.order() && a.c_ == b.c_;
    }

private:
    static int check_order(int order) {
        if (order < 0) throw SeriesError("negative series order");
        return order;
    }
    static bool is_zero_coeff(const K& v) {
        if constexpr (std::is_same_v<K, Polynomial>) return v.is_zero();
        else return v == 0;
    }
    void shrink_to(int order) {
        if (order < this->order()) c_.resize(order + 1);
    }

    std::vector<K> c_;
};

using TruncatedEGF = Series<Rational>;
// Coefficient of x^n is a polynomial in the second variable (y or s).
using BivariatePoly = Series<Polynomial>;

template <class K>
Series<K> inverse(const Series<K>& f) {
    int n = f.order();
    Series<K> h(n);
    K h0 = coeff_traits<K>::inverse(f[0]);
    h[0] = h0;
    for (int k = 1; k <= n; ++k) {
        K acc{};
        for (int j = 1; j <= k; ++j) acc += f[j] * h[k - j];
        h[k] = -(h0 * acc);
    }
    return h;
}

template <class K>
Series<K> exp(const Series<K>& f) {
    int n = f.order();
    Series<K> g(n);
    g[0] = coeff_traits<K>::exp(f[0]);
    for (int k = 1; k <= n; ++k) {
        K acc{};
        for (int j = 1; j <= k; ++j) acc += (f[j] * g[k - j]) * typename coeff_traits<K>::scalar(j);
        g[k] = acc / typename coeff_traits<K>::scalar(k);
    }
    return g;
}

template <class K>
Series<K> derive(const Series<K>& f) {
    if (f.order() == 0) return Series<K>(0);
    Series<K> r(f.order() - 1);
    for (int k = 0; k < f.order(); ++k) r[k] = f[k + 1] * typename coeff_traits<K>::scalar(k + 1);
    return r;
}

template <class K>
Series<K> integrate(const Series<K>& f) {
    Series<K> r(f.order() + 1);
    for (int k = 0; k <= f.order(); ++k) r[k + 1] = f[k] / typename coeff_traits<K>::scalar(k + 1);
    return r;
}

template <class K>
Series<K> log(const Series<K>& f) {
    Series<K> r = integrate(derive(f) * inverse(f).truncated(std::max(f.order() - 1, 0)));
    r = r.truncated(f.order());
    r[0] = coeff_traits<K>::log(f[0]);
    return r;
}

template <class K>
Series<K> pow(Series<K> base, unsigned e) {
    Series<K> r = Series<K>::constant(K(1), base.order());
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

// f / x; the constant term must vanish.  The result has order N-1.
template <class K>
Series<K> divide_by_x(const Series<K>& f) {
    if (f.valuation() < 1) throw SeriesError("divide_by_x: nonzero constant term");
    if (f.order() == 0) return Series<K>(0);
    return Series<K>(f.order() - 1, std::vector<K>(f.coeffs().begin() + 1, f.coeffs().end()));
}

// num / den when den may vanish at 0: both are shifted by val(den), so the
// result loses that many orders.
template <class K>
Series<K> divide(const Series<K>& num, const Series<K>& den) {
    int v = den.valuation();
    if (v > den.order()) throw SeriesError("divide: zero denominator");
    if (num.valuation() < v) throw SeriesError("divide: numerator valuation below denominator valuation");
    Series<K> a = num, b = den;
    for (int i = 0; i < v; ++i) a = divide_by_x(a), b = divide_by_x(b);
    return a / b;
}

// outer(inner(x)) by Horner; inner must have zero constant term.  The outer
// coefficients are lifted into the inner coefficient ring.
template <class K, class K2>
Series<K> compose(const Series<K2>& outer, const Series<K>& inner) {
    if (inner.valuation() < 1) throw SeriesError("compose: inner series has nonzero constant term");
    int n = std::min(outer.order(), inner.order());
    Series<K> r = Series<K>::constant(K(outer[n]), n);
    Series<K> in = inner.truncated(n);
    for (int k = n - 1; k >= 0; --k) r = r * in + Series<K>::constant(K(outer[k]), n);
    return r;
}

// Square root with the branch fixed by the positive root of the constant term;
// Newton g <- (g + h/g)/2 doubling the correct prefix each round.
template <class K>
Series<K> sqrt(const Series<K>& h) {
    int n = h.order();
    Series<K> g = Series<K>::constant(coeff_traits<K>::sqrt(h[0]), 0);
    int m = 0;
    while (m < n) {
        m = std::min(2 * m + 1, n);
        Series<K> gm = g.padded(m);
        g = (gm + h.truncated(m) * inverse(gm)) / typename coeff_traits<K>::scalar(2);
    }
    return g.padded(n).truncated(n);
}

// Coefficientwise conversion from rationals, e.g. a univariate EGF viewed as
// a bivariate one that does not depend on the second variable.
template <class K>
Series<K> lift(const Series<Rational>& f) {
    Series<K> r(f.order());
    for (int k = 0; k <= f.order(); ++k) r[k] = K(f[k]);
    return r;
}

// Solve y = phi(y) for the unique series with y(0) = y0, where dphi is
// d phi / d y.  Newton's step y <- y - (y - phi(y)) / (1 - dphi(y)) doubles the
// correct prefix; phi must be contractive in valuation, i.e. dphi(y) must have
// zero constant term along the iteration.
template <class K>
Series<K> newton_implicit(const std::function<Series<K>(const Series<K>&)>& phi,
                          const std::function<Series<K>(const Series<K>&)>& dphi, int order,
                          const K& y0 = K{}) {
    Series<K> y = Series<K>::constant(y0, 0);
    int m = 0;
    auto check = [&](const Series<K>& yy, int mm) {
        Series<K> r = yy - phi(yy);
        if (r.valuation() <= mm) throw SeriesError("newton_implicit: fixed point not reached (non-contractive functional)");
    };
    check(y, 0);
    while (m < order) {
        int next = std::min(2 * m + 1, order);
        Series<K> ym = y.padded(next);
        Series<K> d = dphi(ym);
        if (!(d[0] == K{})) throw SeriesError("newton_implicit: non-contractive functional (dphi has nonzero constant term)");
        Series<K> r = ym - phi(ym);
        y = ym - r * inverse(Series<K>::constant(K(1), next) - d);
        check(y, next);
        m = next;
    }
    return y.padded(order).truncated(order);
}

// Substitute a univariate series for the second variable of a bivariate one:
// sum_n x^n P_n(g(x)).
inline TruncatedEGF substitute_y(const BivariatePoly& f, const TruncatedEGF& g) {
    int n = std::min(f.order(), g.order());
    int maxdeg = 0;
    for (int k = 0; k <= n; ++k) maxdeg = std::max(maxdeg, f[k].degree());
    std::vector<TruncatedEGF> powers{TruncatedEGF::constant(1, n)};
    for (int j = 1; j <= maxdeg; ++j) powers.push_back(powers.back() * g.truncated(n));
    TruncatedEGF r(n);
    for (int k = 0; k <= n; ++k) {
        for (int j = 0; j <= f[k].degree(); ++j) {
            if (f[k][j] == 0) continue;
            Rational c = f[k][j];
            for (int i = 0; i + k <= n; ++i) r[i + k] += c * powers[j][i];
        }
    }
    return r;
}

// Set the second variable to a fixed value.
inline TruncatedEGF eval_y(const BivariatePoly& f, const Rational& y) {
    TruncatedEGF r(f.order());
    for (int k = 0; k <= f.order(); ++k) r[k] = f[k].eval(y);
    return r;
}

// Counts |A_n| = n! c_n; throws if a coefficient is not an integer count.
inline std::vector<Integer> counts(const TruncatedEGF& f) {
    std::vector<Integer> r;
    for (int k = 0; k <= f.order(); ++k) r.push_back(to_integer(f[k] * Rational(factorial(k))));
    return r;
}

}  // namespace exminor
