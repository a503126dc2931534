#pragma once

#include "exminor/series/series.hpp"

#include <boost/math/tools/roots.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <mutex>
#include <string>

namespace exminor {

// Expression templates off: lambdas returning auto would otherwise hold
// references to temporaries.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

struct NumericsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {
inline std::recursive_mutex& precision_mutex() {
    static std::recursive_mutex m;
    return m;
}
}  // namespace detail

inline constexpr unsigned default_precision_digits = 60;

// Working precision (decimal digits) for every Real created inside the
// scope.  mpfr's default precision is a process-wide static, so scopes are
// serialised by a mutex; nesting on one thread is fine.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits = default_precision_digits)
        : lock_(detail::precision_mutex()), old_(Real::default_precision()) {
        if (digits < 30) throw std::invalid_argument("precision must be at least 30 digits");
        Real::default_precision(digits);
    }
    ~PrecisionScope() { Real::default_precision(old_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

    static unsigned digits() { return Real::default_precision(); }

private:
    std::unique_lock<std::recursive_mutex> lock_;
    unsigned old_;
};

template <>
struct coeff_traits<Real> {
    using scalar = Real;
    static Real inverse(const Real& a) {
        if (a == 0) throw SeriesError("inverse: constant term is zero");
        return 1 / a;
    }
    static Real exp(const Real& a) { return boost::multiprecision::exp(a); }
    static Real log(const Real& a) {
        if (a <= 0) throw SeriesError("log: constant term must be positive");
        return boost::multiprecision::log(a);
    }
    static Real sqrt(const Real& a) {
        if (a <= 0) throw SeriesError("sqrt: constant term must be positive");
        return boost::multiprecision::sqrt(a);
    }
};

// Taylor jet: coefficients of f(x0 + h) in h.
using Jet = Series<Real>;

inline Real to_real(const Rational& q) {
    return Real(boost::multiprecision::numerator(q).str()) / Real(boost::multiprecision::denominator(q).str());
}

inline Real real(const std::string& s) { return Real(s); }

inline std::string to_string(const Real& x, int digits = 0) {
    return x.str(digits ? digits : static_cast<int>(PrecisionScope::digits()), std::ios_base::fmtflags(0));
}

inline Real inv_e() { return boost::multiprecision::exp(Real(-1)); }

inline Real relative_error(const Real& value, const Real& reference) {
    return boost::multiprecision::abs(value - reference) / boost::multiprecision::abs(reference);
}

// Relative distance from value to the interval [ref, ref + 10^-d) denoted by
// a positive reference printed with d decimals and the rest truncated.
inline Real printed_error(const Real& value, const std::string& ref) {
    Real r(ref);
    auto dot = ref.find('.');
    int decimals = dot == std::string::npos ? 0 : static_cast<int>(ref.size() - dot - 1);
    Real hi = r + pow(Real(10), -decimals);
    Real gap = value < r ? r - value : value > hi ? value - hi : Real(0);
    return gap / abs(r);
}

// Root of f in [lo, hi] (sign change required) by TOMS 748 to working precision.
template <class F>
Real bracket_root(F f, Real lo, Real hi, const std::string& what) {
    Real flo = f(lo), fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo < 0) == (fhi < 0)) throw NumericsError(what + ": no sign change in bracket");
    int bits = static_cast<int>(PrecisionScope::digits() * 3.3219) - 12;
    boost::math::tools::eps_tolerance<Real> tol(bits);
    std::uintmax_t iters = 2000;
    auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
    return (r.first + r.second) / 2;
}

}  // namespace exminor
