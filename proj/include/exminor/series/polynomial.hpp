#pragma once

#include "exminor/series/rational.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

namespace exminor {

// Dense polynomial in one variable (y or s) with rational coefficients.
// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long long c) { if (c != 0) c_.emplace_back(c); }
    Polynomial(const Rational& c) { if (c != 0) c_.push_back(c); }
    explicit Polynomial(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

    static Polynomial monomial(const Rational& c, int deg) {
        std::vector<Rational> v(deg + 1);
        v[deg] = c;
        return Polynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rational operator[](int i) const {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& y) const {
        Rational r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * y + *it;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Rational& s) {
        if (s == 0) { c_.clear(); return *this; }
        for (auto& x : c_) x *= s;
        return *this;
    }
    Polynomial& operator/=(const Rational& s) {
        for (auto& x : c_) x /= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator/(Polynomial a, const Rational& s) { return a /= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (int i = 0; i <= p.degree(); ++i) {
            if (p.c_[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            os << to_fraction(p.c_[i]);
            if (i > 0) os << "*y^" << i;
        }
        return os;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

}  // namespace exminor
