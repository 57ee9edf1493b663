#pragma once

// Dense univariate polynomials over Rational.

#include "oddpow/exact_arith.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace oddpow {

/// coeffs()[i] is the coefficient of x^i. The highest stored coefficient is
/// never zero; the zero polynomial has no coefficients at all.
class PolynomialQ {
public:
    PolynomialQ() = default;
    explicit PolynomialQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }
    PolynomialQ(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    static PolynomialQ monomial(Rational c, std::size_t power) {
        std::vector<Rational> v(power + 1);
        v[power] = std::move(c);
        return PolynomialQ(std::move(v));
    }

    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    /// Coefficient of x^i; zero beyond the degree.
    Rational operator[](std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational{};
    }

    Rational leading() const { return is_zero() ? Rational{} : coeffs_.back(); }

    PolynomialQ& operator+=(const PolynomialQ& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    PolynomialQ& operator-=(const PolynomialQ& o) { return *this += o * Rational(-1); }

    friend PolynomialQ operator+(PolynomialQ a, const PolynomialQ& b) { return a += b; }
    friend PolynomialQ operator-(PolynomialQ a, const PolynomialQ& b) { return a -= b; }

    friend PolynomialQ operator*(const PolynomialQ& p, const Rational& c) {
        if (c.is_zero()) return {};
        std::vector<Rational> v(p.coeffs_);
        for (auto& q : v) q *= c;
        return PolynomialQ(std::move(v));
    }
    friend PolynomialQ operator*(const Rational& c, const PolynomialQ& p) { return p * c; }

    friend PolynomialQ operator*(const PolynomialQ& a, const PolynomialQ& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return PolynomialQ(std::move(v));
    }

    /// Multiplication by x^n.
    PolynomialQ shifted_up(std::size_t n) const {
        if (is_zero()) return {};
        std::vector<Rational> v(n);
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return PolynomialQ(std::move(v));
    }

    /// p(x + a), by Horner's scheme over polynomials.
    PolynomialQ translated(const Rational& a) const {
        PolynomialQ result;
        const PolynomialQ x_plus_a{a, Rational(1)};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            result = result * x_plus_a + PolynomialQ{*it};
        return result;
    }

    Rational operator()(const Rational& x) const {
        Rational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    friend bool operator==(const PolynomialQ&, const PolynomialQ&) = default;

    /// Descending powers, e.g. "1/6*x^3 - 1/6*x". The zero polynomial is "0".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Rational& c = coeffs_[i];
            if (c.is_zero()) continue;
            const bool negative = c.sign() < 0;
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            const Rational mag = negative ? -c : c;
            if (i == 0) {
                out += mag.str();
                continue;
            }
            if (mag != Rational(1)) out += mag.str() + "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline PolynomialQ poly_add(const PolynomialQ& a, const PolynomialQ& b) { return a + b; }
inline PolynomialQ poly_scale(const Rational& c, const PolynomialQ& p) { return c * p; }
inline Rational poly_eval(const PolynomialQ& p, const BigInt& x) { return p(Rational(x)); }

}  // namespace oddpow
