#pragma once

/**
 * @file exact_arith.hpp
 * @brief Arbitrary-precision rationals, binomial coefficients and Bernoulli
 *        numbers.
 *
 * Rational is always stored in lowest terms with a positive denominator;
 * zero is 0/1. Bernoulli numbers use the B_1 = +1/2 convention, which is the
 * convention under which Faulhaber's formula sums k = 1..x.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oddpow {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n) : num_(n), den_(1) {}        // NOLINT
    Rational(int n) : num_(n), den_(1) {}                 // NOLINT

    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        normalize();
    }

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_.sign(); }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        if (den_ == o.den_) {
            num_ += o.num_;
        } else {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ *= o.den_;
        }
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    // Both operands are normalized, so structural equality is value equality.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt lhs = a.num_ * b.den_;
        BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "num/den", or just "num" when the denominator is 1.
    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    /// Inverse of str(). Accepts non-reduced input such as "6/4".
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rational(BigInt(std::string(text)));
            return Rational(BigInt(std::string(text.substr(0, slash))),
                            BigInt(std::string(text.substr(slash + 1))));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("malformed rational: " + std::string(text));
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
        return os << q.str();
    }

private:
    void normalize() {
        if (den_.is_zero())
            throw std::domain_error("zero denominator");
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline Rational make_rational(BigInt num, BigInt den) {
    return Rational(std::move(num), std::move(den));
}

/// C(n, k); zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0)
        throw std::domain_error("binomial: negative n");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    // result holds C(n - k + i, i) after step i, so each division is exact.
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline BigInt ipow(const BigInt& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

/**
 * Grow-only table of Bernoulli numbers B_0..B_high under B_1 = +1/2.
 *
 * Entries are computed from sum_{j=0}^{n} C(n+1, j) B_j = n + 1, solved for
 * B_n. Extension is serialized; readers only ever see completed entries.
 */
class BernoulliCache {
public:
    BernoulliCache() { values_.emplace_back(1); }

    Rational get(std::size_t n) {
        {
            std::shared_lock lock(mutex_);
            if (n < values_.size()) return values_[n];
        }
        std::unique_lock lock(mutex_);
        extend_locked(n);
        return values_[n];
    }

    /// Largest index computed so far.
    std::size_t high_water() const {
        std::shared_lock lock(mutex_);
        return values_.size() - 1;
    }

private:
    void extend_locked(std::size_t n) {
        values_.reserve(n + 1);
        for (std::size_t i = values_.size(); i <= n; ++i) {
            const auto ii = static_cast<std::int64_t>(i);
            Rational acc(ii + 1);
            for (std::int64_t j = 0; j < ii; ++j) {
                if (values_[static_cast<std::size_t>(j)].is_zero()) continue;
                acc -= Rational(binomial(ii + 1, j)) * values_[static_cast<std::size_t>(j)];
            }
            // C(n+1, n) = n + 1
            values_.push_back(acc / Rational(ii + 1));
        }
    }

    mutable std::shared_mutex mutex_;
    std::vector<Rational> values_;
};

inline BernoulliCache& default_bernoulli_cache() {
    static BernoulliCache cache;
    return cache;
}

inline Rational bernoulli(std::size_t n) {
    return default_bernoulli_cache().get(n);
}

}  // namespace oddpow
