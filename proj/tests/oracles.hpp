#pragma once

// Independent reference computations used only by the tests. None of these
// go through the library's Bernoulli cache, Faulhaber polynomials or
// coefficient recursion.

#include "oddpow/exact_arith.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace oddpow::oracle {

/// Rows 0..n_max of Pascal's triangle built by addition only.
inline std::vector<std::vector<BigInt>> pascal(std::size_t n_max) {
    std::vector<std::vector<BigInt>> t(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        t[n].assign(n + 1, BigInt(1));
        for (std::size_t k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
}

/// Akiyama-Tanigawa; yields B_1 = +1/2 directly.
inline Rational bernoulli(std::size_t n) {
    std::vector<Rational> a(n + 1);
    for (std::size_t mm = 0; mm <= n; ++mm) {
        a[mm] = Rational(BigInt(1), BigInt(mm + 1));
        for (std::size_t j = mm; j >= 1; --j)
            a[j - 1] = Rational(BigInt(j)) * (a[j - 1] - a[j]);
    }
    return a[0];
}

/// sum_{k=1}^{x} k^p by direct addition.
inline BigInt power_sum(unsigned p, std::uint64_t x) {
    BigInt s = 0;
    for (std::uint64_t k = 1; k <= x; ++k) s += boost::multiprecision::pow(BigInt(k), p);
    return s;
}

/// sum_{k=1}^{x} k^r (x-k)^r by direct addition.
inline BigInt convolution_sum(unsigned r, std::uint64_t x) {
    BigInt s = 0;
    for (std::uint64_t k = 1; k <= x; ++k)
        s += boost::multiprecision::pow(BigInt(k), r) *
             boost::multiprecision::pow(BigInt(x) - BigInt(k), r);
    return s;
}

}  // namespace oddpow::oracle
