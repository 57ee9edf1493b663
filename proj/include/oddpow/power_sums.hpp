#pragma once

/**
 * @file power_sums.hpp
 * @brief Closed forms of sum_{k=1}^{x} k^p and sum_{k=1}^{x} k^r (x-k)^r.
 */

#include "oddpow/exact_arith.hpp"
#include "oddpow/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace oddpow {

/**
 * S_p(x) = sum_{k=1}^{x} k^p as a degree p+1 polynomial (Faulhaber):
 *
 *   S_p(x) = 1/(p+1) * sum_{j=0}^{p} C(p+1, j) B_j x^{p+1-j},   B_1 = +1/2.
 */
inline PolynomialQ power_sum_poly(std::size_t p) {
    const auto pp = static_cast<std::int64_t>(p);
    std::vector<Rational> coeffs(p + 2);
    const Rational scale(BigInt(1), BigInt(pp + 1));
    for (std::int64_t j = 0; j <= pp; ++j) {
        coeffs[static_cast<std::size_t>(pp + 1 - j)] =
            scale * Rational(binomial(pp + 1, j)) * bernoulli(static_cast<std::size_t>(j));
    }
    return PolynomialQ(std::move(coeffs));
}

/**
 * C_r(x) = sum_{k=1}^{x} k^r (x-k)^r, a polynomial of degree 2r+1.
 *
 * Expands (x-k)^r = sum_j C(r,j) (-1)^j x^{r-j} k^j, so the summand becomes
 * sum_j C(r,j) (-1)^j x^{r-j} k^{r+j}; each inner sum over k collapses to
 * S_{r+j}(x).
 */
inline PolynomialQ convolution_sum_poly(std::size_t r) {
    const auto rr = static_cast<std::int64_t>(r);
    PolynomialQ result;
    for (std::int64_t j = 0; j <= rr; ++j) {
        Rational c(binomial(rr, j));
        if (j % 2 == 1) c = -c;
        result += (c * power_sum_poly(r + static_cast<std::size_t>(j)))
                      .shifted_up(static_cast<std::size_t>(rr - j));
    }
    return result;
}

}  // namespace oddpow
