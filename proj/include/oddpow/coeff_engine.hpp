#pragma once

/**
 * @file coeff_engine.hpp
 * @brief The coefficient triangle A(m, r) of
 *
 *   x^{2m+1} = sum_{k=1}^{x} sum_{r=0}^{m} A(m, r) k^r (x-k)^r.
 *
 * Two independent routes are provided:
 *
 *  - CoeffTriangle / coeff_row: the Bernoulli recursion
 *
 *      A(m, m) = (2m+1) C(2m, m)
 *      A(m, r) = (2r+1) C(2r, r) sum_{d=2r+1}^{m} A(m, d) C(d, 2r+1)
 *                                  (-1)^{d-1} / (d-r) B_{2d-2r},  0 <= r < m
 *      A(m, r) = 0 otherwise.
 *
 *    A(m, r) depends only on A(m, d) with d > r, so a row is filled from
 *    r = m downwards. The Bernoulli index 2d-2r is always >= 2, so the B_1
 *    convention does not enter here.
 *
 *  - coeff_row_by_solve: match coefficients of x^0..x^{2m+1} in
 *    sum_r A_r C_r(x) = x^{2m+1} and solve the overdetermined system exactly.
 */

#include "oddpow/exact_arith.hpp"
#include "oddpow/linear_solve.hpp"
#include "oddpow/polynomial.hpp"
#include "oddpow/power_sums.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace oddpow {

using CoeffRow = std::vector<Rational>;

/// The identity admits no coefficient vector at this m.
class IdentityUnsatisfiable : public std::runtime_error {
public:
    explicit IdentityUnsatisfiable(std::size_t m, const std::string& detail)
        : std::runtime_error("identity unsatisfiable at m=" + std::to_string(m) + ": " + detail),
          m_(m) {}
    std::size_t m() const noexcept { return m_; }

private:
    std::size_t m_;
};

/// (2m+1) C(2m, m)
inline Rational leading_coeff(std::size_t m) {
    const auto mm = static_cast<std::int64_t>(m);
    return Rational(BigInt(2 * mm + 1) * binomial(2 * mm, mm));
}

/**
 * Memoized table of A(m, r). Rows are computed whole and published under a
 * lock; a published row is never modified.
 */
class CoeffTriangle {
public:
    Rational coeff(std::size_t m, std::int64_t r) {
        if (r < 0 || r > static_cast<std::int64_t>(m)) return Rational{};
        return row(m)[static_cast<std::size_t>(r)];
    }

    CoeffRow row(std::size_t m) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = rows_.find(m); it != rows_.end()) return it->second;
        }
        CoeffRow computed = compute_row(m);
        std::unique_lock lock(mutex_);
        // A racing writer may have published first; both results are equal.
        return rows_.try_emplace(m, std::move(computed)).first->second;
    }

    std::size_t rows_cached() const {
        std::shared_lock lock(mutex_);
        return rows_.size();
    }

    static CoeffRow compute_row(std::size_t m) {
        CoeffRow a(m + 1);
        a[m] = leading_coeff(m);
        for (std::size_t r = m; r-- > 0;) {
            Rational sum;
            for (std::size_t d = 2 * r + 1; d <= m; ++d) {
                if (a[d].is_zero()) continue;
                Rational term = a[d] * Rational(binomial(static_cast<std::int64_t>(d),
                                                         static_cast<std::int64_t>(2 * r + 1)));
                term *= Rational(BigInt(d % 2 == 1 ? 1 : -1), BigInt(d - r));
                term *= bernoulli(2 * d - 2 * r);
                sum += term;
            }
            a[r] = leading_coeff(r) * sum;
        }
        return a;
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<std::size_t, CoeffRow> rows_;
};

inline CoeffTriangle& default_triangle() {
    static CoeffTriangle triangle;
    return triangle;
}

inline Rational coeff(std::size_t m, std::int64_t r) { return default_triangle().coeff(m, r); }

/// [A(m,0), ..., A(m,m)]
inline CoeffRow coeff_row(std::size_t m) { return default_triangle().row(m); }

/// The linear system whose unknowns are A(m,0..m): one equation per power
/// x^{2m+1}, x^{2m}, ..., x^0, in that order.
struct IdentitySystem {
    RationalMatrix matrix;
    std::vector<Rational> rhs;
};

inline IdentitySystem build_identity_system(std::size_t m) {
    const std::size_t powers = 2 * m + 2;
    std::vector<PolynomialQ> basis;
    basis.reserve(m + 1);
    for (std::size_t r = 0; r <= m; ++r) basis.push_back(convolution_sum_poly(r));

    IdentitySystem sys;
    sys.matrix.assign(powers, std::vector<Rational>(m + 1));
    sys.rhs.assign(powers, Rational{});
    for (std::size_t eq = 0; eq < powers; ++eq) {
        const std::size_t power = powers - 1 - eq;
        for (std::size_t r = 0; r <= m; ++r) sys.matrix[eq][r] = basis[r][power];
        if (power == 2 * m + 1) sys.rhs[eq] = Rational(1);
    }
    return sys;
}

/// Undetermined-coefficients route. Success proves the identity at this m.
inline CoeffRow coeff_row_by_solve(std::size_t m) {
    IdentitySystem sys = build_identity_system(m);
    // Unknowns are ordered r = 0..m but pivots sit at x^{2r+1}; eliminating
    // in r = m..0 order keeps the descending-power equations triangular.
    RationalMatrix reversed(sys.matrix.size());
    for (std::size_t i = 0; i < sys.matrix.size(); ++i)
        reversed[i].assign(sys.matrix[i].rbegin(), sys.matrix[i].rend());
    try {
        CoeffRow solution = solve_exact(std::move(reversed), std::move(sys.rhs));
        return CoeffRow(solution.rbegin(), solution.rend());
    } catch (const InconsistentSystem& e) {
        throw IdentityUnsatisfiable(m, e.what());
    }
}

}  // namespace oddpow
