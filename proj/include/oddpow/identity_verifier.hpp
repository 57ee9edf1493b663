#pragma once

/**
 * @file identity_verifier.hpp
 * @brief Checks x^{2m+1} = sum_{k=1}^{x} sum_r A(m,r) k^r (x-k)^r three ways:
 *        pointwise with exact integers, as an exact polynomial identity, and
 *        under the k <-> x-k reindexing.
 *
 * Every check has an overload taking an explicit coefficient row so that a
 * caller can verify rows from any source (including deliberately corrupted
 * ones); the row-less overloads use the shared CoeffTriangle.
 */

#include "oddpow/coeff_engine.hpp"
#include "oddpow/exact_arith.hpp"
#include "oddpow/polynomial.hpp"
#include "oddpow/power_sums.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oddpow {

enum class VerifyMode { numeric, symbolic, symmetry };

inline std::string_view to_string(VerifyMode mode) {
    switch (mode) {
        case VerifyMode::numeric: return "numeric";
        case VerifyMode::symbolic: return "symbolic";
        case VerifyMode::symmetry: return "symmetry";
    }
    return "?";
}

struct VerifyFailure {
    std::int64_t x = 0;  // -1 marks a polynomial (symbolic) failure
    std::string expected;
    std::string actual;
};

struct VerifyReport {
    std::size_t m = 0;
    VerifyMode mode = VerifyMode::numeric;
    std::string range;  // "lo..hi" or "polynomial"
    bool passed = true;
    std::optional<VerifyFailure> first_failure;
};

namespace detail {

inline Rational row_sum_at(std::span<const Rational> row, const BigInt& k, const BigInt& x) {
    // k^r (x-k)^r = (k (x-k))^r, with 0^0 = 1
    const BigInt base = k * (x - k);
    Rational total;
    BigInt power = 1;
    for (std::size_t r = 0; r < row.size(); ++r) {
        if (!row[r].is_zero()) total += row[r] * Rational(power);
        power *= base;
    }
    return total;
}

inline BigInt odd_power(std::size_t m, std::uint64_t x) {
    return ipow(BigInt(x), static_cast<unsigned>(2 * m + 1));
}

}  // namespace detail

/// sum_{k=1}^{x} sum_r row[r] k^r (x-k)^r
inline Rational rhs_value(std::span<const Rational> row, std::uint64_t x) {
    const BigInt bx(x);
    Rational total;
    for (std::uint64_t k = 1; k <= x; ++k) total += detail::row_sum_at(row, BigInt(k), bx);
    return total;
}

inline Rational rhs_value(std::size_t m, std::uint64_t x) {
    const CoeffRow row = coeff_row(m);
    return rhs_value(row, x);
}

inline VerifyReport verify_numeric(std::size_t m, std::span<const Rational> row,
                                   std::uint64_t x_max) {
    VerifyReport report{m, VerifyMode::numeric, "0.." + std::to_string(x_max), true, {}};
    for (std::uint64_t x = 0; x <= x_max; ++x) {
        const Rational expected(detail::odd_power(m, x));
        const Rational actual = rhs_value(row, x);
        if (actual != expected) {
            report.passed = false;
            report.first_failure =
                VerifyFailure{static_cast<std::int64_t>(x), expected.str(), actual.str()};
            break;
        }
    }
    return report;
}

inline VerifyReport verify_numeric(std::size_t m, std::uint64_t x_max) {
    const CoeffRow row = coeff_row(m);
    return verify_numeric(m, row, x_max);
}

/// sum_r row[r] C_r(x) as a polynomial.
inline PolynomialQ expand_rhs(std::span<const Rational> row) {
    PolynomialQ total;
    for (std::size_t r = 0; r < row.size(); ++r)
        if (!row[r].is_zero()) total += row[r] * convolution_sum_poly(r);
    return total;
}

inline VerifyReport verify_symbolic(std::size_t m, std::span<const Rational> row) {
    VerifyReport report{m, VerifyMode::symbolic, "polynomial", true, {}};
    const PolynomialQ lhs = PolynomialQ::monomial(Rational(1), 2 * m + 1);
    const PolynomialQ rhs = expand_rhs(row);
    if (rhs != lhs) {
        report.passed = false;
        report.first_failure = VerifyFailure{-1, lhs.str(), rhs.str()};
    }
    return report;
}

inline VerifyReport verify_symbolic(std::size_t m) {
    const CoeffRow row = coeff_row(m);
    return verify_symbolic(m, row);
}

/// sum_{k=1}^{x} == sum_{k=0}^{x-1} of the same summand, for x in [1, x_max].
inline VerifyReport verify_symmetry(std::size_t m, std::span<const Rational> row,
                                    std::uint64_t x_max) {
    VerifyReport report{m, VerifyMode::symmetry,
                        x_max == 0 ? std::string("empty") : "1.." + std::to_string(x_max), true,
                        {}};
    for (std::uint64_t x = 1; x <= x_max; ++x) {
        const BigInt bx(x);
        Rational upper;
        Rational lower;
        for (std::uint64_t k = 1; k <= x; ++k) upper += detail::row_sum_at(row, BigInt(k), bx);
        for (std::uint64_t k = 0; k < x; ++k) lower += detail::row_sum_at(row, BigInt(k), bx);
        if (upper != lower) {
            report.passed = false;
            report.first_failure = VerifyFailure{static_cast<std::int64_t>(x), upper.str(), lower.str()};
            break;
        }
    }
    return report;
}

inline VerifyReport verify_symmetry(std::size_t m, std::uint64_t x_max) {
    const CoeffRow row = coeff_row(m);
    return verify_symmetry(m, row, x_max);
}

/// columns[j][x] = (Delta^j f)(x) for f(x) = x^p, x in [0, x_max - j].
struct DifferenceTable {
    std::vector<std::vector<BigInt>> columns;
};

inline DifferenceTable difference_table(std::size_t p, std::uint64_t x_max, std::size_t depth) {
    if (depth < 1) throw std::domain_error("difference_table: depth must be positive");
    DifferenceTable table;
    std::vector<BigInt> values;
    values.reserve(x_max + 1);
    for (std::uint64_t x = 0; x <= x_max; ++x)
        values.push_back(ipow(BigInt(x), static_cast<unsigned>(p)));
    table.columns.push_back(std::move(values));
    for (std::size_t j = 1; j <= depth; ++j) {
        const auto& prev = table.columns.back();
        std::vector<BigInt> next;
        for (std::size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(prev[i + 1] - prev[i]);
        table.columns.push_back(std::move(next));
    }
    return table;
}

}  // namespace oddpow
