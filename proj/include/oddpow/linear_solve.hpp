#pragma once

// Exact Gaussian elimination over Rational for (possibly overdetermined)
// systems A a = b that are expected to have a unique solution.

#include "oddpow/exact_arith.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oddpow {

/// The reduced system has a nonzero residual row (0 = c with c != 0).
class InconsistentSystem : public std::runtime_error {
public:
    InconsistentSystem(std::size_t row, Rational residual)
        : std::runtime_error("inconsistent linear system: row " + std::to_string(row) +
                             " reduces to 0 = " + residual.str()),
          row_(row),
          residual_(std::move(residual)) {}

    std::size_t row() const noexcept { return row_; }
    const Rational& residual() const noexcept { return residual_; }

private:
    std::size_t row_;
    Rational residual_;
};

/// Dense row-major matrix; rows are equations.
using RationalMatrix = std::vector<std::vector<Rational>>;

/**
 * Solves A a = b exactly. Rows are scanned in the order given, so callers
 * that know a good pivot order (e.g. equations sorted by descending power)
 * get a triangular elimination with no row swaps.
 *
 * Throws InconsistentSystem if any non-pivot equation is left with a nonzero
 * right-hand side, and std::logic_error if some unknown has no pivot (the
 * square subsystem is singular).
 */
inline std::vector<Rational> solve_exact(RationalMatrix a, std::vector<Rational> b) {
    const std::size_t rows = a.size();
    if (b.size() != rows)
        throw std::invalid_argument("solve_exact: row count mismatch");
    const std::size_t cols = rows == 0 ? 0 : a.front().size();
    for (const auto& row : a)
        if (row.size() != cols)
            throw std::invalid_argument("solve_exact: ragged matrix");

    std::vector<std::size_t> pivot_row_of(cols);
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t p = next;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows)
            throw std::logic_error("solve_exact: singular system, no pivot for unknown " +
                                   std::to_string(c));
        std::swap(a[p], a[next]);
        std::swap(b[p], b[next]);

        const Rational inv = Rational(1) / a[next][c];
        for (std::size_t k = c; k < cols; ++k) a[next][k] *= inv;
        b[next] *= inv;

        for (std::size_t i = 0; i < rows; ++i) {
            if (i == next || a[i][c].is_zero()) continue;
            const Rational f = a[i][c];
            for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[next][k];
            b[i] -= f * b[next];
        }
        pivot_row_of[c] = next++;
    }

    // Rows past the last pivot are all-zero on the left; their right-hand
    // side is the residual.
    for (std::size_t i = next; i < rows; ++i)
        if (!b[i].is_zero()) throw InconsistentSystem(i, b[i]);

    std::vector<Rational> solution(cols);
    for (std::size_t c = 0; c < cols; ++c) solution[c] = b[pivot_row_of[c]];
    return solution;
}

}  // namespace oddpow
