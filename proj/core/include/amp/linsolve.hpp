#pragma once

#include <cstddef>
#include <vector>

#include "amp/rat.hpp"

namespace amp {

using RatMatrix = std::vector<std::vector<Rat>>;

/// Outcome of an exact solve of A x = b.
struct ExactSolution {
    bool consistent = false;
    std::size_t rank = 0;
    /// Pivot column of each echelon row, increasing.
    std::vector<std::size_t> pivots;
    /// A particular solution with every free variable set to 0 (empty if inconsistent).
    std::vector<Rat> particular;
    /// Basis of the kernel of A: one vector per free column, that column set to 1.
    std::vector<std::vector<Rat>> kernel;

    bool unique() const { return consistent && kernel.empty(); }
};

/**
 * Solves A x = b exactly by fraction-free (Bareiss) elimination.
 *
 * Each row of [A | b] is first scaled to coprime integers; elimination then
 * runs over BigInt with exact divisions by the previous pivot, so every
 * intermediate entry is a minor of the scaled matrix. Back-substitution is
 * done over Rat. Free columns are those without a pivot when columns are
 * scanned left to right.
 */
ExactSolution solve_exact(const RatMatrix& a, const std::vector<Rat>& b);

/// Kernel basis of A (same convention as ExactSolution::kernel).
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& a);

}  // namespace amp
