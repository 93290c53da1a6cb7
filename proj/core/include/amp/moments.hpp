#pragma once

#include <vector>

#include "amp/harmonic.hpp"
#include "amp/rat.hpp"
#include "amp/unipoly.hpp"

namespace amp {

/// Mean and central moments of a distribution on {0, 1, 2, ...}.
struct MomentVector {
    Rat mean;
    /// central[r] = E[(X - mean)^r] for r = 0..R; central[0] = 1, central[1] = 0.
    std::vector<Rat> central;

    unsigned max_order() const { return central.empty() ? 0 : static_cast<unsigned>(central.size() - 1); }
    /// m_r; r = 1 gives 0 (moment about the mean).
    const Rat& m(unsigned r) const;
};

inline constexpr unsigned kMaxMomentOrder = 32;

/// Exact mean and central moments up to order R of the law whose probability
/// generating function is f. Throws DomainError unless f(1) = 1.
MomentVector moments_from_pgf(const UniPoly& f, unsigned max_order);

/// f^(j)(1) for j = 0..R.
std::vector<Rat> factorial_moments(const UniPoly& f, unsigned max_order);

/// k (1 + sum_{i=k+1}^{n-1} 1/i); requires 1 <= k < n.
Rat expectation_k(unsigned n, unsigned k);

/// The closed forms for E[X_n] (r = 1) and m_2..m_6, one absent-minded passenger.
const HarmonicExpr& moment_closed_form_expr(unsigned r);
/// moment_closed_form_expr(r) evaluated at n; requires n >= 2 and 1 <= r <= 6.
Rat moment_closed_form(unsigned n, unsigned r);

/// Largest n for which standardized_moments_float uses exact pgf moments.
inline constexpr unsigned long kExactStandardizedMaxN = 300;

/// m_r / m_2^{r/2} for r = 3..R (R <= 6) with one absent-minded passenger.
/// Up to kExactStandardizedMaxN the ratio of exact moments is rounded once;
/// beyond it the closed forms are evaluated with harmonic_float values, whose
/// relative error is about n * 2^-53 (below 1e-9 at n = 10^6).
std::vector<double> standardized_moments_float(unsigned long n, unsigned max_order);

}  // namespace amp
