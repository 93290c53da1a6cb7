#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "amp/harmonic.hpp"
#include "amp/multipoly.hpp"
#include "amp/rat.hpp"

namespace amp {

/**
 * Finite basis of monomials n^a * prod_j Hn[j]^{e_j} over j = 1..R.
 *
 * Required bounds: R, the total degree, and the fixed power of n dividing
 * the whole expression. Two optional bounds prune the basis further: the
 * degree in n, and the harmonic weight sum_j j * e_j.
 */
struct AnsatzSpec {
    unsigned max_order = 1;
    unsigned max_total_degree = 1;
    unsigned denom_pow = 0;
    std::optional<unsigned> max_n_degree;
    std::optional<unsigned> max_weight;
};

/// Basis monomials in increasing graded-lex order (slot 0 = n, slot j = Hn[j]).
std::vector<Exponents> ansatz_basis(const AnsatzSpec& spec);

/// Default search space for the r-th moment about the mean (r = 1 means the mean):
/// R = r, n-degree <= 1, weight <= r, divided by n for r >= 2.
AnsatzSpec default_moment_ansatz(unsigned r);

struct AnsatzFit {
    HarmonicExpr expr;
    /// False when the interpolation system left free coefficients (set to 0).
    bool unique = true;
    std::size_t basis_size = 0;
    std::size_t solve_points = 0;
    std::size_t holdout_points = 0;
};

struct NoFit {
    std::string reason;
    /// Number of unknown coefficients in the attempted ansatz.
    std::size_t unknowns = 0;
    /// Number of exact equations that were solved.
    std::size_t equations = 0;
};

using AnsatzResult = std::variant<AnsatzFit, NoFit>;

inline constexpr std::size_t kAnsatzHoldout = 5;

/**
 * Interpolates the data with the ansatz over all but the last five points,
 * then checks the fit on those five. Needs at least basis + 5 points
 * (DomainError otherwise). NoFit means the ansatz cannot describe the data.
 */
AnsatzResult fit_harmonic_ansatz(std::span<const std::pair<unsigned, Rat>> data, const AnsatzSpec& spec);

/// (n, m_r(X_n)) for n in [n_from, n_to], one absent-minded passenger;
/// r = 1 yields the mean.
std::vector<std::pair<unsigned, Rat>> moment_data(unsigned r, unsigned n_from, unsigned n_to);

}  // namespace amp
