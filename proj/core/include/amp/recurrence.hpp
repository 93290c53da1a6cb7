#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "amp/ansatz.hpp"
#include "amp/bivar.hpp"
#include "amp/unipoly.hpp"

namespace amp {

/// sum_{j=0}^{L} c_j(n, w) f^(k)_{n+j}(w) = 0 with c_L = 1.
struct RecurrenceSpec {
    unsigned k = 1;
    unsigned order = 0;
    std::vector<BivarRatFun> coeffs;

    /// Divides through by c_L; throws if c_L is zero.
    static RecurrenceSpec monic(unsigned k, std::vector<BivarRatFun> coeffs);
    /// One line per coefficient, "c_j = ...".
    std::string to_string() const;
};

/// Same k and order, and every coefficient equal as a rational function.
bool equivalent(const RecurrenceSpec& a, const RecurrenceSpec& b);

/// Known recurrences for k = 1, 2, 3 (orders 2, 3, 4), indexed so
/// that sum_j c_j(n, w) pgf(n + j, k) = 0 for n >= k.
RecurrenceSpec builtin_recurrence(unsigned k);

/// The same coefficient texts before re-indexing. For k = 2, 3 these
/// hold for pgf(n + k - 1 + j, k) rather than pgf(n + j, k).
RecurrenceSpec unshifted_recurrence(unsigned k);

/// Memoized pgf(n, k) for a fixed k.
class PgfTable {
public:
    explicit PgfTable(unsigned k) : k_(k) {}
    unsigned k() const { return k_; }
    const UniPoly& at(unsigned n);

private:
    unsigned k_;
    std::map<unsigned, UniPoly> cache_;
};

struct RecurrenceReport {
    bool ok = true;
    unsigned n_from = 0;
    unsigned n_to = 0;
    unsigned checked = 0;
    /// First n where the identity fails, and the lowest w-power with a nonzero residual.
    std::optional<unsigned> failing_n;
    std::optional<unsigned> failing_power;
    Rat residual;
    std::string message;
};

/**
 * For each n in [n_from, n_to] multiplies out the denominators of the c_j at
 * that n and checks that sum_j c_j f_{n+j} is the zero polynomial in w.
 * Requires n_from >= k.
 */
RecurrenceReport verify_recurrence(const RecurrenceSpec& spec, unsigned n_from, unsigned n_to);
RecurrenceReport verify_recurrence(const RecurrenceSpec& spec, unsigned n_from, unsigned n_to, PgfTable& table);

struct RecurrenceFit {
    RecurrenceSpec spec;
    std::size_t unknowns = 0;
    std::size_t equations = 0;
    unsigned train_from = 0;
    unsigned train_to = 0;
    unsigned holdout_from = 0;
    unsigned holdout_to = 0;
    /// Kernel dimension of the final training system.
    std::size_t kernel_dim = 0;
};

using RecurrenceResult = std::variant<RecurrenceFit, NoFit>;

inline constexpr unsigned kRecurrenceHoldout = 10;

/**
 * Searches for c_j = p_j(n, w) / q(n), j < L, with deg_n p_j <= deg_n,
 * deg_w p_j <= deg_w and deg q <= deg_n, by matching coefficients of w in
 * sum_j p_j f_{n+j} + q f_{n+L} = 0 over consecutive n starting at k.
 * A candidate is accepted only if it also holds on the next ten n.
 */
RecurrenceResult guess_recurrence(unsigned k, unsigned order, unsigned deg_n, unsigned deg_w);

}  // namespace amp
