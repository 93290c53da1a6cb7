#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "amp/multipoly.hpp"
#include "amp/rat.hpp"

namespace amp {

/// Hn[r] = sum_{i=1}^{n-1} 1/i^r (upper limit n-1; Hn[r] at n = 1 is 0).
Rat harmonic(unsigned n, unsigned r);
/// Hn[1..R] at a single n; index 0 is unused and set to 0.
std::vector<Rat> harmonic_row(unsigned n, unsigned max_order);
/// Double-precision Hn[r] summed from the smallest term upwards.
double harmonic_float(unsigned long n, unsigned r);

/**
 * Polynomial in n, Hn[1], ..., Hn[R] divided by n^denom_pow.
 *
 * Variable slot 0 is n and slot j is Hn[j]. The power of n in the
 * denominator is kept minimal: it is reduced while every numerator term
 * still carries a factor of n.
 */
class HarmonicExpr {
public:
    HarmonicExpr() : HarmonicExpr(0, MultiPoly(1), 0) {}
    HarmonicExpr(unsigned max_order, MultiPoly numerator, unsigned denom_pow);

    /// Reads expressions such as "(n*Hn[1]-n*Hn[2]+2*Hn[1])/n".
    /// The denominator must be a constant times a power of n.
    static HarmonicExpr parse(std::string_view text);

    unsigned max_order() const { return order_; }
    const MultiPoly& numerator() const { return num_; }
    unsigned denom_pow() const { return denom_pow_; }

    /// Same expression over a larger set of harmonic indeterminates.
    HarmonicExpr widened(unsigned max_order) const;

    Rat evaluate(unsigned n) const;
    /// `h[j]` supplies Hn[j] for j = 1..R (h[0] ignored).
    Rat evaluate(unsigned n, std::span<const Rat> h) const;
    double evaluate_float(double n, std::span<const double> h) const;

    /// Computereze rendering, e.g. "(n*Hn[1]+2*Hn[1]-n*Hn[2])/n".
    std::string to_string() const;

    friend bool operator==(const HarmonicExpr& a, const HarmonicExpr& b);

private:
    void canonicalize();
    unsigned order_ = 0;
    MultiPoly num_;
    unsigned denom_pow_ = 0;
};

/// Variable names for slots 0..R: "n", "Hn[1]", ...
std::vector<std::string> harmonic_variable_names(unsigned max_order);

}  // namespace amp
