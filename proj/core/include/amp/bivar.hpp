#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "amp/multipoly.hpp"
#include "amp/unipoly.hpp"

namespace amp {

/// Variable slots of a bivariate polynomial: n first, then w.
inline constexpr std::size_t kVarN = 0;
inline constexpr std::size_t kVarW = 1;

/// Polynomial in (n, w) over Rat.
using BivarPoly = MultiPoly;

BivarPoly bivar_constant(const Rat& c);
BivarPoly bivar_n();
BivarPoly bivar_w();

/// Reads the polynomial into Q[w] after fixing n.
UniPoly specialize_n(const BivarPoly& p, const Rat& n);

/**
 * Rational function num(n, w) / den(n, w).
 *
 * Canonical form: the joint content of the pair is removed, the graded-lex
 * leading coefficient of the denominator is positive, and when either side
 * depends on a single variable their common factor in that variable is
 * cancelled. Equality is decided by cross-multiplication, so it does not
 * depend on how far the cancellation went.
 */
class BivarRatFun {
public:
    BivarRatFun() : BivarRatFun(bivar_constant(Rat(0))) {}
    explicit BivarRatFun(BivarPoly num);
    BivarRatFun(BivarPoly num, BivarPoly den);
    /// Parses expressions in n and w such as "-(2*n+w+1)/(2+n)".
    static BivarRatFun parse(std::string_view text);

    const BivarPoly& num() const { return num_; }
    const BivarPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rat evaluate(const Rat& n, const Rat& w) const;
    /// (numerator, denominator) as polynomials in w once n is fixed.
    std::pair<UniPoly, UniPoly> at_n(const Rat& n) const;
    /// The function n -> this(n + delta).
    BivarRatFun shift_n(const Rat& delta) const;

    friend BivarRatFun operator+(const BivarRatFun& a, const BivarRatFun& b);
    friend BivarRatFun operator-(const BivarRatFun& a, const BivarRatFun& b);
    friend BivarRatFun operator*(const BivarRatFun& a, const BivarRatFun& b);
    friend BivarRatFun operator/(const BivarRatFun& a, const BivarRatFun& b);
    BivarRatFun operator-() const { return BivarRatFun(-num_, den_); }
    friend bool operator==(const BivarRatFun& a, const BivarRatFun& b);

    /// e.g. "(n^2+n*w)/(n^2+3*n+2)"; plain numerator when the denominator is 1.
    std::string to_string() const;

private:
    void canonicalize();
    BivarPoly num_;
    BivarPoly den_;
};

}  // namespace amp
