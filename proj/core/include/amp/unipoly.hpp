#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "amp/rat.hpp"

namespace amp {

/// Dense univariate polynomial over Rat; index i holds the coefficient of w^i.
/// The zero polynomial has no coefficients, otherwise the last one is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);
    UniPoly(std::initializer_list<Rat> coeffs) : UniPoly(std::vector<Rat>(coeffs)) {}
    static UniPoly constant(const Rat& c) { return UniPoly({c}); }
    /// c * w^e
    static UniPoly monomial(const Rat& c, std::size_t e);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of w^i (zero past the degree).
    Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(); }
    std::span<const Rat> coeffs() const { return coeffs_; }
    const Rat& leading() const;

    Rat evaluate(const Rat& w) const;
    double evaluate_float(double w) const;
    UniPoly derivative() const;
    /// p(q(w)).
    UniPoly compose(const UniPoly& inner) const;
    /// Leading coefficient scaled to 1 (zero stays zero).
    UniPoly monic() const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const Rat& c);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const Rat& c) { return a *= c; }
    friend UniPoly operator*(const Rat& c, UniPoly a) { return a *= c; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    /// Euclidean division; throws DomainError on a zero divisor.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
    /// Monic gcd (zero only when both inputs are zero).
    static UniPoly gcd(UniPoly a, UniPoly b);

    /// Human-readable form in the given variable, e.g. "1/2*w^2+1/2".
    std::string to_string(const std::string& var = "w") const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

/// prod_{i=1}^{m} (r*w + i); the empty product is 1.
UniPoly rising_product(unsigned r, unsigned m);

}  // namespace amp
