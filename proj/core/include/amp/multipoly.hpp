#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "amp/rat.hpp"

namespace amp {

using Exponents = std::vector<unsigned>;

/// Graded-lexicographic order: total degree first, then earlier variables dominate.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/**
 * Sparse multivariate polynomial over Rat in a fixed number of variables.
 *
 * Terms are kept in graded-lex order with no zero coefficients, so two
 * polynomials over the same variables compare equal iff they are the same
 * polynomial.
 */
class MultiPoly {
public:
    using Terms = std::map<Exponents, Rat, GrlexLess>;

    explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}
    static MultiPoly constant(std::size_t nvars, const Rat& c);
    static MultiPoly variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    unsigned total_degree() const;
    unsigned degree_in(std::size_t var) const;
    Rat coeff(const Exponents& e) const;
    /// Largest term under graded-lex; throws on the zero polynomial.
    const Terms::value_type& leading_term() const;

    void add_term(const Exponents& e, const Rat& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rat& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rat& c) { return a *= c; }
    friend MultiPoly operator*(const Rat& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;
    MultiPoly pow(unsigned e) const;

    Rat evaluate(std::span<const Rat> point) const;
    double evaluate_float(std::span<const double> point) const;
    /// Replaces variable `var` by a constant; the variable count is unchanged.
    MultiPoly substitute(std::size_t var, const Rat& value) const;
    /// Replaces variable `var` by (var + delta).
    MultiPoly shift(std::size_t var, const Rat& delta) const;

    /// Smallest positive rational c such that this / c has coprime integer coefficients.
    Rat content() const;

    /// Renders with the supplied variable names, e.g. "3*n^2*w-1/2".
    std::string to_string(std::span<const std::string> names) const;

private:
    std::size_t nvars_ = 0;
    Terms terms_;
};

/// Numerator and denominator produced by the expression reader.
struct ParsedRational {
    MultiPoly num;
    MultiPoly den;
};

/**
 * Reads "computereze" arithmetic: integers, named variables, + - * / ^,
 * parentheses. `resolve` maps a variable token (for instance "n", "w" or
 * "Hn[3]") to its index, or nullopt if unknown. Division is kept symbolic
 * as a numerator/denominator pair; exponents must be nonnegative integers.
 */
ParsedRational parse_rational_expression(std::string_view text, std::size_t nvars,
                                         const std::function<std::optional<std::size_t>(std::string_view)>& resolve);

}  // namespace amp
