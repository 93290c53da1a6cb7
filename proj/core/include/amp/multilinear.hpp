#pragma once

#include <cstdint>
#include <utility>
#include <span>
#include <string>
#include <vector>

#include "amp/rat.hpp"
#include "amp/unipoly.hpp"

namespace amp {

/// Subset of {1..n} as a bit-set: bit (i-1) stands for element i.
using Subset = std::uint64_t;

inline constexpr unsigned kMaxMultilinearVars = 62;

inline constexpr Subset singleton(unsigned i) { return Subset{1} << (i - 1); }
inline constexpr bool contains(Subset s, unsigned i) { return (s >> (i - 1)) & 1U; }
Subset make_subset(std::initializer_list<unsigned> elems);
/// {1..n}
inline constexpr Subset full_subset(unsigned n) { return n == 0 ? 0 : (~Subset{0} >> (64 - n)); }
/// Elements in increasing order.
std::vector<unsigned> elements(Subset s);
/// "{1,3}" style rendering; the empty set is "{}".
std::string subset_to_string(Subset s);

/**
 * Multilinear polynomial in w_1..w_n over Rat.
 *
 * Each term is keyed by the subset of variables it multiplies. Terms are kept
 * sorted by key in a flat vector and zero coefficients are never stored. Products that would square a variable
 * throw DomainError instead of leaving the multilinear ring.
 */
class MultilinearPoly {
public:
    using Terms = std::vector<std::pair<Subset, Rat>>;

    explicit MultilinearPoly(unsigned n = 0);
    static MultilinearPoly constant(unsigned n, const Rat& c);
    /// w_i
    static MultilinearPoly variable(unsigned n, unsigned i);

    unsigned n() const { return n_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(Subset s) const;
    /// Union of all variables that occur.
    Subset support() const;

    /// Adds c to the coefficient of the monomial s.
    void add_term(Subset s, const Rat& c);

    MultilinearPoly operator-() const;
    MultilinearPoly& operator+=(const MultilinearPoly& o);
    MultilinearPoly& operator-=(const MultilinearPoly& o);
    MultilinearPoly& operator*=(const Rat& c);
    friend MultilinearPoly operator+(MultilinearPoly a, const MultilinearPoly& b) { return a += b; }
    friend MultilinearPoly operator-(MultilinearPoly a, const MultilinearPoly& b) { return a -= b; }
    friend MultilinearPoly operator*(MultilinearPoly a, const Rat& c) { return a *= c; }
    friend MultilinearPoly operator*(const Rat& c, MultilinearPoly a) { return a *= c; }
    /// Throws DomainError if any pair of terms shares a variable.
    friend MultilinearPoly operator*(const MultilinearPoly& a, const MultilinearPoly& b);
    friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

    /// (slope*w_j + offset) * this; requires that no term contains w_j.
    MultilinearPoly times_affine(unsigned j, const Rat& slope, const Rat& offset) const;
    /// this / w_j by coefficient shifting; requires that every term contains w_j.
    MultilinearPoly divide_by_variable(unsigned j) const;

    /// Full evaluation; point[i-1] is the value of w_i.
    Rat evaluate(std::span<const Rat> point) const;
    /// Sets w_j := value, leaving the other variables symbolic.
    MultilinearPoly substitute(unsigned j, const Rat& value) const;
    /// Sets every variable outside `keep` to 1.
    MultilinearPoly specialize_to_one_outside(Subset keep) const;
    /// All w_i := w.
    UniPoly diagonal() const;

    /// e.g. "1/2 + 1/2*w1*w2"
    std::string to_string() const;

private:
    void check_index(unsigned j) const;
    /// Sorts, combines repeated keys and drops zeros.
    static void normalize(Terms& t);
    unsigned n_ = 0;
    Terms terms_;
};

}  // namespace amp
