#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace amp {

/// Raised when an operation's mathematical precondition is violated.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a request would exceed a configured size guard.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arbitrary-precision integer used for fraction-free linear algebra.
using BigInt = mpz_class;

/**
 * Exact rational number backed by GMP.
 *
 * Always reduced, with a positive denominator; zero is 0/1. Values are
 * immutable from the caller's point of view: every operation returns a new
 * canonical value.
 */
class Rat {
public:
    Rat() = default;
    Rat(long v) : q_(v) {}                                   // NOLINT(implicit)
    Rat(int v) : q_(v) {}                                    // NOLINT(implicit)
    Rat(const BigInt& v) : q_(v) {}                          // NOLINT(implicit)
    Rat(long num, long den);
    Rat(const BigInt& num, const BigInt& den);

    /// Parses "p", "-p" or "p/q" (base 10). Throws DomainError on malformed input.
    static Rat parse(std::string_view text);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Lossless "p/q" form; integers keep the "/1".
    std::string str() const;
    /// Shortest readable form: "p" for integers, "p/q" otherwise.
    std::string pretty() const;
    double to_double() const { return q_.get_d(); }

    Rat operator-() const { Rat r; r.q_ = -q_; return r; }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// Integer power; negative exponents invert (zero base throws).
    Rat pow(int e) const;
    Rat abs() const { Rat r; r.q_ = ::abs(q_); return r; }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// n! as an exact integer.
BigInt factorial(unsigned n);
/// Binomial coefficient C(n, k); zero when k > n.
BigInt binomial(unsigned n, unsigned k);

}  // namespace amp
