#include "amp/rat.hpp"

#include <cctype>
#include <ostream>

namespace amp {

Rat::Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}

Rat::Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("Rat: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DomainError("Rat: division by zero");
    q_ /= o.q_;
    return *this;
}

namespace {

bool valid_integer(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

BigInt parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return BigInt(std::string(s), 10);
}

}  // namespace

Rat Rat::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
        throw DomainError("Rat: malformed rational '" + std::string(text) + "'");
    return Rat(parse_integer(num), parse_integer(den));
}

std::string Rat::str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rat::pretty() const {
    return is_integer() ? q_.get_num().get_str() : q_.get_str();
}

Rat Rat::pow(int e) const {
    if (e < 0) {
        if (is_zero()) throw DomainError("Rat: zero to a negative power");
        return (Rat(1) / *this).pow(-e);
    }
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rat(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.pretty(); }

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace amp
