#include "amp/bivar.hpp"

#include <array>

namespace amp {

namespace {

const std::array<std::string, 2> kNames{"n", "w"};

/// Coefficients of p viewed as a polynomial in `var` over Q[other].
std::vector<UniPoly> slices(const BivarPoly& p, std::size_t var) {
    const std::size_t other = 1 - var;
    std::vector<std::vector<Rat>> buckets(p.degree_in(other) + 1, std::vector<Rat>(p.degree_in(var) + 1));
    for (const auto& [e, c] : p.terms()) buckets[e[other]][e[var]] = c;
    std::vector<UniPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.emplace_back(std::move(b));
    return out;
}

UniPoly to_univariate(const BivarPoly& p, std::size_t var) {
    std::vector<Rat> c(p.degree_in(var) + 1);
    for (const auto& [e, v] : p.terms()) c[e[var]] += v;
    return UniPoly(std::move(c));
}

/// Exact quotient of p by a univariate polynomial d in `var`.
BivarPoly divide_by_univariate(const BivarPoly& p, const UniPoly& d, std::size_t var) {
    const std::size_t other = 1 - var;
    BivarPoly out(2);
    auto parts = slices(p, var);
    for (std::size_t k = 0; k < parts.size(); ++k) {
        auto [q, r] = UniPoly::divmod(parts[k], d);
        if (!r.is_zero()) throw DomainError("BivarRatFun: inexact cancellation");
        for (std::size_t i = 0; i < q.coeffs().size(); ++i) {
            Exponents e{0, 0};
            e[var] = static_cast<unsigned>(i);
            e[other] = static_cast<unsigned>(k);
            out.add_term(e, q.coeffs()[i]);
        }
    }
    return out;
}

}  // namespace

BivarPoly bivar_constant(const Rat& c) { return MultiPoly::constant(2, c); }
BivarPoly bivar_n() { return MultiPoly::variable(2, kVarN); }
BivarPoly bivar_w() { return MultiPoly::variable(2, kVarW); }

UniPoly specialize_n(const BivarPoly& p, const Rat& n) {
    std::vector<Rat> c(p.degree_in(kVarW) + 1);
    for (const auto& [e, v] : p.terms()) c[e[kVarW]] += v * n.pow(static_cast<int>(e[kVarN]));
    return UniPoly(std::move(c));
}

BivarRatFun::BivarRatFun(BivarPoly num) : BivarRatFun(std::move(num), bivar_constant(Rat(1))) {}

BivarRatFun::BivarRatFun(BivarPoly num, BivarPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != 2 || den_.nvars() != 2) throw DomainError("BivarRatFun: operands must be bivariate");
    if (den_.is_zero()) throw DomainError("BivarRatFun: denominator is identically zero");
    canonicalize();
}

void BivarRatFun::canonicalize() {
    if (num_.is_zero()) {
        den_ = bivar_constant(Rat(1));
        return;
    }
    for (std::size_t var : {kVarN, kVarW}) {
        const std::size_t other = 1 - var;
        UniPoly g;
        if (den_.degree_in(other) == 0) {
            g = to_univariate(den_, var);
            for (const auto& s : slices(num_, var)) g = UniPoly::gcd(g, s);
        } else if (num_.degree_in(other) == 0) {
            g = to_univariate(num_, var);
            for (const auto& s : slices(den_, var)) g = UniPoly::gcd(g, s);
        }
        if (g.degree() > 0) {
            num_ = divide_by_univariate(num_, g, var);
            den_ = divide_by_univariate(den_, g, var);
        }
    }
    // Joint content of the pair.
    BigInt g = 0, l = 1;
    for (const auto* p : {&num_, &den_}) {
        for (const auto& [_, c] : p->terms()) {
            g = gcd(g, c.num());
            l = lcm(l, c.den());
        }
    }
    Rat scale(l, abs(g));
    if (den_.leading_term().second.sign() < 0) scale = -scale;
    num_ *= scale;
    den_ *= scale;
}

BivarRatFun BivarRatFun::parse(std::string_view text) {
    auto parsed = parse_rational_expression(text, 2, [](std::string_view tok) -> std::optional<std::size_t> {
        if (tok == "n") return kVarN;
        if (tok == "w") return kVarW;
        return std::nullopt;
    });
    return BivarRatFun(std::move(parsed.num), std::move(parsed.den));
}

Rat BivarRatFun::evaluate(const Rat& n, const Rat& w) const {
    const std::array<Rat, 2> pt{n, w};
    const Rat d = den_.evaluate(pt);
    if (d.is_zero()) throw DomainError("BivarRatFun: denominator vanishes at the evaluation point");
    return num_.evaluate(pt) / d;
}

std::pair<UniPoly, UniPoly> BivarRatFun::at_n(const Rat& n) const {
    return {specialize_n(num_, n), specialize_n(den_, n)};
}

BivarRatFun BivarRatFun::shift_n(const Rat& delta) const {
    return BivarRatFun(num_.shift(kVarN, delta), den_.shift(kVarN, delta));
}

BivarRatFun operator+(const BivarRatFun& a, const BivarRatFun& b) {
    if (a.den_ == b.den_) return BivarRatFun(a.num_ + b.num_, a.den_);
    return BivarRatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

BivarRatFun operator-(const BivarRatFun& a, const BivarRatFun& b) { return a + (-b); }

BivarRatFun operator*(const BivarRatFun& a, const BivarRatFun& b) {
    return BivarRatFun(a.num_ * b.num_, a.den_ * b.den_);
}

BivarRatFun operator/(const BivarRatFun& a, const BivarRatFun& b) {
    if (b.is_zero()) throw DomainError("BivarRatFun: division by zero");
    return BivarRatFun(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const BivarRatFun& a, const BivarRatFun& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string BivarRatFun::to_string() const {
    const auto n = num_.to_string(kNames);
    if (den_ == bivar_constant(Rat(1))) return n;
    const bool wrap_num = num_.terms().size() > 1;
    const bool wrap_den =
        den_.terms().size() > 1 || (!den_.is_constant() && den_.leading_term().second != Rat(1));
    return (wrap_num ? "(" + n + ")" : n) + "/" + (wrap_den ? "(" + den_.to_string(kNames) + ")" : den_.to_string(kNames));
}

}  // namespace amp
