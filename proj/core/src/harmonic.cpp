#include "amp/harmonic.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>

namespace amp {

Rat harmonic(unsigned n, unsigned r) {
    if (r < 1) throw DomainError("harmonic: order must be >= 1");
    BigInt num = 0, den = 1;
    // Sum over a common denominator to avoid a gcd per term.
    for (unsigned i = 1; i < n; ++i) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), i, r);
        num = num * p + den;
        den *= p;
    }
    return Rat(num, den);
}

std::vector<Rat> harmonic_row(unsigned n, unsigned max_order) {
    std::vector<Rat> h(max_order + 1);
    for (unsigned r = 1; r <= max_order; ++r) h[r] = harmonic(n, r);
    return h;
}

double harmonic_float(unsigned long n, unsigned r) {
    double s = 0.0;
    for (unsigned long i = n; i-- > 1;) s += std::pow(static_cast<double>(i), -static_cast<double>(r));
    return s;
}

std::vector<std::string> harmonic_variable_names(unsigned max_order) {
    std::vector<std::string> names{"n"};
    for (unsigned j = 1; j <= max_order; ++j) names.push_back("Hn[" + std::to_string(j) + "]");
    return names;
}

HarmonicExpr::HarmonicExpr(unsigned max_order, MultiPoly numerator, unsigned denom_pow)
    : order_(max_order), num_(std::move(numerator)), denom_pow_(denom_pow) {
    if (num_.nvars() != order_ + 1) throw DomainError("HarmonicExpr: numerator must have R + 1 variables");
    canonicalize();
}

void HarmonicExpr::canonicalize() {
    if (num_.is_zero()) {
        denom_pow_ = 0;
        return;
    }
    while (denom_pow_ > 0) {
        const bool divisible = std::all_of(num_.terms().begin(), num_.terms().end(),
                                           [](const auto& t) { return t.first[0] > 0; });
        if (!divisible) break;
        MultiPoly reduced(num_.nvars());
        for (const auto& [e, c] : num_.terms()) {
            Exponents f = e;
            --f[0];
            reduced.add_term(f, c);
        }
        num_ = std::move(reduced);
        --denom_pow_;
    }
}

namespace {

constexpr unsigned kParseMaxOrder = 64;

std::optional<std::size_t> resolve_harmonic(std::string_view tok) {
    if (tok == "n") return 0;
    if (tok.size() > 4 && tok.substr(0, 3) == "Hn[" && tok.back() == ']') {
        unsigned j = 0;
        const auto digits = tok.substr(3, tok.size() - 4);
        auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), j);
        if (ec == std::errc() && p == digits.data() + digits.size() && j >= 1 && j <= kParseMaxOrder) return j;
    }
    return std::nullopt;
}

MultiPoly reindex(const MultiPoly& p, std::size_t nvars) {
    MultiPoly out(nvars);
    for (const auto& [e, c] : p.terms()) {
        Exponents f(nvars, 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (i >= nvars) throw DomainError("HarmonicExpr: cannot narrow an expression that uses Hn[" + std::to_string(i) + "]");
            f[i] = e[i];
        }
        out.add_term(f, c);
    }
    return out;
}

}  // namespace

HarmonicExpr HarmonicExpr::parse(std::string_view text) {
    auto parsed = parse_rational_expression(text, kParseMaxOrder + 1, resolve_harmonic);
    const auto& den = parsed.den;
    if (den.terms().size() != 1) throw DomainError("HarmonicExpr: denominator must be a monomial c*n^e");
    const auto& [de, dc] = *den.terms().begin();
    for (std::size_t i = 1; i < de.size(); ++i)
        if (de[i] != 0) throw DomainError("HarmonicExpr: denominator may only involve n");
    unsigned order = 0;
    for (std::size_t j = 1; j <= kParseMaxOrder; ++j)
        if (parsed.num.degree_in(j) > 0) order = static_cast<unsigned>(j);
    auto num = reindex(parsed.num * (Rat(1) / dc), order + 1);
    return HarmonicExpr(order, std::move(num), de[0]);
}

HarmonicExpr HarmonicExpr::widened(unsigned max_order) const {
    if (max_order < order_) throw DomainError("HarmonicExpr: widened() cannot drop indeterminates");
    return HarmonicExpr(max_order, reindex(num_, max_order + 1), denom_pow_);
}

Rat HarmonicExpr::evaluate(unsigned n) const { return evaluate(n, harmonic_row(n, order_)); }

Rat HarmonicExpr::evaluate(unsigned n, std::span<const Rat> h) const {
    if (n == 0 && denom_pow_ > 0) throw DomainError("HarmonicExpr: division by n = 0");
    if (h.size() < order_ + 1) throw DomainError("HarmonicExpr: missing harmonic values");
    std::vector<Rat> point(order_ + 1);
    point[0] = Rat(static_cast<long>(n));
    for (unsigned j = 1; j <= order_; ++j) point[j] = h[j];
    return num_.evaluate(point) / Rat(static_cast<long>(n)).pow(static_cast<int>(denom_pow_));
}

double HarmonicExpr::evaluate_float(double n, std::span<const double> h) const {
    if (h.size() < order_ + 1) throw DomainError("HarmonicExpr: missing harmonic values");
    std::vector<double> point(order_ + 1);
    point[0] = n;
    for (unsigned j = 1; j <= order_; ++j) point[j] = h[j];
    return num_.evaluate_float(point) / std::pow(n, static_cast<double>(denom_pow_));
}

std::string HarmonicExpr::to_string() const {
    const auto names = harmonic_variable_names(order_);
    const auto body = num_.to_string(names);
    if (denom_pow_ == 0) return body;
    std::string den = denom_pow_ == 1 ? "n" : "n^" + std::to_string(denom_pow_);
    return "(" + body + ")/" + den;
}

bool operator==(const HarmonicExpr& a, const HarmonicExpr& b) {
    const unsigned order = std::max(a.order_, b.order_);
    const auto wa = a.widened(order);
    const auto wb = b.widened(order);
    return wa.denom_pow_ == wb.denom_pow_ && wa.num_ == wb.num_;
}

}  // namespace amp
