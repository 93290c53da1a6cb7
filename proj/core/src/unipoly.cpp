#include "amp/unipoly.hpp"

#include <sstream>

namespace amp {

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rat& c, std::size_t e) {
    std::vector<Rat> v(e + 1);
    v[e] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rat& UniPoly::leading() const {
    if (coeffs_.empty()) throw DomainError("UniPoly: zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rat UniPoly::evaluate(const Rat& w) const {
    Rat acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * w + *it;
    return acc;
}

double UniPoly::evaluate_float(double w) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * w + it->to_double();
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rat> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    return *this * (Rat(1) / leading());
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly& UniPoly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DomainError("UniPoly: division by the zero polynomial");
    UniPoly rem = a;
    std::vector<Rat> quot(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
    const Rat lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
        const Rat c = rem.leading() / lead;
        quot[shift] = c;
        rem -= monomial(c, shift) * b;
    }
    return {UniPoly(std::move(quot)), rem};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rat& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rat mag = c.abs();
        if (!first || c.sign() < 0) os << (c.sign() < 0 ? "-" : "+");
        first = false;
        const bool unit = mag == Rat(1);
        if (i == 0 || !unit) {
            os << mag.pretty();
            if (i > 0) os << "*";
        }
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

UniPoly rising_product(unsigned r, unsigned m) {
    UniPoly acc = UniPoly::constant(1);
    for (unsigned i = 1; i <= m; ++i)
        acc = acc * UniPoly({Rat(static_cast<long>(i)), Rat(static_cast<long>(r))});
    return acc;
}

}  // namespace amp
