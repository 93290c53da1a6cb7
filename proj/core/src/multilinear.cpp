#include "amp/multilinear.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace amp {

Subset make_subset(std::initializer_list<unsigned> elems) {
    Subset s = 0;
    for (unsigned e : elems) {
        if (e == 0 || e > kMaxMultilinearVars) throw DomainError("subset element out of range");
        s |= singleton(e);
    }
    return s;
}

std::vector<unsigned> elements(Subset s) {
    std::vector<unsigned> out;
    while (s) {
        out.push_back(static_cast<unsigned>(std::countr_zero(s)) + 1);
        s &= s - 1;
    }
    return out;
}

std::string subset_to_string(Subset s) {
    std::string out = "{";
    bool first = true;
    for (unsigned e : elements(s)) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

MultilinearPoly::MultilinearPoly(unsigned n) : n_(n) {
    if (n > kMaxMultilinearVars)
        throw DomainError("MultilinearPoly: n = " + std::to_string(n) + " exceeds the bit-set cap of 62");
}

MultilinearPoly MultilinearPoly::constant(unsigned n, const Rat& c) {
    MultilinearPoly p(n);
    p.add_term(0, c);
    return p;
}

MultilinearPoly MultilinearPoly::variable(unsigned n, unsigned i) {
    MultilinearPoly p(n);
    p.check_index(i);
    p.add_term(singleton(i), Rat(1));
    return p;
}

void MultilinearPoly::check_index(unsigned j) const {
    if (j == 0 || j > n_)
        throw DomainError("MultilinearPoly: variable w" + std::to_string(j) + " outside w1..w" + std::to_string(n_));
}

namespace {

bool key_less(const std::pair<Subset, Rat>& a, const std::pair<Subset, Rat>& b) { return a.first < b.first; }

}  // namespace

void MultilinearPoly::normalize(Terms& t) {
    std::stable_sort(t.begin(), t.end(), key_less);
    std::size_t out = 0;
    for (std::size_t i = 0; i < t.size();) {
        Subset s = t[i].first;
        Rat c = std::move(t[i].second);
        for (++i; i < t.size() && t[i].first == s; ++i) c += t[i].second;
        if (!c.is_zero()) t[out++] = {s, std::move(c)};
    }
    t.resize(out);
}

Rat MultilinearPoly::coeff(Subset s) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair<Subset, Rat>{s, Rat()}, key_less);
    return it != terms_.end() && it->first == s ? it->second : Rat();
}

Subset MultilinearPoly::support() const {
    Subset s = 0;
    for (const auto& [k, _] : terms_) s |= k;
    return s;
}

void MultilinearPoly::add_term(Subset s, const Rat& c) {
    if (c.is_zero()) return;
    if (n_ < 64 && (s & ~full_subset(n_)) != 0)
        throw DomainError("MultilinearPoly: monomial " + subset_to_string(s) + " not within w1..w" + std::to_string(n_));
    auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair<Subset, Rat>{s, Rat()}, key_less);
    if (it != terms_.end() && it->first == s) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {s, c});
    }
}

MultilinearPoly MultilinearPoly::operator-() const {
    MultilinearPoly r = *this;
    for (auto& [_, c] : r.terms_) c = -c;
    return r;
}

MultilinearPoly& MultilinearPoly::operator+=(const MultilinearPoly& o) {
    if (o.n_ != n_) throw DomainError("MultilinearPoly: mismatched variable counts");
    Terms merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            a->second += b->second;
            if (!a->second.is_zero()) merged.push_back(std::move(*a));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

MultilinearPoly& MultilinearPoly::operator-=(const MultilinearPoly& o) { return *this += -o; }

MultilinearPoly& MultilinearPoly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [_, v] : terms_) v *= c;
    return *this;
}

MultilinearPoly operator*(const MultilinearPoly& a, const MultilinearPoly& b) {
    if (a.n_ != b.n_) throw DomainError("MultilinearPoly: mismatched variable counts");
    MultilinearPoly out(a.n_);
    out.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [sa, ca] : a.terms_) {
        for (const auto& [sb, cb] : b.terms_) {
            if (sa & sb)
                throw DomainError("MultilinearPoly: product squares variables " + subset_to_string(sa & sb));
            out.terms_.emplace_back(sa | sb, ca * cb);
        }
    }
    MultilinearPoly::normalize(out.terms_);
    return out;
}

MultilinearPoly MultilinearPoly::times_affine(unsigned j, const Rat& slope, const Rat& offset) const {
    check_index(j);
    const Subset bit = singleton(j);
    for (const auto& [s, c] : terms_)
        if (s & bit) throw DomainError("MultilinearPoly: factor in w" + std::to_string(j) + " would break multilinearity");
    // s -> s | bit preserves order, so the offset and slope parts are two sorted runs to merge.
    MultilinearPoly out(n_);
    out.terms_.reserve(2 * terms_.size());
    auto lo = terms_.begin(), hi = terms_.begin();
    while (lo != terms_.end() || hi != terms_.end()) {
        if (hi == terms_.end() || (lo != terms_.end() && lo->first < (hi->first | bit))) {
            if (!offset.is_zero()) out.terms_.emplace_back(lo->first, lo->second * offset);
            ++lo;
        } else {
            if (!slope.is_zero()) out.terms_.emplace_back(hi->first | bit, hi->second * slope);
            ++hi;
        }
    }
    return out;
}

MultilinearPoly MultilinearPoly::divide_by_variable(unsigned j) const {
    check_index(j);
    const Subset bit = singleton(j);
    MultilinearPoly out(n_);
    out.terms_.reserve(terms_.size());
    for (const auto& [s, c] : terms_) {
        if (!(s & bit))
            throw DomainError("MultilinearPoly: term " + subset_to_string(s) + " is not divisible by w" + std::to_string(j));
        out.terms_.emplace_back(s & ~bit, c);
    }
    return out;
}

Rat MultilinearPoly::evaluate(std::span<const Rat> point) const {
    if (point.size() != n_) throw DomainError("MultilinearPoly: evaluation point has wrong dimension");
    Rat acc;
    for (const auto& [s, c] : terms_) {
        Rat t = c;
        for (unsigned e : elements(s)) t *= point[e - 1];
        acc += t;
    }
    return acc;
}

MultilinearPoly MultilinearPoly::substitute(unsigned j, const Rat& value) const {
    check_index(j);
    const Subset bit = singleton(j);
    MultilinearPoly out(n_);
    out.terms_.reserve(terms_.size());
    for (const auto& [s, c] : terms_) {
        if (s & bit) out.terms_.emplace_back(s & ~bit, c * value);
        else out.terms_.emplace_back(s, c);
    }
    normalize(out.terms_);
    return out;
}

MultilinearPoly MultilinearPoly::specialize_to_one_outside(Subset keep) const {
    MultilinearPoly out(n_);
    out.terms_.reserve(terms_.size());
    for (const auto& [s, c] : terms_) out.terms_.emplace_back(s & keep, c);
    normalize(out.terms_);
    return out;
}

UniPoly MultilinearPoly::diagonal() const {
    std::vector<Rat> coeffs(n_ + 1);
    for (const auto& [s, c] : terms_) coeffs[static_cast<std::size_t>(std::popcount(s))] += c;
    return UniPoly(std::move(coeffs));
}

std::string MultilinearPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        const Rat mag = c.abs();
        const bool bare = s != 0 && mag == Rat(1);
        if (!bare) os << mag.pretty();
        bool need_star = !bare;
        for (unsigned e : elements(s)) {
            if (need_star) os << "*";
            os << "w" << e;
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace amp
