#include "amp/multipoly.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace amp {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    const auto da = std::accumulate(a.begin(), a.end(), 0U);
    const auto db = std::accumulate(b.begin(), b.end(), 0U);
    if (da != db) return da < db;
    return a < b;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rat& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw DomainError("MultiPoly: variable index out of range");
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    p.add_term(e, Rat(1));
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

unsigned MultiPoly::total_degree() const {
    if (terms_.empty()) return 0;
    const auto& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0U);
}

unsigned MultiPoly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, _] : terms_) d = std::max(d, e[var]);
    return d;
}

Rat MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat() : it->second;
}

const MultiPoly::Terms::value_type& MultiPoly::leading_term() const {
    if (terms_.empty()) throw DomainError("MultiPoly: zero polynomial has no leading term");
    return *terms_.rbegin();
}

void MultiPoly::add_term(const Exponents& e, const Rat& c) {
    if (e.size() != nvars_) throw DomainError("MultiPoly: exponent vector has wrong length");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [_, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.nvars_ != nvars_) throw DomainError("MultiPoly: mismatched variable counts");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [_, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw DomainError("MultiPoly: mismatched variable counts");
    MultiPoly out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = constant(nvars_, Rat(1));
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

Rat MultiPoly::evaluate(std::span<const Rat> point) const {
    if (point.size() != nvars_) throw DomainError("MultiPoly: evaluation point has wrong dimension");
    Rat acc;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i]) t *= point[i].pow(static_cast<int>(e[i]));
        acc += t;
    }
    return acc;
}

double MultiPoly::evaluate_float(std::span<const double> point) const {
    if (point.size() != nvars_) throw DomainError("MultiPoly: evaluation point has wrong dimension");
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c.to_double();
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(std::size_t var, const Rat& value) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f[var] = 0;
        out.add_term(f, c * value.pow(static_cast<int>(e[var])));
    }
    return out;
}

MultiPoly MultiPoly::shift(std::size_t var, const Rat& delta) const {
    if (var >= nvars_) throw DomainError("MultiPoly: variable index out of range");
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        // (x + delta)^d = sum_i C(d, i) x^i delta^(d - i)
        const unsigned d = e[var];
        Exponents f = e;
        for (unsigned i = 0; i <= d; ++i) {
            f[var] = i;
            out.add_term(f, c * Rat(binomial(d, i)) * delta.pow(static_cast<int>(d - i)));
        }
    }
    return out;
}

Rat MultiPoly::content() const {
    if (terms_.empty()) return Rat(1);
    BigInt g = 0, l = 1;
    for (const auto& [_, c] : terms_) {
        g = gcd(g, c.num());
        l = lcm(l, c.den());
    }
    return Rat(abs(g), l);
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
    if (names.size() != nvars_) throw DomainError("MultiPoly: wrong number of variable names");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool unit_mono = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
        if (c.sign() < 0) os << "-";
        else if (!first) os << "+";
        first = false;
        const Rat mag = c.abs();
        bool need_star = false;
        if (unit_mono || mag != Rat(1)) {
            os << mag.pretty();
            need_star = true;
        }
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (need_star) os << "*";
            os << names[i];
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Expression reader

namespace {

class ExpressionReader {
public:
    ExpressionReader(std::string_view text, std::size_t nvars,
                     const std::function<std::optional<std::size_t>(std::string_view)>& resolve)
        : text_(text), nvars_(nvars), resolve_(resolve) {}

    ParsedRational run() {
        auto r = sum();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        if (r.den.is_zero()) fail("division by zero");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("expression reader: " + what + " at offset " + std::to_string(pos_) + " in '" +
                          std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ParsedRational one() const { return {MultiPoly::constant(nvars_, Rat(1)), MultiPoly::constant(nvars_, Rat(1))}; }

    static ParsedRational add(const ParsedRational& a, const ParsedRational& b, bool subtract) {
        if (a.den == b.den) return {subtract ? a.num - b.num : a.num + b.num, a.den};
        auto lhs = a.num * b.den;
        auto rhs = b.num * a.den;
        return {subtract ? lhs - rhs : lhs + rhs, a.den * b.den};
    }

    ParsedRational sum() {
        ParsedRational acc;
        if (accept('-')) {
            auto t = product();
            acc = {-t.num, t.den};
        } else {
            accept('+');
            acc = product();
        }
        for (;;) {
            if (accept('+')) acc = add(acc, product(), false);
            else if (accept('-')) acc = add(acc, product(), true);
            else return acc;
        }
    }

    ParsedRational product() {
        auto acc = power();
        for (;;) {
            if (accept('*')) {
                auto f = power();
                acc = {acc.num * f.num, acc.den * f.den};
            } else if (accept('/')) {
                auto f = power();
                if (f.num.is_zero()) fail("division by zero");
                acc = {acc.num * f.den, acc.den * f.num};
            } else {
                return acc;
            }
        }
    }

    ParsedRational power() {
        auto base = atom();
        if (accept('^')) {
            skip_space();
            const auto e = integer_literal();
            return {base.num.pow(static_cast<unsigned>(e.get_ui())), base.den.pow(static_cast<unsigned>(e.get_ui()))};
        }
        return base;
    }

    BigInt integer_literal() {
        skip_space();
        const auto start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
    }

    ParsedRational atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = sum();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-') {
            ++pos_;
            auto inner = power();
            return {-inner.num, inner.den};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto r = one();
            r.num = MultiPoly::constant(nvars_, Rat(integer_literal()));
            return r;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const auto start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '[') {
                while (pos_ < text_.size() && text_[pos_] != ']') ++pos_;
                if (pos_ == text_.size()) fail("unterminated '['");
                ++pos_;
            }
            const auto token = text_.substr(start, pos_ - start);
            const auto index = resolve_(token);
            if (!index) fail("unknown variable '" + std::string(token) + "'");
            auto r = one();
            r.num = MultiPoly::variable(nvars_, *index);
            return r;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t nvars_;
    const std::function<std::optional<std::size_t>(std::string_view)>& resolve_;
    std::size_t pos_ = 0;
};

}  // namespace

ParsedRational parse_rational_expression(std::string_view text, std::size_t nvars,
                                         const std::function<std::optional<std::size_t>(std::string_view)>& resolve) {
    return ExpressionReader(text, nvars, resolve).run();
}

}  // namespace amp
