#include "amp/recurrence.hpp"

#include <array>
#include <sstream>

#include "amp/enumerators.hpp"
#include "amp/linsolve.hpp"

namespace amp {

RecurrenceSpec RecurrenceSpec::monic(unsigned k, std::vector<BivarRatFun> coeffs) {
    if (coeffs.size() < 2) throw DomainError("RecurrenceSpec: need at least two coefficients");
    const BivarRatFun lead = coeffs.back();
    if (lead.is_zero()) throw DomainError("RecurrenceSpec: leading coefficient is zero");
    for (auto& c : coeffs) c = c / lead;
    if (coeffs.front().is_zero()) throw DomainError("RecurrenceSpec: c_0 vanishes, order is overstated");
    return RecurrenceSpec{k, static_cast<unsigned>(coeffs.size() - 1), std::move(coeffs)};
}

std::string RecurrenceSpec::to_string() const {
    std::ostringstream os;
    os << "k = " << k << ", order " << order << "\n";
    for (std::size_t j = 0; j < coeffs.size(); ++j) os << "  c_" << j << " = " << coeffs[j].to_string() << "\n";
    return os.str();
}

bool equivalent(const RecurrenceSpec& a, const RecurrenceSpec& b) {
    if (a.k != b.k || a.order != b.order || a.coeffs.size() != b.coeffs.size()) return false;
    for (std::size_t j = 0; j < a.coeffs.size(); ++j)
        if (!(a.coeffs[j] == b.coeffs[j])) return false;
    return true;
}

namespace {

// Coefficients of f_n, f_{n+1}, ... as transcribed, lowest shift first. The
// k = 2 and k = 3 texts index the sequence so that their f_n is
// pgf(n + k - 1, k); builtin_recurrence() moves them onto pgf(n, k).
const std::array<std::vector<const char*>, 3> kRecurrenceText{{
    {"n*(n+w)/((2+n)*(1+n))", "-(2*n+w+1)/(2+n)", "1"},
    {"-n*(n+2*w)*(n+w)/((n+4)*(n+3)*(2+n))", "(3*n^2+6*n*w+2*w^2+3*n+3*w+1)/((n+4)*(n+3))",
     "-3*(n+w+1)/(n+4)", "1"},
    {"n*(n+2*w)*(n+3*w)*(n+w)/((n+5)*(n+4)*(n+3)*(n+6))",
     "-(3*w+1+2*n)*(2*n^2+6*n*w+2*w^2+2*n+3*w+1)/((n+5)*(n+4)*(n+6))",
     "(6*n^2+18*n*w+11*w^2+12*n+18*w+7)/((n+6)*(n+5))", "-2*(2*n+3*w+3)/(n+6)", "1"},
}};

}  // namespace

RecurrenceSpec builtin_recurrence(unsigned k) {
    if (k < 1 || k > 3)
        throw DomainError("builtin_recurrence: built-in recurrences exist for k = 1, 2, 3 (got k = " +
                          std::to_string(k) + "); use guess_recurrence");
    const Rat reindex(-static_cast<long>(k - 1));
    std::vector<BivarRatFun> coeffs;
    for (const char* text : kRecurrenceText[k - 1]) coeffs.push_back(BivarRatFun::parse(text).shift_n(reindex));
    return RecurrenceSpec::monic(k, std::move(coeffs));
}

RecurrenceSpec unshifted_recurrence(unsigned k) {
    if (k < 1 || k > 3) throw DomainError("unshifted_recurrence: k must be 1, 2 or 3");
    std::vector<BivarRatFun> coeffs;
    for (const char* text : kRecurrenceText[k - 1]) coeffs.push_back(BivarRatFun::parse(text));
    return RecurrenceSpec::monic(k, std::move(coeffs));
}

const UniPoly& PgfTable::at(unsigned n) {
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, pgf(n, k_)).first;
    return it->second;
}

RecurrenceReport verify_recurrence(const RecurrenceSpec& spec, unsigned n_from, unsigned n_to) {
    PgfTable table(spec.k);
    return verify_recurrence(spec, n_from, n_to, table);
}

RecurrenceReport verify_recurrence(const RecurrenceSpec& spec, unsigned n_from, unsigned n_to, PgfTable& table) {
    if (table.k() != spec.k) throw DomainError("verify_recurrence: pgf table built for a different k");
    if (n_from < spec.k) throw DomainError("verify_recurrence: n range must start at n >= k");
    if (spec.coeffs.size() != spec.order + 1) throw DomainError("verify_recurrence: malformed recurrence");
    RecurrenceReport rep;
    rep.n_from = n_from;
    rep.n_to = n_to;
    for (unsigned n = n_from; n <= n_to; ++n) {
        const Rat nr(static_cast<long>(n));
        std::vector<std::pair<UniPoly, UniPoly>> parts;
        for (const auto& c : spec.coeffs) {
            parts.push_back(c.at_n(nr));
            if (parts.back().second.is_zero()) {
                rep.ok = false;
                rep.failing_n = n;
                rep.message = "denominator vanishes at n = " + std::to_string(n);
                return rep;
            }
        }
        UniPoly residual;
        for (std::size_t j = 0; j < parts.size(); ++j) {
            UniPoly term = parts[j].first * table.at(n + static_cast<unsigned>(j));
            for (std::size_t i = 0; i < parts.size(); ++i)
                if (i != j) term = term * parts[i].second;
            residual += term;
        }
        ++rep.checked;
        if (!residual.is_zero()) {
            rep.ok = false;
            rep.failing_n = n;
            for (std::size_t p = 0; p < residual.coeffs().size(); ++p) {
                if (!residual.coeffs()[p].is_zero()) {
                    rep.failing_power = static_cast<unsigned>(p);
                    rep.residual = residual.coeffs()[p];
                    break;
                }
            }
            rep.message = "identity fails at n = " + std::to_string(n) + ", coefficient of w^" +
                          std::to_string(*rep.failing_power) + " is " + rep.residual.pretty();
            return rep;
        }
    }
    rep.message = "identity holds for n = " + std::to_string(n_from) + ".." + std::to_string(n_to);
    return rep;
}

namespace {

class RecurrenceGuesser {
public:
    RecurrenceGuesser(unsigned k, unsigned order, unsigned deg_n, unsigned deg_w)
        : k_(k), order_(order), deg_n_(deg_n), deg_w_(deg_w), table_(k) {}

    std::size_t unknowns() const { return order_ * block() + (deg_n_ + 1); }

    RecurrenceResult run() {
        unsigned train_to = k_;
        while (rows_.size() < unknowns() + 10 || train_to - k_ < deg_n_ + 2) add_equations(train_to++);
        // Training keeps growing while spurious kernel vectors survive validation.
        const unsigned give_up = train_to + 4 * (deg_n_ + 2) + 40;
        for (;;) {
            const auto kernel = kernel_basis(rows_);
            if (kernel.empty())
                return NoFit{"no recurrence of this shape fits n = " + std::to_string(k_) + ".." +
                                 std::to_string(train_to - 1),
                             unknowns(), rows_.size()};
            const std::vector<Rat>* pick = nullptr;
            for (const auto& v : kernel)
                if (!q_part_is_zero(v)) {
                    pick = &v;
                    break;
                }
            if (pick) {
                auto spec = to_spec(*pick);
                if (spec) {
                    const auto rep = verify_recurrence(*spec, train_to, train_to + kRecurrenceHoldout - 1, table_);
                    if (rep.ok) {
                        return RecurrenceFit{*spec,    unknowns(),
                                             rows_.size(), k_,
                                             train_to - 1, train_to,
                                             train_to + kRecurrenceHoldout - 1, kernel.size()};
                    }
                }
            }
            if (kernel.size() == 1 && pick)
                return NoFit{"candidate failed held-out validation", unknowns(), rows_.size()};
            if (train_to >= give_up)
                return NoFit{"kernel did not settle on a valid recurrence", unknowns(), rows_.size()};
            for (int extra = 0; extra < 5; ++extra) add_equations(train_to++);
        }
    }

private:
    std::size_t block() const { return (deg_n_ + 1) * (deg_w_ + 1); }
    std::size_t p_index(unsigned j, unsigned a, unsigned b) const { return j * block() + a * (deg_w_ + 1) + b; }
    std::size_t q_index(unsigned a) const { return order_ * block() + a; }

    bool q_part_is_zero(const std::vector<Rat>& v) const {
        for (unsigned a = 0; a <= deg_n_; ++a)
            if (!v[q_index(a)].is_zero()) return false;
        return true;
    }

    void add_equations(unsigned n) {
        std::vector<Rat> npow(deg_n_ + 1);
        npow[0] = Rat(1);
        for (unsigned a = 1; a <= deg_n_; ++a) npow[a] = npow[a - 1] * Rat(static_cast<long>(n));
        const unsigned top = n + order_ + deg_w_;
        for (unsigned t = 0; t <= top; ++t) {
            std::vector<Rat> row(unknowns());
            bool any = false;
            for (unsigned j = 0; j < order_; ++j) {
                const auto& f = table_.at(n + j);
                for (unsigned b = 0; b <= deg_w_ && b <= t; ++b) {
                    const Rat fc = f.coeff(t - b);
                    if (fc.is_zero()) continue;
                    for (unsigned a = 0; a <= deg_n_; ++a) row[p_index(j, a, b)] = npow[a] * fc;
                    any = true;
                }
            }
            const Rat fl = table_.at(n + order_).coeff(t);
            if (!fl.is_zero()) {
                for (unsigned a = 0; a <= deg_n_; ++a) row[q_index(a)] = npow[a] * fl;
                any = true;
            }
            if (any) rows_.push_back(std::move(row));
        }
    }

    std::optional<RecurrenceSpec> to_spec(const std::vector<Rat>& v) const {
        BivarPoly q(2);
        for (unsigned a = 0; a <= deg_n_; ++a) q.add_term({a, 0}, v[q_index(a)]);
        std::vector<BivarRatFun> coeffs;
        for (unsigned j = 0; j < order_; ++j) {
            BivarPoly p(2);
            for (unsigned a = 0; a <= deg_n_; ++a)
                for (unsigned b = 0; b <= deg_w_; ++b) p.add_term({a, b}, v[p_index(j, a, b)]);
            coeffs.emplace_back(std::move(p), q);
        }
        coeffs.emplace_back(bivar_constant(Rat(1)));
        if (coeffs.front().is_zero()) return std::nullopt;
        return RecurrenceSpec::monic(k_, std::move(coeffs));
    }

    unsigned k_, order_, deg_n_, deg_w_;
    PgfTable table_;
    RatMatrix rows_;
};

}  // namespace

RecurrenceResult guess_recurrence(unsigned k, unsigned order, unsigned deg_n, unsigned deg_w) {
    if (k < 1) throw DomainError("guess_recurrence: need k >= 1");
    if (order < 1) throw DomainError("guess_recurrence: order must be >= 1");
    return RecurrenceGuesser(k, order, deg_n, deg_w).run();
}

}  // namespace amp
