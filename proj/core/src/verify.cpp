#include "amp/verify.hpp"

#include <algorithm>

#include "amp/boarding.hpp"
#include "amp/enumerators.hpp"
#include "amp/moments.hpp"
#include "amp/recurrence.hpp"

namespace amp {

std::optional<Suite> parse_suite(std::string_view name) {
    if (name == "theorems") return Suite::Theorems;
    if (name == "recurrences") return Suite::Recurrences;
    if (name == "moments") return Suite::Moments;
    if (name == "all") return Suite::All;
    return std::nullopt;
}

std::optional<Fault> parse_fault(std::string_view name) {
    if (name == "none") return Fault::None;
    if (name == "variance") return Fault::VarianceFixture;
    if (name == "recurrence-k1") return Fault::RecurrenceK1;
    if (name == "closed-form") return Fault::ClosedFormFk;
    return std::nullopt;
}

namespace {

constexpr unsigned kOracleCap = 8;
constexpr unsigned kChainCap = 20;

std::string nk(unsigned n, unsigned k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

MultilinearPoly closed_form_with_fault(unsigned n, unsigned k, Fault fault) {
    auto f = closed_form_Fk(n, k);
    if (fault == Fault::ClosedFormFk) f.add_term(0, Rat(BigInt(1), factorial(n)));
    return f;
}

void theorems(const SuiteOptions& opt, std::vector<Check>& out) {
    const unsigned oracle_max = std::min(opt.nmax, kOracleCap);

    Check eq{"oracle-vs-closed-form", true, ""};
    Check marg{"marginal-correct-probability", true, ""};
    Check indep{"independence", true, ""};
    for (unsigned n = 2; n <= oracle_max && eq.pass; ++n) {
        for (unsigned k = 1; k <= std::min(n, 4U); ++k) {
            const auto cfg = ProcessConfig::make(n, k);
            const auto oracle = oracle_weight_enumerator(cfg);
            const auto closed = closed_form_with_fault(n, k, opt.fault);
            if (!(oracle == closed)) {
                eq.pass = false;
                eq.witness = nk(n, k) + ": oracle " + oracle.to_string() + " vs closed form " + closed.to_string();
                break;
            }
            if (k > 3) continue;
            const auto dist = enumerate_process(cfg);
            for (unsigned i = k + 1; i <= n && marg.pass; ++i) {
                const Rat p = oracle_correct_probability(dist, singleton(i));
                if (p != marginal_correct_prob(n, k, i)) {
                    marg.pass = false;
                    marg.witness = nk(n, k) + " i=" + std::to_string(i) + ": oracle " + p.pretty();
                }
                for (unsigned j = i + 1; j <= n && indep.pass; ++j) {
                    const Rat joint = oracle_correct_probability(dist, singleton(i) | singleton(j));
                    const Rat prod = marginal_correct_prob(n, k, i) * marginal_correct_prob(n, k, j);
                    if (joint != prod) {
                        indep.pass = false;
                        indep.witness = nk(n, k) + " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                        ": joint " + joint.pretty() + " vs product " + prod.pretty();
                    }
                }
            }
        }
    }
    out.push_back(eq);
    out.push_back(marg);
    out.push_back(indep);

    Check chain{"chain-vs-closed-form", true, ""};
    for (unsigned n = 2; n <= std::min(opt.nmax, kChainCap); ++n) {
        if (!(chain_enumerator_k1(n) == closed_form_F1(n))) {
            chain.pass = false;
            chain.witness = "n=" + std::to_string(n);
            break;
        }
    }
    out.push_back(chain);

    Check pg{"pgf-identities", true, ""};
    for (unsigned n = 1; n <= opt.nmax && pg.pass; ++n) {
        if (pgf(n, 1) != pgf_k1_explicit(n)) {
            pg.pass = false;
            pg.witness = "pgf(n,1) vs single-passenger form at n=" + std::to_string(n);
        }
        for (unsigned k = 1; k <= std::min(n, 4U) && pg.pass; ++k) {
            const auto f = pgf(n, k);
            const Rat at0 = Rat(factorial(n - k), factorial(n));
            if (f.evaluate(Rat(1)) != Rat(1) || f.evaluate(Rat(0)) != at0) {
                pg.pass = false;
                pg.witness = nk(n, k) + ": f(1) = " + f.evaluate(Rat(1)).pretty() + ", f(0) = " + f.evaluate(Rat(0)).pretty();
            } else if (n <= 12 && f != closed_form_with_fault(n, k, opt.fault).diagonal()) {
                pg.pass = false;
                pg.witness = nk(n, k) + ": pgf differs from the diagonal of the enumerator";
            }
        }
    }
    out.push_back(pg);
}

RecurrenceSpec faulted_recurrence(unsigned k, Fault fault) {
    auto spec = builtin_recurrence(k);
    if (k == 1 && fault == Fault::RecurrenceK1) spec.coeffs[1] = spec.coeffs[1] + BivarRatFun::parse("1/(n+2)");
    return spec;
}

void recurrences(const SuiteOptions& opt, std::vector<Check>& out) {
    for (unsigned k = 1; k <= 3; ++k) {
        Check c{"recurrence-k" + std::to_string(k), true, ""};
        if (opt.nmax >= k) {
            const auto rep = verify_recurrence(faulted_recurrence(k, opt.fault), k, opt.nmax);
            c.pass = rep.ok;
            if (!rep.ok) c.witness = rep.message;
        }
        out.push_back(c);
    }
}

void moments(const SuiteOptions& opt, std::vector<Check>& out) {
    Check t5{"harmonic-moment-closed-forms", true, ""};
    for (unsigned n = 2; n <= opt.nmax && t5.pass; ++n) {
        const auto mv = moments_from_pgf(pgf(n, 1), 6);
        for (unsigned r = 1; r <= 6; ++r) {
            Rat closed = moment_closed_form(n, r);
            if (r == 2 && opt.fault == Fault::VarianceFixture) closed += Rat(1, static_cast<long>(n));
            const Rat exact = r == 1 ? mv.mean : mv.m(r);
            if (closed != exact) {
                t5.pass = false;
                t5.witness = "n=" + std::to_string(n) + " r=" + std::to_string(r) + ": closed form " + closed.pretty() +
                             " vs pgf " + exact.pretty();
                break;
            }
        }
    }
    out.push_back(t5);

    Check ex{"expectation-formula", true, ""};
    for (unsigned n = 2; n <= opt.nmax && ex.pass; ++n) {
        for (unsigned k = 1; k < n; ++k) {
            const Rat direct = pgf(n, k).derivative().evaluate(Rat(1));
            if (expectation_k(n, k) != direct) {
                ex.pass = false;
                ex.witness = nk(n, k) + ": formula " + expectation_k(n, k).pretty() + " vs f'(1) " + direct.pretty();
                break;
            }
        }
    }
    out.push_back(ex);
}

}  // namespace

std::vector<Check> run_suite(Suite suite, const SuiteOptions& options) {
    std::vector<Check> out;
    if (suite == Suite::Theorems || suite == Suite::All) theorems(options, out);
    if (suite == Suite::Recurrences || suite == Suite::All) recurrences(options, out);
    if (suite == Suite::Moments || suite == Suite::All) moments(options, out);
    return out;
}

}  // namespace amp
