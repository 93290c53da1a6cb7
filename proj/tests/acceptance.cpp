// Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion.
//   amp_acceptance            run all
//   amp_acceptance N [M ...]  run only the listed criteria

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "amp/ansatz.hpp"
#include "amp/boarding.hpp"
#include "amp/enumerators.hpp"
#include "amp/harmonic.hpp"
#include "amp/moments.hpp"
#include "amp/recurrence.hpp"

using namespace amp;

namespace {

struct Outcome {
    bool pass = true;
    std::string witness;

    void fail(const std::string& why) {
        if (pass) witness = why;
        pass = false;
    }
};

struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
};

std::string num(double x, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

Outcome oracle_equivalence() {
    Outcome o;
    for (unsigned n = 2; n <= 8; ++n)
        for (unsigned k = 1; k <= std::min(n, 4u); ++k)
            if (!(oracle_weight_enumerator(ProcessConfig::make(n, k)) == closed_form_Fk(n, k)))
                o.fail("n = " + std::to_string(n) + ", k = " + std::to_string(k));
    return o;
}

Outcome chain_vs_closed_form() {
    Outcome o;
    for (unsigned n = 2; n <= 20; ++n)
        if (!(chain_enumerator_k1(n) == closed_form_F1(n))) o.fail("n = " + std::to_string(n));
    return o;
}

Outcome last_passenger() {
    Outcome o;
    for (unsigned n = 2; n <= 50; ++n)
        if (marginal_correct_prob(n, 1, n) != Rat(1, 2)) o.fail("last passenger, n = " + std::to_string(n));
    for (unsigned n = 2; n <= 8; ++n)
        for (unsigned k = 1; k <= std::min(n - 1, 3u); ++k) {
            const auto dist = enumerate_process(ProcessConfig::make(n, k));
            for (unsigned i = k + 1; i <= n; ++i) {
                const Rat formula(static_cast<long>(n - i + 1), static_cast<long>(n - i + k + 1));
                if (marginal_correct_prob(n, k, i) != formula ||
                    oracle_correct_probability(dist, singleton(i)) != formula)
                    o.fail("n = " + std::to_string(n) + ", k = " + std::to_string(k) + ", i = " + std::to_string(i));
            }
        }
    return o;
}

Outcome pgf_consistency() {
    Outcome o;
    for (unsigned n = 1; n <= 50; ++n)
        if (!(pgf(n, 1) == pgf_k1_explicit(n))) o.fail("pgf vs k = 1 formula at n = " + std::to_string(n));
    for (unsigned n = 1; n <= 12; ++n)
        for (unsigned k = 1; k <= std::min(n, 4u); ++k)
            if (!(pgf(n, k) == closed_form_Fk(n, k).diagonal()))
                o.fail("diagonal at n = " + std::to_string(n) + ", k = " + std::to_string(k));
    for (unsigned n = 1; n <= 50; ++n)
        for (unsigned k = 1; k <= std::min(n, 4u); ++k) {
            const auto f = pgf(n, k);
            if (f.evaluate(Rat(1)) != Rat(1)) o.fail("f(1) != 1 at n = " + std::to_string(n));
            if (f.evaluate(Rat(0)) != Rat(factorial(n - k), factorial(n)))
                o.fail("f(0) at n = " + std::to_string(n) + ", k = " + std::to_string(k));
        }
    return o;
}

Outcome moments() {
    Outcome o;
    for (unsigned n = 2; n <= 100; ++n) {
        const auto mv = moments_from_pgf(pgf(n, 1), 6);
        if (moment_closed_form(n, 1) != mv.mean) o.fail("mean at n = " + std::to_string(n));
        for (unsigned r = 2; r <= 6; ++r)
            if (moment_closed_form(n, r) != mv.m(r)) o.fail("m" + std::to_string(r) + " at n = " + std::to_string(n));
    }
    for (unsigned n = 2; n <= 40; ++n)
        for (unsigned k = 1; k < n; ++k)
            if (expectation_k(n, k) != pgf(n, k).derivative().evaluate(Rat(1)))
                o.fail("expectation at n = " + std::to_string(n) + ", k = " + std::to_string(k));
    return o;
}

Outcome recurrences() {
    Outcome o;
    for (unsigned k = 1; k <= 3; ++k) {
        const auto rep = verify_recurrence(builtin_recurrence(k), k, 50);
        if (!rep.ok) o.fail("k = " + std::to_string(k) + ": " + rep.message);
    }
    return o;
}

Outcome rediscovery() {
    Outcome o;
    for (unsigned r = 2; r <= 3; ++r) {
        const auto res = fit_harmonic_ansatz(moment_data(r, 2, 40), default_moment_ansatz(r));
        const auto* fit = std::get_if<AnsatzFit>(&res);
        if (!fit) {
            o.fail("m" + std::to_string(r) + ": " + std::get<NoFit>(res).reason);
            continue;
        }
        for (unsigned n = 2; n <= 200; ++n)
            if (fit->expr.evaluate(n) != moment_closed_form(n, r)) {
                o.fail("m" + std::to_string(r) + " differs at n = " + std::to_string(n));
                break;
            }
    }
    const auto k1 = guess_recurrence(1, 2, 2, 1);
    if (const auto* fit = std::get_if<RecurrenceFit>(&k1)) {
        if (!equivalent(fit->spec, builtin_recurrence(1))) o.fail("k = 1 guess not canonical-equal to builtin");
    } else {
        o.fail("k = 1: " + std::get<NoFit>(k1).reason);
    }
    const auto k4 = guess_recurrence(4, 5, 5, 4);
    if (const auto* fit = std::get_if<RecurrenceFit>(&k4)) {
        const auto rep = verify_recurrence(fit->spec, 4, 60);
        if (!rep.ok) o.fail("k = 4: " + rep.message);
    } else {
        o.fail("k = 4: " + std::get<NoFit>(k4).reason);
    }
    return o;
}

Outcome independence() {
    Outcome o;
    for (unsigned n = 2; n <= 8; ++n)
        for (unsigned k = 1; k <= std::min(n, 3u); ++k) {
            const auto dist = enumerate_process(ProcessConfig::make(n, k));
            for (unsigned i = k + 1; i <= n; ++i)
                for (unsigned j = i + 1; j <= n; ++j) {
                    const Rat joint = oracle_correct_probability(dist, singleton(i) | singleton(j));
                    const Rat product = oracle_correct_probability(dist, singleton(i)) *
                                        oracle_correct_probability(dist, singleton(j));
                    if (joint != product)
                        o.fail("n = " + std::to_string(n) + ", k = " + std::to_string(k) + ", i = " +
                               std::to_string(i) + ", j = " + std::to_string(j));
                }
        }
    return o;
}

Outcome asymptotic_normality() {
    Outcome o;
    std::vector<double> skew, kurt;
    std::string values;
    for (unsigned long n = 100; n <= 1000000; n *= 10) {
        const auto s = standardized_moments_float(n, 4);
        skew.push_back(s[0]);
        kurt.push_back(s[1]);
        values += " n=" + std::to_string(n) + ": m3=" + num(s[0]) + " m4/m2^2=" + num(s[1]) + ";";
    }
    std::vector<std::string> problems;
    if (std::abs(skew.back()) > 0.25) problems.push_back("|m3| at n=10^6 is " + num(std::abs(skew.back())) + " > 0.25");
    if (std::abs(kurt.back() - 3) > 0.5) problems.push_back("m4/m2^2 at n=10^6 is off by more than 0.5");
    for (std::size_t i = 1; i < skew.size(); ++i)
        if (std::abs(skew[i]) > std::abs(skew[i - 1])) {
            problems.push_back("m3 not monotone toward 0");
            break;
        }
    for (std::size_t i = 1; i < kurt.size(); ++i)
        if (std::abs(kurt[i] - 3) > std::abs(kurt[i - 1] - 3)) {
            problems.push_back("m4/m2^2 not monotone toward 3");
            break;
        }
    if (!problems.empty()) {
        std::string why;
        for (const auto& p : problems) why += (why.empty() ? "" : "; ") + p;
        o.fail(why + " |" + values);
    } else {
        o.witness = values;
    }
    return o;
}

Outcome monte_carlo() {
    Outcome o;
    const auto cfg = ProcessConfig::make(3, 1);
    const std::uint64_t trials = 100000, seed = 20240611;
    const auto freq = empirical_pgf(cfg, trials, seed);
    const double expected[] = {1.0 / 3, 0.0, 0.5, 1.0 / 6};
    for (unsigned l = 0; l <= 3; ++l)
        if (std::abs(freq[l] - expected[l]) > 0.01)
            o.fail("P(" + std::to_string(l) + " wrong) = " + num(freq[l]) + ", expected " + num(expected[l]));
    if (simulate_wrong_counts(cfg, trials, seed, 1) != simulate_wrong_counts(cfg, trials, seed, 4))
        o.fail("counts depend on the thread count");
    if (empirical_pgf(cfg, trials, seed) != freq) o.fail("repeat run differs");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, "oracle equivalence of the k-passenger enumerator", 60, oracle_equivalence},
        {2, "chain enumerator equals the k = 1 closed form", 5, chain_vs_closed_form},
        {3, "last-passenger answer and marginals", 0, last_passenger},
        {4, "pgf consistency", 0, pgf_consistency},
        {5, "harmonic moment closed forms and expectation", 60, moments},
        {6, "built-in recurrences", 30, recurrences},
        {7, "rediscovery of moments and recurrences", 0, rediscovery},
        {8, "independence of correct-seat events", 0, independence},
        {9, "asymptotic normality of standardized moments", 0, asymptotic_normality},
        {10, "Monte Carlo pgf at n = 3", 0, monte_carlo},
    };
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& c : criteria) {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_s > 0 && secs > c.budget_s) o.fail("took " + num(secs, 2) + " s, budget " + num(c.budget_s, 0) + " s");
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << num(secs, 2)
                  << " s)";
        if (!o.witness.empty()) std::cout << (o.pass ? " --" : " -- ") << o.witness;
        std::cout << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
