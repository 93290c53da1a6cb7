#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "amp/boarding.hpp"
#include "amp/enumerators.hpp"

using namespace amp;

TEST_CASE("oracle distribution for two passengers") {
    const auto d = enumerate_process(ProcessConfig::make(2, 1));
    REQUIRE(d.entries.size() == 2);
    CHECK(d.entries.at(Seating{1, 2}) == Rat(1, 2));
    CHECK(d.entries.at(Seating{2, 1}) == Rat(1, 2));
    const auto f = oracle_weight_enumerator(ProcessConfig::make(2, 1));
    CHECK(f.coeff(0) == Rat(1, 2));
    CHECK(f.coeff(make_subset({1, 2})) == Rat(1, 2));
}

TEST_CASE("oracle distribution for three passengers, one absent-minded") {
    const auto d = enumerate_process(ProcessConfig::make(3, 1));
    CHECK(d.entries.size() == 4);
    CHECK(d.entries.at(Seating{1, 2, 3}) == Rat(1, 3));
    CHECK(d.entries.at(Seating{2, 1, 3}) == Rat(1, 6));
    CHECK(d.entries.at(Seating{2, 3, 1}) == Rat(1, 6));
    CHECK(d.entries.at(Seating{3, 2, 1}) == Rat(1, 3));
    CHECK(oracle_weight_enumerator(ProcessConfig::make(3, 1)).to_string() ==
          "1/3 + 1/6*w1*w2 + 1/3*w1*w3 + 1/6*w1*w2*w3");
    CHECK(oracle_weight_enumerator(ProcessConfig::make(3, 2)).to_string() ==
          "1/6 + 1/6*w1*w2 + 1/6*w1*w3 + 1/6*w2*w3 + 1/3*w1*w2*w3");
}

TEST_CASE("oracle probabilities sum to one and wrong-seat helpers agree") {
    for (unsigned n = 1; n <= 7; ++n)
        for (unsigned k = 1; k <= n; ++k) {
            const auto d = enumerate_process(ProcessConfig::make(n, k));
            Rat total;
            for (const auto& [s, p] : d.entries) {
                total += p;
                CHECK(wrong_seated_count(s) == elements(wrong_seated(s)).size());
            }
            CHECK(total == Rat(1));
        }
}

TEST_CASE("oracle guards and preconditions") {
    CHECK_THROWS_AS(enumerate_process(ProcessConfig{11, 1}), ResourceError);
    CHECK_THROWS_AS(oracle_weight_enumerator(ProcessConfig{11, 1}), ResourceError);
    CHECK_NOTHROW(oracle_weight_enumerator(ProcessConfig{11, 1}, 11));
    CHECK_THROWS_AS(ProcessConfig::make(2, 3), DomainError);
    CHECK_THROWS_AS(ProcessConfig::make(0, 0), DomainError);
}

TEST_CASE("correct-seat probabilities from the oracle") {
    const auto d = enumerate_process(ProcessConfig::make(5, 1));
    CHECK(oracle_correct_probability(d, make_subset({5})) == Rat(1, 2));
    CHECK(oracle_correct_probability(d, make_subset({3, 5})) == Rat(3, 4) * Rat(1, 2));
}

TEST_CASE("sampling is deterministic per seed") {
    const auto cfg = ProcessConfig::make(20, 3);
    CHECK(sample_boarding(cfg, 99) == sample_boarding(cfg, 99));
    CHECK(simulate_wrong_counts(cfg, 2000, 5, 1) == simulate_wrong_counts(cfg, 2000, 5, 3));
    CHECK(trial_seed(1, 0) != trial_seed(1, 1));
    auto s = sample_boarding(cfg, 4);
    std::sort(s.begin(), s.end());
    for (unsigned i = 0; i < 20; ++i) CHECK(s[i] == i + 1);
    CHECK_THROWS_AS(simulate_wrong_counts(cfg, 0, 1), DomainError);
}

TEST_CASE("Monte Carlo frequencies converge to the exact pgf within 4 sigma") {
    const unsigned trials = 40000;
    for (auto [n, k] : {std::pair{4u, 1u}, {6u, 2u}, {7u, 4u}}) {
        const auto exact = pgf(n, k);
        const auto freq = empirical_pgf(ProcessConfig::make(n, k), trials, 2024);
        for (unsigned l = 0; l <= n; ++l) {
            const double p = exact.coeff(l).to_double();
            const double sigma = std::sqrt(p * (1 - p) / trials);
            CHECK(std::abs(freq[l] - p) <= 4 * sigma + 1e-12);
        }
    }
}

TEST_CASE("thread count comes from AMP_THREADS") {
    setenv("AMP_THREADS", "3", 1);
    CHECK(default_thread_count() == 3);
    unsetenv("AMP_THREADS");
    CHECK(default_thread_count() >= 1);
}
