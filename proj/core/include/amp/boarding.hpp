#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "amp/multilinear.hpp"
#include "amp/rat.hpp"

namespace amp {

/// n passengers, of whom the first k board absent-mindedly.
struct ProcessConfig {
    unsigned n = 1;
    unsigned k = 1;

    /// Throws DomainError unless n >= 1 and 0 <= k <= n.
    static ProcessConfig make(unsigned n, unsigned k);
};

/// seating[i-1] is the seat (1-based) taken by passenger i.
using Seating = std::vector<unsigned>;

/// Passengers not in their own seat.
Subset wrong_seated(const Seating& seating);
/// Number of passengers not in their own seat (any n).
std::size_t wrong_seated_count(const Seating& seating);

struct SeatingDistribution {
    unsigned n = 0;
    std::map<Seating, Rat> entries;
};

inline constexpr unsigned kDefaultOracleMaxN = 10;

/// Exact law of the final seating, leaf by leaf. Throws ResourceError above max_n.
SeatingDistribution enumerate_process(const ProcessConfig& cfg, unsigned max_n = kDefaultOracleMaxN);

/// sum over outcomes of P(outcome) * prod_{i wrong} w_i, by dynamic programming
/// on (next passenger, free seats). Throws ResourceError above max_n.
MultilinearPoly oracle_weight_enumerator(const ProcessConfig& cfg, unsigned max_n = kDefaultOracleMaxN);

/// Probability that every passenger in `correct` ends in their own seat,
/// read off the leaf distribution.
Rat oracle_correct_probability(const SeatingDistribution& dist, Subset correct);

// Monte Carlo ----------------------------------------------------------------
//
// Each draw runs std::mt19937_64 seeded through SplitMix64. A uniform index
// among m free seats is the high 64 bits of (64-bit draw) * m, taken over the
// increasing list of free seats. Both the engine and the mapping are fully
// specified, so a seed reproduces the same seating on every platform.

/// SplitMix64 finaliser; also used to derive per-trial seeds.
std::uint64_t splitmix64(std::uint64_t x);
/// Seed used for trial `trial` of a run started with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

Seating sample_boarding(const ProcessConfig& cfg, std::uint64_t seed);

/// counts[l] = number of trials with exactly l wrong-seated passengers.
/// Independent of `threads` (0 = AMP_THREADS or hardware concurrency).
std::vector<std::uint64_t> simulate_wrong_counts(const ProcessConfig& cfg, std::uint64_t trials, std::uint64_t seed,
                                                 unsigned threads = 0);

/// Relative frequencies of exactly l wrong-seated passengers, l = 0..n.
std::vector<double> empirical_pgf(const ProcessConfig& cfg, std::uint64_t trials, std::uint64_t seed,
                                  unsigned threads = 0);

/// Worker count from AMP_THREADS, else hardware concurrency (at least 1).
unsigned default_thread_count();

}  // namespace amp
