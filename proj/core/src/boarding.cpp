#include "amp/boarding.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <random>
#include <string>
#include <thread>

namespace amp {

ProcessConfig ProcessConfig::make(unsigned n, unsigned k) {
    if (n < 1) throw DomainError("process needs at least one passenger (n >= 1)");
    if (k > n) throw DomainError("absent-minded count k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    return ProcessConfig{n, k};
}

Subset wrong_seated(const Seating& seating) {
    Subset s = 0;
    for (unsigned i = 1; i <= seating.size(); ++i)
        if (seating[i - 1] != i) s |= singleton(i);
    return s;
}

std::size_t wrong_seated_count(const Seating& seating) {
    std::size_t c = 0;
    for (unsigned i = 1; i <= seating.size(); ++i) c += seating[i - 1] != i;
    return c;
}

namespace {

void check_guard(const ProcessConfig& cfg, unsigned max_n) {
    ProcessConfig::make(cfg.n, cfg.k);
    if (cfg.n > max_n)
        throw ResourceError("exact enumeration limited to n <= " + std::to_string(max_n) + " (requested n = " +
                            std::to_string(cfg.n) + "); use Monte Carlo sampling for larger n");
    if (cfg.n > kMaxMultilinearVars) throw ResourceError("exact enumeration needs n <= 62");
}

class TreeWalker {
public:
    explicit TreeWalker(const ProcessConfig& cfg) : cfg_(cfg), seating_(cfg.n, 0) {}

    SeatingDistribution run() {
        out_.n = cfg_.n;
        walk(1, full_subset(cfg_.n), Rat(1));
        return std::move(out_);
    }

private:
    void walk(unsigned passenger, Subset free, const Rat& prob) {
        if (passenger > cfg_.n) {
            out_.entries.emplace(seating_, prob);
            return;
        }
        if (passenger > cfg_.k && contains(free, passenger)) {
            seating_[passenger - 1] = passenger;
            walk(passenger + 1, free & ~singleton(passenger), prob);
            return;
        }
        const Rat branch = prob / Rat(std::popcount(free));
        for (unsigned seat : elements(free)) {
            seating_[passenger - 1] = seat;
            walk(passenger + 1, free & ~singleton(seat), branch);
        }
    }

    ProcessConfig cfg_;
    Seating seating_;
    SeatingDistribution out_;
};

class WeightEnumerator {
public:
    explicit WeightEnumerator(const ProcessConfig& cfg) : cfg_(cfg) {}

    MultilinearPoly run() { return from(1, full_subset(cfg_.n)); }

private:
    // Weight enumerator of passengers `passenger`..n given the free seats.
    MultilinearPoly from(unsigned passenger, Subset free) {
        if (passenger > cfg_.n) return MultilinearPoly::constant(cfg_.n, Rat(1));
        const auto key = std::make_pair(passenger, free);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        MultilinearPoly acc(cfg_.n);
        if (passenger > cfg_.k && contains(free, passenger)) {
            acc = from(passenger + 1, free & ~singleton(passenger));
        } else {
            const Rat share(1, std::popcount(free));
            for (unsigned seat : elements(free)) {
                auto rest = from(passenger + 1, free & ~singleton(seat));
                if (seat == passenger) acc += rest * share;
                else acc += rest.times_affine(passenger, share, Rat(0));
            }
        }
        memo_.emplace(key, acc);
        return acc;
    }

    ProcessConfig cfg_;
    std::map<std::pair<unsigned, Subset>, MultilinearPoly> memo_;
};

}  // namespace

SeatingDistribution enumerate_process(const ProcessConfig& cfg, unsigned max_n) {
    check_guard(cfg, max_n);
    return TreeWalker(cfg).run();
}

MultilinearPoly oracle_weight_enumerator(const ProcessConfig& cfg, unsigned max_n) {
    check_guard(cfg, max_n);
    return WeightEnumerator(cfg).run();
}

Rat oracle_correct_probability(const SeatingDistribution& dist, Subset correct) {
    Rat p;
    for (const auto& [seating, prob] : dist.entries)
        if ((wrong_seated(seating) & correct) == 0) p += prob;
    return p;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return splitmix64(splitmix64(seed) ^ (trial * 0xd1b54a32d192ed03ULL));
}

namespace {

// High 64 bits of a 64x64-bit product.
std::uint64_t mulhi64(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t a_lo = a & 0xffffffffULL, a_hi = a >> 32;
    const std::uint64_t b_lo = b & 0xffffffffULL, b_hi = b >> 32;
    const std::uint64_t lo_lo = a_lo * b_lo;
    const std::uint64_t hi_lo = a_hi * b_lo;
    const std::uint64_t lo_hi = a_lo * b_hi;
    const std::uint64_t cross = (lo_lo >> 32) + (hi_lo & 0xffffffffULL) + lo_hi;
    return a_hi * b_hi + (hi_lo >> 32) + (cross >> 32);
}

std::uint64_t uniform_index(std::mt19937_64& gen, std::uint64_t m) { return mulhi64(gen(), m); }

}  // namespace

Seating sample_boarding(const ProcessConfig& cfg, std::uint64_t seed) {
    ProcessConfig::make(cfg.n, cfg.k);
    std::mt19937_64 gen(splitmix64(seed));
    std::vector<unsigned> free_seats(cfg.n);
    std::vector<bool> taken(cfg.n + 1, false);
    for (unsigned s = 0; s < cfg.n; ++s) free_seats[s] = s + 1;

    Seating seating(cfg.n);
    for (unsigned p = 1; p <= cfg.n; ++p) {
        unsigned seat = p;
        if (p <= cfg.k || taken[p]) seat = free_seats[uniform_index(gen, free_seats.size())];
        seating[p - 1] = seat;
        taken[seat] = true;
        free_seats.erase(std::lower_bound(free_seats.begin(), free_seats.end(), seat));
    }
    return seating;
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("AMP_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<std::uint64_t> simulate_wrong_counts(const ProcessConfig& cfg, std::uint64_t trials, std::uint64_t seed,
                                                 unsigned threads) {
    ProcessConfig::make(cfg.n, cfg.k);
    if (trials < 1) throw DomainError("simulation needs at least one trial");
    if (threads == 0) threads = default_thread_count();
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));

    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(cfg.n + 1, 0));
    auto work = [&](unsigned t) {
        const std::uint64_t begin = trials * t / threads;
        const std::uint64_t end = trials * (t + 1) / threads;
        for (std::uint64_t i = begin; i < end; ++i) {
            const auto s = sample_boarding(cfg, trial_seed(seed, i));
            ++partial[t][wrong_seated_count(s)];
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& th : pool) th.join();

    std::vector<std::uint64_t> counts(cfg.n + 1, 0);
    for (const auto& p : partial)
        for (std::size_t l = 0; l < counts.size(); ++l) counts[l] += p[l];
    return counts;
}

std::vector<double> empirical_pgf(const ProcessConfig& cfg, std::uint64_t trials, std::uint64_t seed,
                                  unsigned threads) {
    const auto counts = simulate_wrong_counts(cfg, trials, seed, threads);
    std::vector<double> freq(counts.size());
    for (std::size_t l = 0; l < counts.size(); ++l)
        freq[l] = static_cast<double>(counts[l]) / static_cast<double>(trials);
    return freq;
}

}  // namespace amp
