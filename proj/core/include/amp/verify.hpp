#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace amp {

/// One named pass/fail check; `witness` explains a failure.
struct Check {
    std::string name;
    bool pass = true;
    std::string witness;
};

enum class Suite { Theorems, Recurrences, Moments, All };

/// Parses "theorems", "recurrences", "moments" or "all".
std::optional<Suite> parse_suite(std::string_view name);

/// Deliberate fixture corruption used to show that the suites can fail.
enum class Fault {
    None,
    VarianceFixture,     ///< adds 1/n to the variance closed form
    RecurrenceK1,        ///< adds 1/(n+2) to c_1 of the k = 1 recurrence
    ClosedFormFk,        ///< adds 1/n! to the constant term of the k-passenger enumerator
};

std::optional<Fault> parse_fault(std::string_view name);

struct SuiteOptions {
    /// Largest n exercised; each family also respects its own cost caps.
    unsigned nmax = 8;
    Fault fault = Fault::None;
};

/**
 * Runs the cross-checks of a suite and returns them in a fixed order.
 *
 * theorems:     oracle vs closed forms (n <= min(nmax, 8)), chain vs closed form
 *               (n <= min(nmax, 20)), marginals, independence, pgf identities.
 * recurrences:  built-in k = 1, 2, 3 recurrences over n = k..nmax.
 * moments:      harmonic closed forms vs exact pgf moments for n = 2..nmax,
 *               and the expectation formula for every k < n <= nmax.
 */
std::vector<Check> run_suite(Suite suite, const SuiteOptions& options);

}  // namespace amp
