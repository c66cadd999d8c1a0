#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gqss/protocol.hpp"

namespace gqss {

/// Number of distinct letter words on `qubits` qubits: 4^qubits.
std::uint64_t guess_space_size(int qubits);

/// Number of ways to place `marked_count` marked states in a space of
/// `space_size`: the binomial coefficient. Throws ConfigError when the
/// exact count does not fit in 64 bits.
std::uint64_t marked_set_space(std::uint64_t space_size, std::uint64_t marked_count);

/// counts[k] = number of size-M subsets of [0, N) sharing exactly k indices
/// with a fixed size-M subset: C(M, k) * C(N - M, M - k) for k = 0..M.
/// The counts sum to marked_set_space(N, M).
std::vector<std::uint64_t> overlap_census(std::uint64_t space_size, std::uint64_t marked_count);

/// Exact and sampled detection figures for one strategy on one scenario.
/// Detection is the probability that a session's measured index falls
/// outside the dealer's marked set; undetected is its complement.
struct DetectionReport {
    std::string strategy;
    double exact_detection = 0.0;
    double exact_undetected = 0.0;
    double monte_carlo_detection = 0.0;
    std::uint64_t monte_carlo_trials = 0;
    std::uint64_t monte_carlo_cheat_signals = 0;
    std::uint64_t guess_space = 0;  // 4^n
    std::uint64_t marked_space = 0; // C(2^n, M), or 0 when it overflows 64 bits
};

/// Computes the exact final measurement distribution under `strategy` (for
/// family strategies, the exact average over every member) and fills in the
/// Monte Carlo side by running scenario.trials sessions on scenario.seed.
/// Family enumeration is limited to 8 qubits for guesses (4^n members) and
/// to 250000 marked-set placements.
DetectionReport exact_detection_probability(const Scenario& scenario,
                                            const CheatStrategy& strategy);

/// exact_detection_probability for an intercept-resend forgery carrying the
/// given fake marked set.
DetectionReport intercept_resend_report(const Scenario& scenario, const MarkedSet& fake);

/// One decoded outcome of the fixed four-qubit guess survey behind the
/// table1 command.
struct Table1Row {
    int row = 0;                // 1-based position in the survey
    ProductState guess{{Letter::Plus}};
    bool reflected = false;     // decoded state is exactly the negated encoded state
    StateVector decoded{1, {{1.0, 0.0}, {0.0, 0.0}}};
};

/// The ten four-qubit words the survey decodes about, |++++> first.
const std::vector<ProductState>& table1_words();

/// Encodes |++++> with `marked` (|marked| must be 4) and decodes about each
/// survey word. A guess whose word has zero overlap with the encoded state
/// only flips its sign, which is the `reflected` shorthand in the rows.
std::vector<Table1Row> table1_report(const MarkedSet& marked);

} // namespace gqss
