#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gqss/statevec.hpp"

namespace gqss {

/// Search problem over a power-of-two space: N basis states, M of them marked.
struct SearchSpec {
    std::uint64_t space_size;   // N, a power of two, 2 <= N <= 2^kMaxQubits
    std::uint64_t marked_count; // M, 1 <= M <= N

    SearchSpec(std::uint64_t n, std::uint64_t m);

    int qubits() const;
    double marked_ratio() const {
        return static_cast<double>(marked_count) / static_cast<double>(space_size);
    }
};

/// One row of an amplitude trace. After `iteration` rounds every unmarked
/// basis state carries `unmarked_amplitude` and every marked one carries
/// `marked_amplitude` (both real when the walk starts from the uniform
/// state); `success` is M * marked_amplitude^2.
struct IterationRow {
    int iteration;
    double unmarked_amplitude;
    double marked_amplitude;
    double success;
};

using IterationTrace = std::vector<IterationRow>;

/// One Grover round: phase oracle over `marked`, then reflection about
/// `about`.
StateVector grover_iterate(const StateVector& state, const MarkedSet& marked,
                           const StateVector& about);

/// Amplitudes after exactly one round from the uniform state:
/// unmarked (N - 4M) / (N sqrt(N)), marked (3N - 4M) / (N sqrt(N)).
std::pair<double, double> one_shot_amplitudes(const SearchSpec& spec);

/// Success probability after one round from the uniform state, as a function
/// of the marked ratio x = M/N alone: 9x - 24x^2 + 16x^3. The value is 1
/// exactly when x = 1/4 or x = 1.
double success_from_ratio(double marked_ratio);

/// success_from_ratio at the spec's marked ratio.
double success_one_iteration(const SearchSpec& spec);

/// Complement of success_one_iteration; equals (N - M)(N - 4M)^2 / N^3.
double failure_one_iteration(const SearchSpec& spec);

/// Amplitude rows 0..iterations from the uniform state, by the two-term
/// recursion: negate the marked amplitude, then reflect both amplitudes
/// about the mean ((N - M) a + M b) / N.
IterationTrace closed_form_trace(const SearchSpec& spec, int iterations);

/// (marked ratio, one-round success) per input spec, in input order.
std::vector<std::pair<double, double>> success_curve(const std::vector<SearchSpec>& specs);

/// One cell of the per-qubit-count success table.
struct IterationCell {
    int qubit_count;
    int iteration;
    double success;
};

/// Success after k = 1..max_iterations rounds of single-target search on
/// each register size, from closed_form_trace.
std::vector<IterationCell> iteration_table(const std::vector<int>& qubit_counts,
                                           int max_iterations);

/// Runs `iterations` rounds by explicit state-vector simulation with the
/// marked set `placement` and compares against the closed-form trace.
/// Returns the largest absolute amplitude deviation over every basis state
/// and round. placement.size() must equal spec.marked_count.
double brute_force_check(const SearchSpec& spec, int iterations, const MarkedSet& placement);

} // namespace gqss
