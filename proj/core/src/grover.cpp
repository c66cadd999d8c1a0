#include "gqss/grover.hpp"

#include <cassert>
#include <cmath>

namespace gqss {

SearchSpec::SearchSpec(std::uint64_t n, std::uint64_t m) : space_size(n), marked_count(m) {
    if (n < 2 || (n & (n - 1)) != 0 || n > (std::uint64_t{1} << kMaxQubits)) {
        throw ConfigError("search space size must be a power of two between 2 and 2^" +
                          std::to_string(kMaxQubits) + ", got " + std::to_string(n));
    }
    if (m < 1 || m > n) {
        throw ConfigError("marked count must be between 1 and the space size, got " +
                          std::to_string(m));
    }
}

int SearchSpec::qubits() const {
    int n = 0;
    for (std::uint64_t d = space_size; d > 1; d >>= 1) ++n;
    return n;
}

StateVector grover_iterate(const StateVector& state, const MarkedSet& marked,
                           const StateVector& about) {
    return apply_diffusion(apply_oracle(state, marked), about);
}

std::pair<double, double> one_shot_amplitudes(const SearchSpec& spec) {
    const double n = static_cast<double>(spec.space_size);
    const double m = static_cast<double>(spec.marked_count);
    // (n - 4m)/n and (3n - 4m)/n are exact dyadic values; the lone rounding
    // is the final multiply by 1/sqrt(n).
    const double inv_root = std::sqrt(1.0 / n);
    return {(n - 4.0 * m) / n * inv_root, (3.0 * n - 4.0 * m) / n * inv_root};
}

double success_from_ratio(double marked_ratio) {
    const double x = marked_ratio;
    const double value = x * (9.0 + x * (-24.0 + 16.0 * x));
    // The polynomial stays inside [0, 1] for x in [0, 1]; only floating
    // error could leave it, and that is a defect rather than a value to
    // clamp away.
    assert(value >= -1e-12 && value <= 1.0 + 1e-12);
    return value;
}

double success_one_iteration(const SearchSpec& spec) {
    return success_from_ratio(spec.marked_ratio());
}

double failure_one_iteration(const SearchSpec& spec) {
    return 1.0 - success_one_iteration(spec);
}

IterationTrace closed_form_trace(const SearchSpec& spec, int iterations) {
    if (iterations < 0) {
        throw ConfigError("iteration count must be nonnegative");
    }
    const double n = static_cast<double>(spec.space_size);
    const double m = static_cast<double>(spec.marked_count);
    // The recursion runs on amplitudes scaled by sqrt(n). Scaled values are
    // dyadic rationals (n is a power of two), so every step and every
    // success value m * b^2 / n computes exactly until the numerators
    // outgrow the 53-bit significand; the irrational factor enters once,
    // when a row is emitted.
    const double inv_root = std::sqrt(1.0 / n);

    IterationTrace trace;
    trace.reserve(static_cast<std::size_t>(iterations) + 1);
    double unmarked = 1.0;
    double marked = 1.0;
    trace.push_back({0, inv_root, inv_root, m / n});
    for (int k = 1; k <= iterations; ++k) {
        marked = -marked;
        const double mean = ((n - m) * unmarked + m * marked) / n;
        unmarked = 2.0 * mean - unmarked;
        marked = 2.0 * mean - marked;
        trace.push_back({k, unmarked * inv_root, marked * inv_root, m * marked * marked / n});
    }
    return trace;
}

std::vector<std::pair<double, double>> success_curve(const std::vector<SearchSpec>& specs) {
    std::vector<std::pair<double, double>> curve;
    curve.reserve(specs.size());
    for (const SearchSpec& spec : specs) {
        curve.emplace_back(spec.marked_ratio(), success_one_iteration(spec));
    }
    return curve;
}

std::vector<IterationCell> iteration_table(const std::vector<int>& qubit_counts,
                                           int max_iterations) {
    if (max_iterations < 1) {
        throw ConfigError("iteration table needs at least one iteration");
    }
    std::vector<IterationCell> cells;
    cells.reserve(qubit_counts.size() * static_cast<std::size_t>(max_iterations));
    for (int qubits : qubit_counts) {
        if (qubits < 1 || qubits > kMaxQubits) {
            throw ConfigError("iteration table qubit count out of range: " +
                              std::to_string(qubits));
        }
        const SearchSpec spec(std::uint64_t{1} << qubits, 1);
        const IterationTrace trace = closed_form_trace(spec, max_iterations);
        for (int k = 1; k <= max_iterations; ++k) {
            cells.push_back({qubits, k, trace[static_cast<std::size_t>(k)].success});
        }
    }
    return cells;
}

double brute_force_check(const SearchSpec& spec, int iterations, const MarkedSet& placement) {
    if (placement.size() != spec.marked_count) {
        throw ConfigError("placement has " + std::to_string(placement.size()) +
                          " indices but the spec marks " + std::to_string(spec.marked_count));
    }
    const int qubits = spec.qubits();
    const StateVector about = StateVector::uniform(qubits);
    if (placement.max_index() >= about.dim()) {
        throw ConfigError("placement index " + std::to_string(placement.max_index()) +
                          " out of range for dimension " + std::to_string(about.dim()));
    }
    const IterationTrace trace = closed_form_trace(spec, iterations);

    StateVector state = about;
    double worst = 0.0;
    for (int k = 0; k <= iterations; ++k) {
        if (k > 0) state = grover_iterate(state, placement, about);
        const IterationRow& row = trace[static_cast<std::size_t>(k)];
        for (std::uint64_t index = 0; index < state.dim(); ++index) {
            const double expected = placement.contains(index) ? row.marked_amplitude
                                                              : row.unmarked_amplitude;
            worst = std::max(worst, std::abs(state[index] - Amplitude{expected, 0.0}));
        }
    }
    return worst;
}

} // namespace gqss
