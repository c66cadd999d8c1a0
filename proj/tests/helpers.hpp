#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "gqss/rng.hpp"
#include "gqss/statevec.hpp"

namespace gqss::test {

inline double gaussian(Rng& rng) {
    double u1 = rng.next_double();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * rng.next_double());
}

/// Haar-ish random unit vector: independent gaussian components, normalized.
inline StateVector random_state(int qubits, Rng& rng) {
    const std::uint64_t dim = std::uint64_t{1} << qubits;
    std::vector<Amplitude> amps(dim);
    double sum = 0.0;
    for (Amplitude& a : amps) {
        a = {gaussian(rng), gaussian(rng)};
        sum += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(sum);
    for (Amplitude& a : amps) a *= scale;
    return StateVector(qubits, std::move(amps));
}

inline MarkedSet random_marked(int qubits, std::size_t count, Rng& rng) {
    const std::uint64_t dim = std::uint64_t{1} << qubits;
    std::vector<std::uint64_t> indices;
    while (indices.size() < count) {
        const std::uint64_t candidate = rng.next_below(dim);
        bool seen = false;
        for (std::uint64_t index : indices) {
            if (index == candidate) seen = true;
        }
        if (!seen) indices.push_back(candidate);
    }
    return MarkedSet(std::move(indices));
}

inline ProductState random_word(int qubits, Rng& rng) {
    std::vector<Letter> letters(static_cast<std::size_t>(qubits));
    for (Letter& letter : letters) {
        letter = static_cast<Letter>(rng.next_below(4));
    }
    return ProductState(std::move(letters));
}

inline double max_amp_difference(const StateVector& a, const StateVector& b) {
    double worst = 0.0;
    for (std::uint64_t index = 0; index < a.dim(); ++index) {
        worst = std::max(worst, std::abs(a[index] - b[index]));
    }
    return worst;
}

} // namespace gqss::test
