#include "gqss/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gqss {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

void check_qubit_count(int qubits) {
    if (qubits < 1 || qubits > kMaxQubits) {
        throw ConfigError("qubit count must be between 1 and " +
                          std::to_string(kMaxQubits) + ", got " + std::to_string(qubits));
    }
}

} // namespace

Amplitude letter_component(Letter letter, int bit) {
    if (bit == 0) return {kInvSqrt2, 0.0};
    switch (letter) {
    case Letter::Plus:   return {kInvSqrt2, 0.0};
    case Letter::Minus:  return {-kInvSqrt2, 0.0};
    case Letter::PlusI:  return {0.0, kInvSqrt2};
    case Letter::MinusI: return {0.0, -kInvSqrt2};
    }
    throw ConfigError("invalid letter value");
}

std::string_view letter_name(Letter letter) {
    switch (letter) {
    case Letter::Plus:   return "plus";
    case Letter::Minus:  return "minus";
    case Letter::PlusI:  return "plus_i";
    case Letter::MinusI: return "minus_i";
    }
    return "invalid";
}

std::optional<Letter> parse_letter(std::string_view text) {
    if (text == "plus" || text == "+") return Letter::Plus;
    if (text == "minus" || text == "-") return Letter::Minus;
    if (text == "plus_i" || text == "+i") return Letter::PlusI;
    if (text == "minus_i" || text == "-i") return Letter::MinusI;
    return std::nullopt;
}

ProductState::ProductState(std::vector<Letter> letters) : letters_(std::move(letters)) {
    check_qubit_count(static_cast<int>(letters_.size()));
}

MarkedSet::MarkedSet(std::vector<std::uint64_t> indices) : indices_(std::move(indices)) {
    if (indices_.empty()) {
        throw ConfigError("marked set must contain at least one index");
    }
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
        throw ConfigError("marked set contains a duplicate index");
    }
}

bool MarkedSet::contains(std::uint64_t index) const {
    return std::binary_search(indices_.begin(), indices_.end(), index);
}

StateVector::StateVector(int qubits, std::vector<Amplitude> amps)
    : qubits_(qubits), amps_(std::move(amps)) {
    check_qubit_count(qubits_);
    if (amps_.size() != (std::uint64_t{1} << qubits_)) {
        throw ConfigError("amplitude vector has length " + std::to_string(amps_.size()) +
                          " but " + std::to_string(qubits_) + " qubits need " +
                          std::to_string(std::uint64_t{1} << qubits_));
    }
    double sum = 0.0;
    for (const Amplitude& a : amps_) sum += std::norm(a);
    if (std::abs(sum - 1.0) > kNormTolerance) {
        throw ConfigError("amplitude vector is not normalized: sum of squares is " +
                          std::to_string(sum));
    }
}

StateVector::StateVector(Unchecked, int qubits, std::vector<Amplitude> amps)
    : qubits_(qubits), amps_(std::move(amps)) {}

StateVector StateVector::basis_state(int qubits, std::uint64_t index) {
    check_qubit_count(qubits);
    const std::uint64_t dim = std::uint64_t{1} << qubits;
    if (index >= dim) {
        throw ConfigError("basis index " + std::to_string(index) + " out of range for " +
                          std::to_string(qubits) + " qubits");
    }
    std::vector<Amplitude> amps(dim, Amplitude{0.0, 0.0});
    amps[index] = Amplitude{1.0, 0.0};
    return StateVector(Unchecked{}, qubits, std::move(amps));
}

StateVector StateVector::uniform(int qubits) {
    check_qubit_count(qubits);
    const std::uint64_t dim = std::uint64_t{1} << qubits;
    const double a = 1.0 / std::sqrt(static_cast<double>(dim));
    return StateVector(Unchecked{}, qubits, std::vector<Amplitude>(dim, Amplitude{a, 0.0}));
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const Amplitude& a : amps_) sum += std::norm(a);
    return std::sqrt(sum);
}

StateVector expand_product(const ProductState& word) {
    const int n = word.qubits();
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<Amplitude> amps(dim);
    for (std::uint64_t index = 0; index < dim; ++index) {
        Amplitude a{1.0, 0.0};
        for (int q = 0; q < n; ++q) {
            const int bit = static_cast<int>((index >> (n - 1 - q)) & 1u);
            a *= letter_component(word.letters()[q], bit);
        }
        amps[index] = a;
    }
    return StateVector(StateVector::Unchecked{}, n, std::move(amps));
}

StateVector apply_oracle(const StateVector& state, const MarkedSet& marked) {
    if (marked.max_index() >= state.dim()) {
        throw ConfigError("marked index " + std::to_string(marked.max_index()) +
                          " out of range for dimension " + std::to_string(state.dim()));
    }
    std::vector<Amplitude> amps = state.amps();
    for (std::uint64_t index : marked.indices()) {
        amps[index] = -amps[index];
    }
    return StateVector(StateVector::Unchecked{}, state.qubits(), std::move(amps));
}

StateVector apply_diffusion(const StateVector& state, const StateVector& about) {
    if (state.dim() != about.dim()) {
        throw ConfigError("diffusion axis has dimension " + std::to_string(about.dim()) +
                          " but the state has dimension " + std::to_string(state.dim()));
    }
    const Amplitude overlap = inner_product(about, state);
    std::vector<Amplitude> amps(state.dim());
    for (std::uint64_t index = 0; index < state.dim(); ++index) {
        amps[index] = 2.0 * overlap * about[index] - state[index];
    }
    return StateVector(StateVector::Unchecked{}, state.qubits(), std::move(amps));
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw ConfigError("inner product of states with dimensions " +
                          std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
    }
    Amplitude sum{0.0, 0.0};
    for (std::uint64_t index = 0; index < a.dim(); ++index) {
        sum += std::conj(a[index]) * b[index];
    }
    return sum;
}

std::string word_name(const ProductState& word) {
    std::string out;
    for (Letter letter : word.letters()) {
        if (!out.empty()) out += ',';
        out += letter_name(letter);
    }
    return out;
}

std::string index_bits(std::uint64_t index, int qubits) {
    std::string bits(static_cast<std::size_t>(qubits), '0');
    for (int q = 0; q < qubits; ++q) {
        if ((index >> (qubits - 1 - q)) & 1u) bits[static_cast<std::size_t>(q)] = '1';
    }
    return bits;
}

std::vector<double> measure_distribution(const StateVector& state) {
    std::vector<double> probs(state.dim());
    for (std::uint64_t index = 0; index < state.dim(); ++index) {
        probs[index] = std::norm(state[index]);
    }
    return probs;
}

std::uint64_t sample_measurement(const StateVector& state, Rng& rng) {
    const double u = rng.next_double();
    double cumulative = 0.0;
    for (std::uint64_t index = 0; index < state.dim(); ++index) {
        cumulative += std::norm(state[index]);
        if (u < cumulative) return index;
    }
    // Rounding can leave the final cumulative a hair under 1; the draw then
    // belongs to the last index with nonzero probability.
    for (std::uint64_t index = state.dim(); index-- > 0;) {
        if (std::norm(state[index]) > 0.0) return index;
    }
    return state.dim() - 1;
}

} // namespace gqss
