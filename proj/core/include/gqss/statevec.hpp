#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gqss/errors.hpp"
#include "gqss/rng.hpp"

namespace gqss {

using Amplitude = std::complex<double>;

/// Largest register size the dense representation accepts (2^20 amplitudes).
inline constexpr int kMaxQubits = 20;

/// Tolerance used when validating that a raw amplitude vector is normalized.
inline constexpr double kNormTolerance = 1e-9;

/// One of the four single-qubit product letters. Plus and Minus are
/// (|0> +/- |1>)/sqrt(2); PlusI and MinusI are (|0> +/- i|1>)/sqrt(2).
/// Every letter has |amplitude| = 1/sqrt(2) on both basis states, so any
/// word over this alphabet expands to a state with uniform magnitudes.
enum class Letter { Plus, Minus, PlusI, MinusI };

/// Amplitude of `letter` on basis state |bit> (bit is 0 or 1).
Amplitude letter_component(Letter letter, int bit);

/// Canonical spelling: "plus", "minus", "plus_i", "minus_i".
std::string_view letter_name(Letter letter);

/// Accepts the canonical spellings plus the short forms "+", "-", "+i", "-i".
std::optional<Letter> parse_letter(std::string_view text);

/// A register preparation given as one letter per qubit. Qubit 0 is the
/// leftmost letter and maps to the most significant bit of a basis index.
class ProductState {
public:
    explicit ProductState(std::vector<Letter> letters);

    int qubits() const { return static_cast<int>(letters_.size()); }
    const std::vector<Letter>& letters() const { return letters_; }

    bool operator==(const ProductState&) const = default;

private:
    std::vector<Letter> letters_;
};

/// The set of basis indices an oracle marks. Indices are kept strictly
/// increasing; duplicates and empty sets are rejected.
class MarkedSet {
public:
    explicit MarkedSet(std::vector<std::uint64_t> indices);

    std::size_t size() const { return indices_.size(); }
    const std::vector<std::uint64_t>& indices() const { return indices_; }
    bool contains(std::uint64_t index) const;

    /// Largest index in the set (the set is never empty).
    std::uint64_t max_index() const { return indices_.back(); }

    bool operator==(const MarkedSet&) const = default;

private:
    std::vector<std::uint64_t> indices_;
};

/// Dense n-qubit state. Amplitudes are indexed by basis state, qubit 0 being
/// the most significant bit: |0100> on four qubits is index 4.
///
/// Instances are unit vectors by construction. The raw-amplitude constructor
/// validates the norm; the operations below are reflections and therefore
/// preserve it without renormalizing.
class StateVector {
public:
    /// Validates: 1 <= qubits <= kMaxQubits, amps.size() == 2^qubits, and
    /// sum |amp|^2 == 1 within kNormTolerance. Throws ConfigError otherwise.
    StateVector(int qubits, std::vector<Amplitude> amps);

    /// |index> on `qubits` qubits.
    static StateVector basis_state(int qubits, std::uint64_t index);

    /// Equal real amplitudes 1/sqrt(2^qubits) on every basis state.
    static StateVector uniform(int qubits);

    int qubits() const { return qubits_; }
    std::uint64_t dim() const { return amps_.size(); }
    const std::vector<Amplitude>& amps() const { return amps_; }
    const Amplitude& operator[](std::uint64_t index) const { return amps_[index]; }

    /// sqrt(sum |amp|^2); equals 1 up to floating error for every instance.
    double norm() const;

    bool operator==(const StateVector&) const = default;

private:
    struct Unchecked {};
    StateVector(Unchecked, int qubits, std::vector<Amplitude> amps);

    int qubits_;
    std::vector<Amplitude> amps_;

    friend StateVector expand_product(const ProductState&);
    friend StateVector apply_oracle(const StateVector&, const MarkedSet&);
    friend StateVector apply_diffusion(const StateVector&, const StateVector&);
};

/// Tensor product of the word's letters, as a dense state.
StateVector expand_product(const ProductState& word);

/// Phase oracle: negates the amplitude of every marked index and leaves the
/// rest bit-identical. Throws ConfigError if an index is out of range.
StateVector apply_oracle(const StateVector& state, const MarkedSet& marked);

/// Reflection about `about`: 2|about><about| - I applied to `state`. The
/// two states must have the same dimension. `about` is a unit vector by
/// the StateVector invariant, so the result is again a unit vector.
StateVector apply_diffusion(const StateVector& state, const StateVector& about);

/// <a|b> with the conjugate on `a`. Dimensions must match.
Amplitude inner_product(const StateVector& a, const StateVector& b);

/// Canonical letter names joined with commas: "plus,minus,plus_i".
std::string word_name(const ProductState& word);

/// Basis index as a bit string, qubit 0 first: index 4 on 4 qubits is "0100".
std::string index_bits(std::uint64_t index, int qubits);

/// Born probabilities |amp|^2 per basis index.
std::vector<double> measure_distribution(const StateVector& state);

/// One measurement outcome, drawn by inverse CDF over ascending indices
/// from a single rng.next_double() call.
std::uint64_t sample_measurement(const StateVector& state, Rng& rng);

} // namespace gqss
