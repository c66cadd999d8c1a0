#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gqss/cheat_strategy.hpp"
#include "gqss/statevec.hpp"

namespace gqss {

/// How the dealer encodes: one marked state per message half (the scheme
/// with 2^n/4 marked states and certain recovery), or a single marked state
/// amplified over a chosen number of rounds before the qubits are sent.
enum class Scheme { MultiMarked, SingleMarked };

/// Complete description of one sharing session. A scenario plus a seed fully
/// determines every transcript and statistic this library produces.
struct Scenario {
    int qubits = 0;
    ProductState initial{{Letter::Plus}};
    MarkedSet marked{{0}};
    std::string message_half_a;
    std::string message_half_b;
    Scheme scheme = Scheme::MultiMarked;
    int iterations_before_send = 0; // single-marked scheme only
    CheatStrategy adversary = Honest{};
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;

    /// Throws ConfigError naming the offending field. Checks: qubit range,
    /// letter-word length, marked indices in range, marked-set size legal
    /// for the scheme, trials >= 1, iterations_before_send only used by the
    /// single-marked scheme, and adversary dimensions matching the register.
    void validate() const;
};

enum class Half { A, B };

/// Exact partition of the marked set into the two message halves. With a
/// single marked index the whole payload rides on half A.
class MarkedTagging {
public:
    MarkedTagging(std::vector<std::uint64_t> half_a, std::vector<std::uint64_t> half_b,
                  std::string payload_a, std::string payload_b);

    std::optional<Half> tag_of(std::uint64_t index) const;
    const std::vector<std::uint64_t>& half_a() const { return half_a_; }
    const std::vector<std::uint64_t>& half_b() const { return half_b_; }
    const std::string& payload(Half half) const;

private:
    std::vector<std::uint64_t> half_a_;
    std::vector<std::uint64_t> half_b_;
    std::string payload_a_;
    std::string payload_b_;
};

/// Associates the message halves with the marked indices: the lower half of
/// the ascending index list carries half A, the upper half carries half B.
/// The set size must be 1, or 2^qubits / 4 and even.
MarkedTagging encode_message(const std::string& half_a, const std::string& half_b,
                             int qubits, const MarkedSet& marked);

/// What a receiver ends a session with.
enum class OutcomeLabel {
    HalfA,       // measured one of half A's marked indices
    HalfB,       // measured one of half B's marked indices
    CheatSignal, // measured an index outside the marked set
    Correlated,  // two-qubit scheme only: |00> or |11>
};

std::string_view outcome_name(OutcomeLabel label);

enum class EventKind {
    Prepared,
    OracleApplied,
    Distributed,
    Confirmed,
    Announced,
    Decoded,
    Measured,
    Classified,
};

std::string_view event_name(EventKind kind);

struct TranscriptEvent {
    std::uint64_t seq;
    EventKind kind;
    std::string payload;
};

/// Append-only session log with a per-session sequence number.
class Transcript {
public:
    void append(EventKind kind, std::string payload);
    const std::vector<TranscriptEvent>& events() const { return events_; }

private:
    std::vector<TranscriptEvent> events_;
};

/// One line per event: seq, event name, payload, separated by tabs.
std::string serialize_transcript(const Transcript& transcript);

/// The dealer's register right before distribution: the initial word
/// expanded, the oracle applied, and (single-marked scheme) any pre-send
/// amplification rounds run.
StateVector dealer_prepare(const Scenario& scenario);

/// Which party holds which qubit. Party k receives qubit k; the party count
/// must equal the register size.
struct QubitAssignment {
    int qubit;
    std::string party;
};

std::vector<QubitAssignment> distribute(const StateVector& reg,
                                        const std::vector<std::string>& parties);

/// The receivers' joint decode: reflection about the announced preparation.
StateVector collective_decode(const StateVector& reg, const ProductState& announced);

/// Maps a measured index to its outcome. Tagged marked indices win; in the
/// two-qubit scheme the untagged outcomes |00> and |11> are Correlated;
/// everything else is CheatSignal.
OutcomeLabel classify_outcome(std::uint64_t index, const Scenario& scenario,
                              const MarkedTagging& tagging);

/// Drives one full session: prepare, distribute, confirm, announce, decode,
/// measure, classify. Phase order is enforced; driving a phase early or
/// twice throws ProtocolOrderError. The adversary strategy decides what the
/// decode acts on, but the classical phase order is the same for every
/// strategy.
class Session {
public:
    Session(const Scenario& scenario, Rng& rng);

    void prepare();
    void distribute_qubits();
    void confirm(int party);
    void announce();
    void decode();
    std::uint64_t measure();
    OutcomeLabel classify();

    const Transcript& transcript() const { return transcript_; }

private:
    enum class Phase { Fresh, Prepared, Distributed, Announced, Decoded, Measured, Done };

    void require(Phase expected, const char* action);

    const Scenario& scenario_;
    Rng& rng_;
    Phase phase_ = Phase::Fresh;
    std::vector<bool> confirmed_;
    MarkedTagging tagging_;
    StateVector register_;
    std::uint64_t outcome_ = 0;
    Transcript transcript_;
};

/// Outcome counts over a batch of sessions.
struct OutcomeStats {
    std::uint64_t half_a = 0;
    std::uint64_t half_b = 0;
    std::uint64_t cheat_signal = 0;
    std::uint64_t correlated = 0;
    std::uint64_t trials = 0;
};

struct SessionResult {
    OutcomeStats stats;
    Transcript first_transcript; // the full event log of trial 0
};

/// Runs scenario.trials sessions on one stream seeded with scenario.seed.
/// Identical scenarios produce identical results.
SessionResult run_session(const Scenario& scenario);

/// How many marked-set transmissions a message of `message_units` units
/// needs: per unit, the smallest k with (1 - p)^k <= 0.01, where p is the
/// honest per-set recovery probability of the scenario.
struct TransmissionPlan {
    double per_set_success;
    int sets_per_unit;
    std::int64_t message_units;
    std::int64_t total_sets;
};

TransmissionPlan session_schedule(const Scenario& scenario, std::int64_t message_units);

} // namespace gqss
