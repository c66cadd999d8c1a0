#include "gqss/protocol.hpp"

#include <algorithm>
#include <cmath>

namespace gqss {

namespace {

std::string_view scheme_name(Scheme scheme) {
    return scheme == Scheme::MultiMarked ? "multi-marked" : "single-marked";
}

std::string join_indices(const std::vector<std::uint64_t>& indices) {
    std::string out;
    for (std::uint64_t index : indices) {
        if (!out.empty()) out += ',';
        out += std::to_string(index);
    }
    return out;
}

ProductState draw_word(int qubits, Rng& rng) {
    std::vector<Letter> letters(static_cast<std::size_t>(qubits));
    for (Letter& letter : letters) {
        letter = static_cast<Letter>(rng.next_below(4));
    }
    return ProductState(std::move(letters));
}

// Floyd's sampling: a uniform size-m subset of [0, dim) using m draws.
MarkedSet draw_marked_set(std::uint64_t dim, std::uint64_t m, Rng& rng) {
    std::vector<std::uint64_t> chosen;
    chosen.reserve(m);
    for (std::uint64_t j = dim - m; j < dim; ++j) {
        const std::uint64_t t = rng.next_below(j + 1);
        if (std::find(chosen.begin(), chosen.end(), t) != chosen.end()) {
            chosen.push_back(j);
        } else {
            chosen.push_back(t);
        }
    }
    return MarkedSet(std::move(chosen));
}

} // namespace

void Scenario::validate() const {
    if (qubits < 1 || qubits > kMaxQubits) {
        throw ConfigError("qubits: must be between 1 and " + std::to_string(kMaxQubits));
    }
    const std::uint64_t dim = std::uint64_t{1} << qubits;
    if (initial.qubits() != qubits) {
        throw ConfigError("initial: has " + std::to_string(initial.qubits()) +
                          " letters but the scenario declares " + std::to_string(qubits) +
                          " qubits");
    }
    if (marked.max_index() >= dim) {
        throw ConfigError("marked: index " + std::to_string(marked.max_index()) +
                          " out of range for " + std::to_string(qubits) + " qubits");
    }
    if (scheme == Scheme::MultiMarked) {
        if (qubits < 2) {
            throw ConfigError("scheme: multi-marked needs at least 2 qubits");
        }
        if (marked.size() != dim / 4) {
            throw ConfigError("marked: multi-marked scheme on " + std::to_string(qubits) +
                              " qubits needs exactly " + std::to_string(dim / 4) +
                              " marked indices, got " + std::to_string(marked.size()));
        }
        if (iterations_before_send != 0) {
            throw ConfigError("iterations_before_send: only the single-marked scheme "
                              "amplifies before sending");
        }
    } else {
        if (marked.size() != 1) {
            throw ConfigError("marked: single-marked scheme needs exactly one index, got " +
                              std::to_string(marked.size()));
        }
        if (iterations_before_send < 0) {
            throw ConfigError("iterations_before_send: must be nonnegative");
        }
    }
    if (trials < 1) {
        throw ConfigError("trials: must be at least 1");
    }

    if (const auto* guess = std::get_if<GuessDiffusion>(&adversary)) {
        if (guess->guess && guess->guess->qubits() != qubits) {
            throw ConfigError("adversary.guess: has " + std::to_string(guess->guess->qubits()) +
                              " letters but the register has " + std::to_string(qubits));
        }
    } else if (const auto* intercept = std::get_if<InterceptResend>(&adversary)) {
        if (intercept->fake_marked) {
            if (intercept->fake_marked->size() != marked.size()) {
                throw ConfigError("adversary.marked: fake set has " +
                                  std::to_string(intercept->fake_marked->size()) +
                                  " indices but the dealer's has " +
                                  std::to_string(marked.size()));
            }
            if (intercept->fake_marked->max_index() >= dim) {
                throw ConfigError("adversary.marked: index " +
                                  std::to_string(intercept->fake_marked->max_index()) +
                                  " out of range for " + std::to_string(qubits) + " qubits");
            }
        }
        if (intercept->fake_initial && intercept->fake_initial->qubits() != qubits) {
            throw ConfigError("adversary.initial: has " +
                              std::to_string(intercept->fake_initial->qubits()) +
                              " letters but the register has " + std::to_string(qubits));
        }
    } else if (const auto* capture = std::get_if<CaptureAll>(&adversary)) {
        if (capture->policy == CaptureAll::Policy::MeasureImmediately && capture->guess) {
            throw ConfigError("adversary.guess: only the guess-diffusion-then-measure "
                              "policy takes a guess");
        }
        if (capture->guess && capture->guess->qubits() != qubits) {
            throw ConfigError("adversary.guess: has " + std::to_string(capture->guess->qubits()) +
                              " letters but the register has " + std::to_string(qubits));
        }
    }
}

MarkedTagging::MarkedTagging(std::vector<std::uint64_t> half_a, std::vector<std::uint64_t> half_b,
                             std::string payload_a, std::string payload_b)
    : half_a_(std::move(half_a)),
      half_b_(std::move(half_b)),
      payload_a_(std::move(payload_a)),
      payload_b_(std::move(payload_b)) {}

std::optional<Half> MarkedTagging::tag_of(std::uint64_t index) const {
    if (std::binary_search(half_a_.begin(), half_a_.end(), index)) return Half::A;
    if (std::binary_search(half_b_.begin(), half_b_.end(), index)) return Half::B;
    return std::nullopt;
}

const std::string& MarkedTagging::payload(Half half) const {
    return half == Half::A ? payload_a_ : payload_b_;
}

MarkedTagging encode_message(const std::string& half_a, const std::string& half_b,
                             int qubits, const MarkedSet& marked) {
    if (qubits < 1 || qubits > kMaxQubits) {
        throw ConfigError("qubit count out of range: " + std::to_string(qubits));
    }
    const std::uint64_t dim = std::uint64_t{1} << qubits;
    if (marked.max_index() >= dim) {
        throw ConfigError("marked index " + std::to_string(marked.max_index()) +
                          " out of range for " + std::to_string(qubits) + " qubits");
    }
    const std::size_t m = marked.size();
    if (m == 1) {
        return MarkedTagging(marked.indices(), {}, half_a, half_b);
    }
    if (m != dim / 4 || m % 2 != 0) {
        throw ConfigError("marked set size must be 1 or an even 2^n/4, got " +
                          std::to_string(m));
    }
    const auto& all = marked.indices();
    std::vector<std::uint64_t> lower(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m / 2));
    std::vector<std::uint64_t> upper(all.begin() + static_cast<std::ptrdiff_t>(m / 2), all.end());
    return MarkedTagging(std::move(lower), std::move(upper), half_a, half_b);
}

std::string_view outcome_name(OutcomeLabel label) {
    switch (label) {
    case OutcomeLabel::HalfA:       return "half_a";
    case OutcomeLabel::HalfB:       return "half_b";
    case OutcomeLabel::CheatSignal: return "cheat_signal";
    case OutcomeLabel::Correlated:  return "correlated";
    }
    return "invalid";
}

std::string_view event_name(EventKind kind) {
    switch (kind) {
    case EventKind::Prepared:     return "Prepared";
    case EventKind::OracleApplied: return "OracleApplied";
    case EventKind::Distributed:  return "Distributed";
    case EventKind::Confirmed:    return "Confirmed";
    case EventKind::Announced:    return "Announced";
    case EventKind::Decoded:      return "Decoded";
    case EventKind::Measured:     return "Measured";
    case EventKind::Classified:   return "Classified";
    }
    return "Invalid";
}

void Transcript::append(EventKind kind, std::string payload) {
    events_.push_back({events_.size(), kind, std::move(payload)});
}

std::string serialize_transcript(const Transcript& transcript) {
    std::string out;
    for (const TranscriptEvent& event : transcript.events()) {
        out += std::to_string(event.seq);
        out += '\t';
        out += event_name(event.kind);
        out += '\t';
        out += event.payload;
        out += '\n';
    }
    return out;
}

StateVector dealer_prepare(const Scenario& scenario) {
    scenario.validate();
    const StateVector start = expand_product(scenario.initial);
    if (scenario.scheme == Scheme::MultiMarked) {
        return apply_oracle(start, scenario.marked);
    }
    StateVector state = start;
    for (int k = 0; k < scenario.iterations_before_send; ++k) {
        state = apply_diffusion(apply_oracle(state, scenario.marked), start);
    }
    return apply_oracle(state, scenario.marked);
}

std::vector<QubitAssignment> distribute(const StateVector& reg,
                                        const std::vector<std::string>& parties) {
    if (parties.size() != static_cast<std::size_t>(reg.qubits())) {
        throw ConfigError("register has " + std::to_string(reg.qubits()) +
                          " qubits but " + std::to_string(parties.size()) +
                          " parties were named");
    }
    std::vector<QubitAssignment> assignments;
    assignments.reserve(parties.size());
    for (std::size_t k = 0; k < parties.size(); ++k) {
        assignments.push_back({static_cast<int>(k), parties[k]});
    }
    return assignments;
}

StateVector collective_decode(const StateVector& reg, const ProductState& announced) {
    return apply_diffusion(reg, expand_product(announced));
}

OutcomeLabel classify_outcome(std::uint64_t index, const Scenario& scenario,
                              const MarkedTagging& tagging) {
    if (index >= (std::uint64_t{1} << scenario.qubits)) {
        throw ConfigError("measured index " + std::to_string(index) +
                          " out of range for " + std::to_string(scenario.qubits) + " qubits");
    }
    if (const auto half = tagging.tag_of(index)) {
        return *half == Half::A ? OutcomeLabel::HalfA : OutcomeLabel::HalfB;
    }
    if (scenario.qubits == 2 && (index == 0 || index == 3)) {
        return OutcomeLabel::Correlated;
    }
    return OutcomeLabel::CheatSignal;
}

Session::Session(const Scenario& scenario, Rng& rng)
    : scenario_(scenario),
      rng_(rng),
      confirmed_(static_cast<std::size_t>(scenario.qubits), false),
      tagging_(encode_message(scenario.message_half_a, scenario.message_half_b,
                              scenario.qubits, scenario.marked)),
      register_(StateVector::basis_state(scenario.qubits, 0)) {
    scenario.validate();
}

void Session::require(Phase expected, const char* action) {
    if (phase_ != expected) {
        throw ProtocolOrderError(std::string(action) + " driven out of order");
    }
}

void Session::prepare() {
    require(Phase::Fresh, "prepare");
    register_ = dealer_prepare(scenario_);
    transcript_.append(EventKind::Prepared,
                       "qubits=" + std::to_string(scenario_.qubits) +
                           " scheme=" + std::string(scheme_name(scenario_.scheme)) +
                           " initial=" + word_name(scenario_.initial));
    transcript_.append(EventKind::OracleApplied, "marked=" + join_indices(scenario_.marked.indices()));
    phase_ = Phase::Prepared;
}

void Session::distribute_qubits() {
    require(Phase::Prepared, "distribute");
    // An intercepting adversary swaps the register here, in transit, for a
    // forgery built by the dealer's own procedure over a fake marked set.
    if (const auto* intercept = std::get_if<InterceptResend>(&scenario_.adversary)) {
        Scenario forged = scenario_;
        forged.adversary = Honest{};
        forged.marked = intercept->fake_marked
                            ? *intercept->fake_marked
                            : draw_marked_set(register_.dim(), scenario_.marked.size(), rng_);
        if (intercept->fake_initial) forged.initial = *intercept->fake_initial;
        register_ = dealer_prepare(forged);
    }
    std::vector<std::string> parties;
    parties.reserve(static_cast<std::size_t>(scenario_.qubits));
    for (int q = 0; q < scenario_.qubits; ++q) {
        parties.push_back("party" + std::to_string(q));
    }
    const auto assignments = distribute(register_, parties);
    std::string payload;
    for (const QubitAssignment& a : assignments) {
        if (!payload.empty()) payload += ',';
        payload += "q" + std::to_string(a.qubit) + ":" + a.party;
    }
    transcript_.append(EventKind::Distributed, payload);
    phase_ = Phase::Distributed;
}

void Session::confirm(int party) {
    require(Phase::Distributed, "confirm");
    if (party < 0 || party >= scenario_.qubits) {
        throw ConfigError("party index " + std::to_string(party) + " out of range");
    }
    if (confirmed_[static_cast<std::size_t>(party)]) {
        throw ProtocolOrderError("party " + std::to_string(party) + " already confirmed");
    }
    confirmed_[static_cast<std::size_t>(party)] = true;
    transcript_.append(EventKind::Confirmed, "party=party" + std::to_string(party));
}

void Session::announce() {
    require(Phase::Distributed, "announce");
    if (!std::all_of(confirmed_.begin(), confirmed_.end(), [](bool c) { return c; })) {
        throw ProtocolOrderError("announce before every party confirmed receipt");
    }
    transcript_.append(EventKind::Announced, "initial=" + word_name(scenario_.initial));
    phase_ = Phase::Announced;
}

void Session::decode() {
    require(Phase::Announced, "decode");
    std::string about = "announced";
    if (const auto* guess = std::get_if<GuessDiffusion>(&scenario_.adversary)) {
        const ProductState word =
            guess->guess ? *guess->guess : draw_word(scenario_.qubits, rng_);
        register_ = collective_decode(register_, word);
        about = "guess:" + word_name(word);
    } else if (const auto* capture = std::get_if<CaptureAll>(&scenario_.adversary)) {
        if (capture->policy == CaptureAll::Policy::GuessDiffusionThenMeasure) {
            const ProductState word =
                capture->guess ? *capture->guess : draw_word(scenario_.qubits, rng_);
            register_ = collective_decode(register_, word);
            about = "guess:" + word_name(word);
        } else {
            // Captured qubits are measured as encoded; no reflection happens.
            about = "none";
        }
    } else {
        register_ = collective_decode(register_, scenario_.initial);
    }
    transcript_.append(EventKind::Decoded, "about=" + about);
    phase_ = Phase::Decoded;
}

std::uint64_t Session::measure() {
    require(Phase::Decoded, "measure");
    outcome_ = sample_measurement(register_, rng_);
    transcript_.append(EventKind::Measured,
                       "index=" + std::to_string(outcome_) +
                           " bits=" + index_bits(outcome_, scenario_.qubits));
    phase_ = Phase::Measured;
    return outcome_;
}

OutcomeLabel Session::classify() {
    require(Phase::Measured, "classify");
    const OutcomeLabel label = classify_outcome(outcome_, scenario_, tagging_);
    transcript_.append(EventKind::Classified, "outcome=" + std::string(outcome_name(label)));
    phase_ = Phase::Done;
    return label;
}

SessionResult run_session(const Scenario& scenario) {
    scenario.validate();
    Rng rng(scenario.seed);
    SessionResult result;
    result.stats.trials = scenario.trials;
    for (std::uint64_t trial = 0; trial < scenario.trials; ++trial) {
        Session session(scenario, rng);
        session.prepare();
        session.distribute_qubits();
        for (int party = 0; party < scenario.qubits; ++party) {
            session.confirm(party);
        }
        session.announce();
        session.decode();
        session.measure();
        switch (session.classify()) {
        case OutcomeLabel::HalfA:       ++result.stats.half_a; break;
        case OutcomeLabel::HalfB:       ++result.stats.half_b; break;
        case OutcomeLabel::CheatSignal: ++result.stats.cheat_signal; break;
        case OutcomeLabel::Correlated:  ++result.stats.correlated; break;
        }
        if (trial == 0) {
            result.first_transcript = session.transcript();
        }
    }
    return result;
}

TransmissionPlan session_schedule(const Scenario& scenario, std::int64_t message_units) {
    scenario.validate();
    if (message_units < 0) {
        throw ConfigError("message_units: must be nonnegative");
    }
    Scenario honest = scenario;
    honest.adversary = Honest{};
    const StateVector final_state = collective_decode(dealer_prepare(honest), honest.initial);
    double success = 0.0;
    for (std::uint64_t index : honest.marked.indices()) {
        success += std::norm(final_state[index]);
    }
    int sets = 1;
    const double miss = 1.0 - success;
    double residual = miss;
    while (residual > 0.01) {
        if (++sets > 10000) {
            throw ConfigError("scenario recovers a marked state with probability " +
                              std::to_string(success) +
                              "; more than 10000 sets per unit would be needed");
        }
        residual *= miss;
    }
    return {success, sets, message_units, static_cast<std::int64_t>(sets) * message_units};
}

} // namespace gqss
