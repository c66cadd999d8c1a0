#include "gqss/adversary.hpp"

#include <algorithm>
#include <cmath>

namespace gqss {

namespace {

constexpr int kMaxFamilyQubits = 8;
constexpr std::uint64_t kMaxFamilyPlacements = 250000;

// Exact binomial via 128-bit intermediates. m > n counts zero subsets;
// nullopt means the exact value does not fit in 64 bits.
std::optional<std::uint64_t> checked_binomial(std::uint64_t n, std::uint64_t m) {
    if (m > n) return std::uint64_t{0};
    if (m > n - m) m = n - m;
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= m; ++i) {
        result = result * (n - m + i) / i;
        if (result > UINT64_MAX) return std::nullopt;
    }
    return static_cast<std::uint64_t>(result);
}

void accumulate_distribution(const StateVector& state, std::vector<double>& sums) {
    for (std::uint64_t index = 0; index < state.dim(); ++index) {
        sums[index] += std::norm(state[index]);
    }
}

// Advances `combo` to the next size-m subset of [0, n) in lexicographic
// order; returns false past the last one.
bool next_combination(std::vector<std::uint64_t>& combo, std::uint64_t n) {
    const std::size_t m = combo.size();
    std::size_t i = m;
    while (i-- > 0) {
        if (combo[i] + (m - i) < n) {
            ++combo[i];
            for (std::size_t j = i + 1; j < m; ++j) combo[j] = combo[j - 1] + 1;
            return true;
        }
    }
    return false;
}

ProductState word_at(int qubits, std::uint64_t code) {
    std::vector<Letter> letters(static_cast<std::size_t>(qubits));
    for (int q = 0; q < qubits; ++q) {
        letters[static_cast<std::size_t>(q)] =
            static_cast<Letter>((code >> (2 * (qubits - 1 - q))) & 3u);
    }
    return ProductState(std::move(letters));
}

// Exact final measurement distribution under one strategy; families are
// averaged member by member.
std::vector<double> final_distribution(const Scenario& scenario, const CheatStrategy& strategy) {
    const StateVector encoded = dealer_prepare(scenario);
    const std::uint64_t dim = encoded.dim();
    std::vector<double> dist(dim, 0.0);

    if (std::holds_alternative<Honest>(strategy)) {
        return measure_distribution(collective_decode(encoded, scenario.initial));
    }

    if (const auto* capture = std::get_if<CaptureAll>(&strategy);
        capture && capture->policy == CaptureAll::Policy::MeasureImmediately) {
        return measure_distribution(encoded);
    }

    // The two remaining guess-driven cases share one shape.
    const std::optional<ProductState>* guess = nullptr;
    if (const auto* gd = std::get_if<GuessDiffusion>(&strategy)) guess = &gd->guess;
    if (const auto* capture = std::get_if<CaptureAll>(&strategy)) guess = &capture->guess;
    if (guess != nullptr) {
        if (*guess) {
            return measure_distribution(collective_decode(encoded, **guess));
        }
        if (scenario.qubits > kMaxFamilyQubits) {
            throw ConfigError("guess family enumeration is limited to " +
                              std::to_string(kMaxFamilyQubits) + " qubits");
        }
        const std::uint64_t members = guess_space_size(scenario.qubits);
        for (std::uint64_t code = 0; code < members; ++code) {
            accumulate_distribution(
                collective_decode(encoded, word_at(scenario.qubits, code)), dist);
        }
        for (double& p : dist) p /= static_cast<double>(members);
        return dist;
    }

    const auto& intercept = std::get<InterceptResend>(strategy);
    Scenario forged = scenario;
    forged.adversary = Honest{};
    if (intercept.fake_initial) forged.initial = *intercept.fake_initial;
    if (intercept.fake_marked) {
        forged.marked = *intercept.fake_marked;
        return measure_distribution(
            collective_decode(dealer_prepare(forged), scenario.initial));
    }
    const std::uint64_t members =
        checked_binomial(dim, scenario.marked.size()).value_or(UINT64_MAX);
    if (members > kMaxFamilyPlacements) {
        throw ConfigError("marked-set family enumeration is limited to " +
                          std::to_string(kMaxFamilyPlacements) + " placements");
    }
    std::vector<std::uint64_t> combo(scenario.marked.size());
    for (std::size_t i = 0; i < combo.size(); ++i) combo[i] = i;
    do {
        forged.marked = MarkedSet(combo);
        accumulate_distribution(
            collective_decode(dealer_prepare(forged), scenario.initial), dist);
    } while (next_combination(combo, dim));
    for (double& p : dist) p /= static_cast<double>(members);
    return dist;
}

} // namespace

std::uint64_t guess_space_size(int qubits) {
    if (qubits < 1 || qubits > kMaxQubits) {
        throw ConfigError("qubit count out of range: " + std::to_string(qubits));
    }
    return std::uint64_t{1} << (2 * qubits);
}

std::uint64_t marked_set_space(std::uint64_t space_size, std::uint64_t marked_count) {
    if (marked_count > space_size) {
        throw ConfigError("marked count " + std::to_string(marked_count) +
                          " exceeds the space size " + std::to_string(space_size));
    }
    const auto result = checked_binomial(space_size, marked_count);
    if (!result) {
        throw ConfigError("binomial(" + std::to_string(space_size) + ", " +
                          std::to_string(marked_count) + ") does not fit in 64 bits");
    }
    return *result;
}

std::vector<std::uint64_t> overlap_census(std::uint64_t space_size, std::uint64_t marked_count) {
    if (marked_count == 0 || marked_count > space_size) {
        throw ConfigError("marked count must be between 1 and the space size");
    }
    std::vector<std::uint64_t> counts(marked_count + 1);
    for (std::uint64_t k = 0; k <= marked_count; ++k) {
        const auto ways_marked = checked_binomial(marked_count, k);
        const auto ways_rest =
            checked_binomial(space_size - marked_count, marked_count - k);
        if (!ways_marked || !ways_rest) {
            throw ConfigError("overlap census does not fit in 64 bits");
        }
        const unsigned __int128 product =
            static_cast<unsigned __int128>(*ways_marked) * *ways_rest;
        if (product > UINT64_MAX) {
            throw ConfigError("overlap census does not fit in 64 bits");
        }
        counts[k] = static_cast<std::uint64_t>(product);
    }
    return counts;
}

DetectionReport exact_detection_probability(const Scenario& scenario,
                                            const CheatStrategy& strategy) {
    Scenario run = scenario;
    run.adversary = strategy;
    run.validate();

    const std::vector<double> dist = final_distribution(run, strategy);
    double undetected = 0.0;
    for (std::uint64_t index : run.marked.indices()) {
        undetected += dist[index];
    }
    double detection = 0.0;
    for (std::uint64_t index = 0; index < dist.size(); ++index) {
        if (!run.marked.contains(index)) detection += dist[index];
    }

    const SessionResult sampled = run_session(run);

    DetectionReport report;
    report.strategy = strategy_name(strategy);
    report.exact_detection = detection;
    report.exact_undetected = undetected;
    report.monte_carlo_detection =
        static_cast<double>(sampled.stats.cheat_signal + sampled.stats.correlated) /
        static_cast<double>(sampled.stats.trials);
    report.monte_carlo_trials = sampled.stats.trials;
    report.monte_carlo_cheat_signals = sampled.stats.cheat_signal;
    report.guess_space = guess_space_size(run.qubits);
    report.marked_space =
        checked_binomial(std::uint64_t{1} << run.qubits, run.marked.size()).value_or(0);
    return report;
}

DetectionReport intercept_resend_report(const Scenario& scenario, const MarkedSet& fake) {
    return exact_detection_probability(scenario,
                                       InterceptResend{fake, std::nullopt});
}

const std::vector<ProductState>& table1_words() {
    using enum Letter;
    static const std::vector<ProductState> words = {
        ProductState({Plus, Plus, Plus, Plus}),
        ProductState({Plus, Minus, Plus, Minus}),
        ProductState({Minus, Minus, Plus, Plus}),
        ProductState({Minus, Minus, Minus, Minus}),
        ProductState({PlusI, PlusI, PlusI, PlusI}),
        ProductState({MinusI, MinusI, MinusI, MinusI}),
        ProductState({Plus, Plus, PlusI, PlusI}),
        ProductState({MinusI, PlusI, MinusI, PlusI}),
        ProductState({Minus, Minus, MinusI, MinusI}),
        ProductState({Plus, Minus, PlusI, MinusI}),
    };
    return words;
}

std::vector<Table1Row> table1_report(const MarkedSet& marked) {
    if (marked.size() != 4) {
        throw ConfigError("the survey encodes 4 marked states, got " +
                          std::to_string(marked.size()));
    }
    const ProductState prepared(std::vector<Letter>(4, Letter::Plus));
    const StateVector encoded = apply_oracle(expand_product(prepared), marked);

    std::vector<Table1Row> rows;
    rows.reserve(table1_words().size());
    int index = 0;
    for (const ProductState& word : table1_words()) {
        Table1Row row;
        row.row = ++index;
        row.guess = word;
        row.decoded = collective_decode(encoded, word);
        const Amplitude overlap = inner_product(expand_product(word), encoded);
        row.reflected = std::abs(overlap) < 1e-12;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace gqss
