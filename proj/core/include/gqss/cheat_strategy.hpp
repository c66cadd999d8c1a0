#pragma once

#include <optional>
#include <string>
#include <variant>

#include "gqss/statevec.hpp"

namespace gqss {

/// No interference; receivers follow the protocol.
struct Honest {
    bool operator==(const Honest&) const = default;
};

/// A receiver decodes about a guessed preparation instead of the announced
/// one. An empty guess means the uniform family: a fresh guess is drawn
/// uniformly from all 4^n letter words per trial, and exact reports average
/// over the whole family.
struct GuessDiffusion {
    std::optional<ProductState> guess;

    bool operator==(const GuessDiffusion&) const = default;
};

/// The register is replaced in transit with a freshly prepared one carrying
/// a fake marked set. An empty fake_marked means the uniform family over all
/// same-size marked sets; an empty fake_initial means the dealer's announced
/// preparation is reused.
struct InterceptResend {
    std::optional<MarkedSet> fake_marked;
    std::optional<ProductState> fake_initial;

    bool operator==(const InterceptResend&) const = default;
};

/// Every qubit is captured before distribution.
struct CaptureAll {
    enum class Policy {
        MeasureImmediately,        // measure the encoded register as-is
        GuessDiffusionThenMeasure, // decode about a guess first
    };

    Policy policy = Policy::MeasureImmediately;
    std::optional<ProductState> guess; // only for GuessDiffusionThenMeasure

    bool operator==(const CaptureAll&) const = default;
};

using CheatStrategy = std::variant<Honest, GuessDiffusion, InterceptResend, CaptureAll>;

inline bool is_honest(const CheatStrategy& strategy) {
    return std::holds_alternative<Honest>(strategy);
}

/// Short label for reports: "honest", "guess-diffusion", "intercept-resend",
/// "capture-all".
std::string strategy_name(const CheatStrategy& strategy);

} // namespace gqss
