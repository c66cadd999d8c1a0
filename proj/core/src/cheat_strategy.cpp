#include "gqss/cheat_strategy.hpp"

namespace gqss {

std::string strategy_name(const CheatStrategy& strategy) {
    struct Visitor {
        std::string operator()(const Honest&) const { return "honest"; }
        std::string operator()(const GuessDiffusion&) const { return "guess-diffusion"; }
        std::string operator()(const InterceptResend&) const { return "intercept-resend"; }
        std::string operator()(const CaptureAll&) const { return "capture-all"; }
    };
    return std::visit(Visitor{}, strategy);
}

} // namespace gqss
