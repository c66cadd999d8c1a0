#include "scenario_io.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace gqss::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw ConfigError(field + ": " + what);
}

std::uint64_t get_uint(const json& j, const std::string& field) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        fail(field, "must be a nonnegative integer");
    }
    return j.get<std::uint64_t>();
}

std::string get_string(const json& j, const std::string& field) {
    if (!j.is_string()) fail(field, "must be a string");
    return j.get<std::string>();
}

int get_int(const json& j, const std::string& field) {
    if (!j.is_number_integer() && !j.is_number_unsigned()) {
        fail(field, "must be an integer");
    }
    return j.get<int>();
}

std::vector<std::string> get_string_list(const json& j, const std::string& field) {
    if (!j.is_array()) fail(field, "must be an array");
    std::vector<std::string> out;
    for (const auto& item : j) {
        if (!item.is_string()) fail(field, "entries must be strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

MarkedSet get_marked(const json& j, const std::string& field, int qubits) {
    if (!j.is_array() || j.empty()) fail(field, "must be a non-empty array");
    std::vector<std::uint64_t> indices;
    for (const auto& item : j) {
        if (item.is_string()) {
            indices.push_back(parse_index_spec(item.get<std::string>(), qubits));
        } else if (item.is_number_unsigned() ||
                   (item.is_number_integer() && item.get<std::int64_t>() >= 0)) {
            indices.push_back(item.get<std::uint64_t>());
        } else {
            fail(field, "entries must be indices or bit strings");
        }
    }
    try {
        return MarkedSet(std::move(indices));
    } catch (const ConfigError& e) {
        fail(field, e.what());
    }
}

CheatStrategy get_adversary(const json& j, int qubits) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        if (name == "honest") return Honest{};
        fail("adversary", "only \"honest\" may be given as a bare string, got \"" + name +
                              "\"; use an object with a \"strategy\" key otherwise");
    }
    if (!j.is_object() || !j.contains("strategy")) {
        fail("adversary", "must be \"honest\" or an object with a \"strategy\" key");
    }
    const std::string name = get_string(j["strategy"], "adversary.strategy");
    for (const auto& item : j.items()) {
        const std::string& key = item.key();
        if (key != "strategy" && key != "guess" && key != "marked" && key != "initial" &&
            key != "policy") {
            fail("adversary." + key, "unknown key");
        }
    }
    if (name == "honest") {
        return Honest{};
    }
    if (name == "guess-diffusion") {
        GuessDiffusion strategy;
        if (j.contains("guess")) {
            strategy.guess = parse_word(get_string_list(j["guess"], "adversary.guess"),
                                        "adversary.guess");
        }
        return strategy;
    }
    if (name == "intercept-resend") {
        InterceptResend strategy;
        if (j.contains("marked")) {
            strategy.fake_marked = get_marked(j["marked"], "adversary.marked", qubits);
        }
        if (j.contains("initial")) {
            strategy.fake_initial = parse_word(
                get_string_list(j["initial"], "adversary.initial"), "adversary.initial");
        }
        return strategy;
    }
    if (name == "capture-all") {
        CaptureAll strategy;
        if (j.contains("policy")) {
            const std::string policy = get_string(j["policy"], "adversary.policy");
            if (policy == "measure-immediately") {
                strategy.policy = CaptureAll::Policy::MeasureImmediately;
            } else if (policy == "guess-diffusion-then-measure") {
                strategy.policy = CaptureAll::Policy::GuessDiffusionThenMeasure;
            } else {
                fail("adversary.policy", "unknown policy \"" + policy + "\"");
            }
        }
        if (j.contains("guess")) {
            strategy.guess = parse_word(get_string_list(j["guess"], "adversary.guess"),
                                        "adversary.guess");
        }
        return strategy;
    }
    fail("adversary.strategy", "unknown strategy \"" + name + "\"");
}

} // namespace

std::uint64_t parse_index_spec(const std::string& spec, int qubits) {
    if (spec.empty()) {
        throw ConfigError("marked entry is empty");
    }
    const bool binary = spec.size() == static_cast<std::size_t>(qubits) &&
                        std::all_of(spec.begin(), spec.end(),
                                    [](char c) { return c == '0' || c == '1'; });
    std::uint64_t value = 0;
    if (binary) {
        for (char c : spec) value = (value << 1) | static_cast<std::uint64_t>(c - '0');
    } else {
        if (!std::all_of(spec.begin(), spec.end(),
                         [](char c) { return c >= '0' && c <= '9'; })) {
            throw ConfigError("marked entry '" + spec +
                              "' is neither a decimal index nor a " +
                              std::to_string(qubits) + "-bit string");
        }
        try {
            value = std::stoull(spec);
        } catch (const std::exception&) {
            throw ConfigError("marked entry '" + spec + "' is out of range");
        }
    }
    if (value >= (std::uint64_t{1} << qubits)) {
        throw ConfigError("marked entry '" + spec + "' is out of range for " +
                          std::to_string(qubits) + " qubits");
    }
    return value;
}

ProductState parse_word(const std::vector<std::string>& letters, const std::string& field) {
    std::vector<Letter> parsed;
    parsed.reserve(letters.size());
    for (const std::string& name : letters) {
        const auto letter = parse_letter(name);
        if (!letter) {
            fail(field, "unknown letter \"" + name +
                            "\"; use plus, minus, plus_i, minus_i or +, -, +i, -i");
        }
        parsed.push_back(*letter);
    }
    if (parsed.empty()) fail(field, "must name at least one letter");
    return ProductState(std::move(parsed));
}

Scenario parse_scenario_text(const std::string& text, const std::string& source_name) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const std::size_t line =
            1 + static_cast<std::size_t>(
                    std::count(text.begin(),
                               text.begin() + std::min(text.size(), e.byte), '\n'));
        throw ConfigError(source_name + ":" + std::to_string(line) + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError(source_name + ": top level must be a JSON object");
    }

    static const char* known[] = {"qubits",  "initial",  "marked", "scheme",
                                  "message", "adversary", "trials", "seed",
                                  "iterations_before_send"};
    for (const auto& item : doc.items()) {
        const std::string& key = item.key();
        if (std::find_if(std::begin(known), std::end(known),
                         [&](const char* k) { return key == k; }) == std::end(known)) {
            fail(key, "unknown key");
        }
    }
    for (const char* required : {"qubits", "initial", "marked"}) {
        if (!doc.contains(required)) fail(required, "missing");
    }

    Scenario scenario;
    scenario.qubits = get_int(doc["qubits"], "qubits");
    if (scenario.qubits < 1 || scenario.qubits > kMaxQubits) {
        fail("qubits", "must be between 1 and " + std::to_string(kMaxQubits));
    }
    scenario.initial = parse_word(get_string_list(doc["initial"], "initial"), "initial");
    scenario.marked = get_marked(doc["marked"], "marked", scenario.qubits);

    if (doc.contains("scheme")) {
        const std::string scheme = get_string(doc["scheme"], "scheme");
        if (scheme == "multi-marked") {
            scenario.scheme = Scheme::MultiMarked;
        } else if (scheme == "single-marked") {
            scenario.scheme = Scheme::SingleMarked;
        } else {
            fail("scheme", "must be \"multi-marked\" or \"single-marked\"");
        }
    }
    if (doc.contains("message")) {
        const json& message = doc["message"];
        if (!message.is_object()) fail("message", "must be an object");
        for (const auto& item : message.items()) {
            const std::string& key = item.key();
            if (key != "half_a" && key != "half_b") fail("message." + key, "unknown key");
        }
        if (message.contains("half_a")) {
            scenario.message_half_a = get_string(message["half_a"], "message.half_a");
        }
        if (message.contains("half_b")) {
            scenario.message_half_b = get_string(message["half_b"], "message.half_b");
        }
    }
    if (doc.contains("adversary")) {
        scenario.adversary = get_adversary(doc["adversary"], scenario.qubits);
    }
    if (doc.contains("trials")) {
        scenario.trials = get_uint(doc["trials"], "trials");
    }
    if (doc.contains("seed")) {
        scenario.seed = get_uint(doc["seed"], "seed");
    }
    if (doc.contains("iterations_before_send")) {
        scenario.iterations_before_send =
            get_int(doc["iterations_before_send"], "iterations_before_send");
    }

    try {
        scenario.validate();
    } catch (const ConfigError& e) {
        throw ConfigError(source_name + ": " + e.what());
    }
    return scenario;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read scenario file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario_text(buffer.str(), path);
}

} // namespace gqss::cli
