#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gqss/protocol.hpp"

namespace gqss::cli {

/// Reads and validates a JSON scenario file. Malformed JSON is reported
/// with the source name and line; a bad field is reported by its name.
/// Throws ConfigError in both cases.
gqss::Scenario load_scenario_file(const std::string& path);

/// Same, from in-memory text; `source_name` labels diagnostics.
gqss::Scenario parse_scenario_text(const std::string& text, const std::string& source_name);

/// A marked-state entry: a decimal index, or a bit string whose length is
/// exactly `qubits` (qubit 0 first, so "0100" on 4 qubits is index 4).
std::uint64_t parse_index_spec(const std::string& spec, int qubits);

/// One letter word from letter names or short forms ("plus" or "+", ...).
gqss::ProductState parse_word(const std::vector<std::string>& letters,
                              const std::string& field);

} // namespace gqss::cli
