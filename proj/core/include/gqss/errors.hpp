#pragma once

#include <stdexcept>
#include <string>

namespace gqss {

/// Invalid configuration or argument: bad dimensions, out-of-range indices,
/// malformed scenarios. Maps to exit code 2 in the CLI.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A protocol phase was driven out of order (e.g. decode before announce).
class ProtocolOrderError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace gqss
