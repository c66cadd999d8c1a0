#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "records.hpp"
#include "scenario_io.hpp"

namespace gqss::cli {

/// Flags every subcommand honors. A set seed overrides the scenario's.
struct GlobalOptions {
    Format format = Format::Csv;
    std::optional<std::string> out_path; // stdout when empty
    std::optional<std::uint64_t> seed;
};

struct GroverOptions {
    int qubits = 0;
    std::vector<std::string> marked; // indices or bit strings
    int iterations = 1;
    bool trace = false; // add unmarked amplitudes and per-round simulation deviation
};

struct SweepOptions {
    int samples = 100;
};

struct Table2Options {
    bool extended = false; // every cell, not just the reference grid
};

struct Table1Options {
    std::vector<std::string> marked; // empty: the survey default 0001,0011,0101,0111
};

struct ProtocolOptions {
    std::string scenario_path;
    std::optional<std::uint64_t> trials;
    std::string transcript_path = "transcript.tsv";
};

struct CheatOptions {
    std::string scenario_path;
    std::optional<std::string> strategy; // overrides the scenario's adversary
    std::vector<std::string> guess;
    std::vector<std::string> fake_marked;
    std::vector<std::string> fake_initial;
    std::optional<std::string> policy;
    std::optional<std::uint64_t> trials;
};

int cmd_grover(const GroverOptions& options, const GlobalOptions& global);
int cmd_sweep(const SweepOptions& options, const GlobalOptions& global);
int cmd_table2(const Table2Options& options, const GlobalOptions& global);
int cmd_table1(const Table1Options& options, const GlobalOptions& global);
int cmd_protocol(const ProtocolOptions& options, const GlobalOptions& global);
int cmd_cheat(const CheatOptions& options, const GlobalOptions& global);

} // namespace gqss::cli
