#ifndef WAVEMORSE_REPORT_IO_HPP
#define WAVEMORSE_REPORT_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace wavemorse {

// Experiment configuration shared by the CLI commands. Every output file
// embeds hash() and the seed so a run can be reproduced bit for bit.
struct ExperimentConfig {
    std::string command;
    std::string potential;        // grammar string, where applicable
    std::string problem = "stokes";
    int m = 0;                    // 0 = automatic truncation
    std::size_t grid = 0;         // 0 = automatic grid
    double tol = 1e-10;
    std::vector<double> alphas;
    std::vector<double> amplitudes;
    std::vector<double> steepness;
    std::uint64_t seed = 0x243F6A8885A308D3ull;
    std::string out;
    std::string input;
    std::string resume;

    void validate() const;             // throws config_error
    std::string canonical_string() const;
    std::uint64_t hash() const;        // FNV-1a of canonical_string()
    nlohmann::json stamp() const;      // {"config_hash", "seed"}
};

/// Parse "0.1,0.2,0.3" or "0.1:0.5:0.05" (start:stop:step, inclusive).
std::vector<double> parse_value_list(const std::string& text);

/// Create the parent directory of `path` if missing; returns true if it
/// had to be created.
bool ensure_parent_directory(const std::string& path);

/// Write a file atomically-ish (truncate + write + flush), throwing on I/O
/// failure.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace wavemorse

#endif
