#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cab/environment.hpp"

namespace cab {

enum class Algorithm { kwsa_binning, discretized_ucb };

const char* algorithm_name(Algorithm algorithm);

/// One experiment: an environment, an algorithm, a horizon, and how many
/// independently seeded trials to run over it.
struct ExperimentConfig {
    int context_dim = 0;                     // experiment.d_x
    int arm_dim = 1;                         // experiment.d_y
    std::uint64_t horizon = 1000;            // experiment.T
    std::uint64_t trials = 1;                // experiment.trials
    std::uint64_t master_seed = 0;           // experiment.master_seed
    Algorithm algorithm = Algorithm::kwsa_binning;
    std::optional<int> bins_override;        // experiment.K_override
    std::optional<double> gain_override;     // experiment.a_override
    double probe_scale = 0.2;                // experiment.delta
    std::vector<std::uint64_t> checkpoints;  // empty = geometric default
    QuadraticEnvSpec env;                    // env.*, dims filled from the above
};

/// Geometric checkpoint grid ceil(T^(k/10)), k = 1..10, deduplicated;
/// the last checkpoint is always exactly T.
std::vector<std::uint64_t> default_checkpoints(std::uint64_t horizon);

/// The configured checkpoints, or the geometric default when none were given.
std::vector<std::uint64_t> effective_checkpoints(const ExperimentConfig& config);

/// Parse the plain-text `section.key = value` format. `#` starts a
/// comment. Unknown keys, malformed values, and invariant violations
/// (horizon < 1, checkpoints not strictly increasing or not ending at T,
/// ...) throw ConfigError.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Canonical serialization: every key in a fixed order with normalized
/// number formatting. Parsing it reproduces the config; it is also the
/// content that gets hashed into the summary.
std::string canonical_config_text(const ExperimentConfig& config);

/// Environment described by the env.* block.
QuadraticEnv build_environment(const ExperimentConfig& config);

}  // namespace cab
