#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <vector>

#include "cab/analysis.hpp"
#include "cab/config.hpp"
#include "cab/policy.hpp"

namespace cab {

/// Everything one trial produced: cumulative pseudo-regret at each
/// checkpoint (nondecreasing, nonnegative), per-bin visit counts, and
/// the final per-bin learned arms.
struct RegretTrace {
    std::uint64_t trial = 0;
    std::vector<double> cumulative_regret;
    std::vector<BinVisit> bin_visits;
    std::vector<BinIterate> final_iterates;
};

/// Policy instance described by the config for the given environment.
std::unique_ptr<Policy> make_policy(const ExperimentConfig& config,
                                    const QuadraticEnv& env);

/// One seeded trial: loop t = 1..T, sample a context, act, sample the
/// payoff, update, and accumulate the mean-payoff regret. Seeded
/// deterministically from (master_seed, trial) via trial_seed(), so
/// identical inputs give bit-identical traces.
RegretTrace run_trial(const ExperimentConfig& config, const QuadraticEnv& env,
                      std::uint64_t trial);

enum class RunMode { serial, parallel };

/// All trials of the experiment. `parallel` distributes trials over
/// OpenMP threads; `serial` is the reference loop. Both return the exact
/// same traces in trial order.
std::vector<RegretTrace> run_experiment(const ExperimentConfig& config,
                                        const QuadraticEnv& env,
                                        RunMode mode = RunMode::parallel);

/// Regret growth exponent: OLS of log mean-regret against log t over the
/// last (up to) 6 checkpoints, zero-regret checkpoints dropped. Throws
/// NumericError when fewer than 3 usable points remain.
SlopeFit estimate_exponent(const std::vector<RegretTrace>& traces,
                           std::span<const std::uint64_t> checkpoints);

struct ExperimentStats {
    SlopeFit fit;
    double mean_final_regret = 0.0;
};

ExperimentStats summarize(const std::vector<RegretTrace>& traces,
                          std::span<const std::uint64_t> checkpoints);

/// CSV with columns trial,checkpoint_t,cumulative_regret; regret printed
/// with round-trip (17 significant digit) precision. Written to a
/// temporary file and renamed into place.
void emit_csv(const std::vector<RegretTrace>& traces,
              std::span<const std::uint64_t> checkpoints,
              const std::filesystem::path& path);

/// Key-value summary: fit results, mean final regret, a canonical echo
/// of the config, and the config's git-style content hash.
void emit_summary(const ExperimentConfig& config, const ExperimentStats& stats,
                  const std::filesystem::path& path);

}  // namespace cab
