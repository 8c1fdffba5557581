#include "cab/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <fstream>

#include "cab/baseline.hpp"
#include "cab/errors.hpp"
#include "cab/rng.hpp"
#include "cab/sha1.hpp"

namespace cab {

std::unique_ptr<Policy> make_policy(const ExperimentConfig& config,
                                    const QuadraticEnv& env) {
    const EnvConstants constants = env.constants();
    if (config.algorithm == Algorithm::kwsa_binning) {
        const int bins = config.bins_override
                             ? *config.bins_override
                             : choose_bins_per_axis(config.horizon, config.context_dim,
                                                    config.arm_dim, constants.alpha);
        const double gain = config.gain_override
                                ? *config.gain_override
                                : default_gain(constants.strong_concavity);
        return std::make_unique<KwsaBinningPolicy>(
            Partition(config.context_dim, bins), Box::unit_cube(config.arm_dim),
            StepSchedule(gain, config.probe_scale));
    }
    const GridChoice grid = choose_grid(config.horizon, config.context_dim, config.arm_dim);
    const int bins = config.bins_override ? *config.bins_override
                                          : grid.context_bins_per_axis;
    return std::make_unique<DiscretizedUcbPolicy>(Partition(config.context_dim, bins),
                                                  grid.arm_points_per_axis,
                                                  config.arm_dim);
}

RegretTrace run_trial(const ExperimentConfig& config, const QuadraticEnv& env,
                      std::uint64_t trial) {
    if (env.context_dim() != config.context_dim || env.arm_dim() != config.arm_dim)
        throw DomainError("run_trial: environment does not match the config dimensions");

    const auto checkpoints = effective_checkpoints(config);
    Rng rng(trial_seed(config.master_seed, trial));
    auto policy = make_policy(config, env);

    RegretTrace trace;
    trace.trial = trial;
    trace.cumulative_regret.reserve(checkpoints.size());

    std::vector<double> context;
    double cumulative = 0.0;
    std::size_t next_checkpoint = 0;
    for (std::uint64_t t = 1; t <= config.horizon; ++t) {
        sample_context(config.context_dim, rng, context);
        const auto arm = policy->act(context);
        const double payoff = env.sample_payoff(context, arm, rng);
        cumulative += env.instant_regret(context, arm);
        policy->update(context, payoff);
        if (next_checkpoint < checkpoints.size() && t == checkpoints[next_checkpoint]) {
            trace.cumulative_regret.push_back(cumulative);
            ++next_checkpoint;
        }
    }

    trace.bin_visits = policy->visit_counts();
    trace.final_iterates = policy->final_iterates();
    return trace;
}

std::vector<RegretTrace> run_experiment(const ExperimentConfig& config,
                                        const QuadraticEnv& env, RunMode mode) {
    const auto trials = static_cast<std::int64_t>(config.trials);
    std::vector<RegretTrace> traces(config.trials);

    if (mode == RunMode::serial) {
        for (std::int64_t i = 0; i < trials; ++i)
            traces[static_cast<std::size_t>(i)] =
                run_trial(config, env, static_cast<std::uint64_t>(i));
        return traces;
    }

    // Trials share only the immutable config and environment; exceptions
    // must not unwind across the parallel region.
    std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < trials; ++i) {
        try {
            traces[static_cast<std::size_t>(i)] =
                run_trial(config, env, static_cast<std::uint64_t>(i));
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return traces;
}

SlopeFit estimate_exponent(const std::vector<RegretTrace>& traces,
                           std::span<const std::uint64_t> checkpoints) {
    if (traces.empty()) throw NumericError("estimate_exponent: no traces");
    const std::size_t count = checkpoints.size();
    for (const auto& trace : traces)
        if (trace.cumulative_regret.size() != count)
            throw DomainError("estimate_exponent: trace/checkpoint length mismatch");

    const std::size_t use = std::min<std::size_t>(6, count);
    const std::size_t first = count - use;
    std::vector<double> t(use), mean(use, 0.0);
    for (std::size_t j = 0; j < use; ++j) {
        t[j] = static_cast<double>(checkpoints[first + j]);
        for (const auto& trace : traces) mean[j] += trace.cumulative_regret[first + j];
        mean[j] /= static_cast<double>(traces.size());
    }
    return fit_log_log(t, mean);
}

ExperimentStats summarize(const std::vector<RegretTrace>& traces,
                          std::span<const std::uint64_t> checkpoints) {
    ExperimentStats stats;
    stats.fit = estimate_exponent(traces, checkpoints);
    double total = 0.0;
    for (const auto& trace : traces) total += trace.cumulative_regret.back();
    stats.mean_final_regret = total / static_cast<double>(traces.size());
    return stats;
}

namespace {

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const auto parent = path.parent_path();
    std::error_code ec;
    if (!parent.empty()) std::filesystem::create_directories(parent, ec);
    const std::filesystem::path temp = path.string() + ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + temp.string() + " for writing");
        out << content;
        if (!out) throw IoError("write failed for " + temp.string());
    }
    std::filesystem::rename(temp, path, ec);
    if (ec) throw IoError("rename to " + path.string() + " failed: " + ec.message());
}

std::string format_double(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

}  // namespace

void emit_csv(const std::vector<RegretTrace>& traces,
              std::span<const std::uint64_t> checkpoints,
              const std::filesystem::path& path) {
    std::string out = "trial,checkpoint_t,cumulative_regret\n";
    for (const auto& trace : traces) {
        if (trace.cumulative_regret.size() != checkpoints.size())
            throw DomainError("emit_csv: trace/checkpoint length mismatch");
        for (std::size_t j = 0; j < checkpoints.size(); ++j) {
            out += std::to_string(trace.trial);
            out += ',';
            out += std::to_string(checkpoints[j]);
            out += ',';
            out += format_double(trace.cumulative_regret[j]);
            out += '\n';
        }
    }
    atomic_write(path, out);
}

void emit_summary(const ExperimentConfig& config, const ExperimentStats& stats,
                  const std::filesystem::path& path) {
    const std::string echo = canonical_config_text(config);
    std::string out;
    out += "slope = " + format_double(stats.fit.slope) + "\n";
    out += "slope_stderr = " + format_double(stats.fit.stderr_slope) + "\n";
    out += "fit_points = " + std::to_string(stats.fit.points_used) + "\n";
    out += "mean_final_regret = " + format_double(stats.mean_final_regret) + "\n";
    out += "config_sha1 = " + git_blob_sha1(echo) + "\n";
    out += "--- config ---\n";
    out += echo;
    atomic_write(path, out);
}

}  // namespace cab
