#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <string>

#include <CLI11.hpp>

#include "cab/analysis.hpp"
#include "cab/errors.hpp"
#include "cab/harness.hpp"

namespace {

constexpr const char* kVersion = "cabsim 0.1.0";

// Exit codes: 0 ok, 2 config/parameter error, 3 numeric error, 1 anything else.
constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

int run_command(const std::string& config_path, const std::string& out_dir, bool serial) {
    const cab::ExperimentConfig config = cab::load_config(config_path);
    const cab::QuadraticEnv env = cab::build_environment(config);
    const auto checkpoints = cab::effective_checkpoints(config);

    const auto traces = cab::run_experiment(
        config, env, serial ? cab::RunMode::serial : cab::RunMode::parallel);
    const cab::ExperimentStats stats = cab::summarize(traces, checkpoints);

    const std::filesystem::path out(out_dir);
    cab::emit_csv(traces, checkpoints, out / "traces.csv");
    cab::emit_summary(config, stats, out / "summary.txt");

    std::printf("trials = %llu, T = %llu\n",
                static_cast<unsigned long long>(config.trials),
                static_cast<unsigned long long>(config.horizon));
    std::printf("regret exponent = %.4f (stderr %.4f, %d points)\n", stats.fit.slope,
                stats.fit.stderr_slope, stats.fit.points_used);
    std::printf("mean final regret = %.6g\n", stats.mean_final_regret);
    std::printf("wrote %s and %s\n", (out / "traces.csv").c_str(),
                (out / "summary.txt").c_str());
    return kExitOk;
}

int lemma4_command(double alpha, double beta, double omega, double b1, std::uint64_t n) {
    double scale = 0.0;
    const bool holds = cab::decay_recursion_check(alpha, beta, omega, b1, n, &scale);
    std::printf("holds = %s\n", holds ? "true" : "false");
    std::printf("bound_scale = %.17g\n", scale);
    std::printf("n_max = %llu\n", static_cast<unsigned long long>(n));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"contextual continuum-armed bandit simulator"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    bool serial = false;
    auto* run = app.add_subcommand("run", "run an experiment described by a config file");
    run->add_option("--config", config_path, "experiment config file")->required();
    run->add_option("--out", out_dir, "output directory for traces.csv and summary.txt")
        ->required();
    run->add_flag("--serial", serial, "use the serial reference loop instead of OpenMP");

    double alpha = 0.0, beta = 0.0, omega = 0.0, b1 = 0.0;
    std::uint64_t n = 0;
    auto* lemma4 = app.add_subcommand(
        "lemma4", "iterate the decay recursion and verify the n^{-1/2} envelope");
    lemma4->add_option("--alpha", alpha, "contraction coefficient, in (0.5, 1)")->required();
    lemma4->add_option("--beta", beta, "sqrt cross-term coefficient, >= 0")->required();
    lemma4->add_option("--omega", omega, "additive tail coefficient, >= 0")->required();
    lemma4->add_option("--b1", b1, "initial value, >= 0")->required();
    lemma4->add_option("--n", n, "number of iterations")->required();

    auto* version = app.add_subcommand("version", "print the version string");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (run->parsed()) return run_command(config_path, out_dir, serial);
        if (lemma4->parsed()) return lemma4_command(alpha, beta, omega, b1, n);
        if (version->parsed()) {
            std::printf("%s\n", kVersion);
            return kExitOk;
        }
    } catch (const cab::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    } catch (const cab::DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    } catch (const cab::NumericError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitOther;
    }
    return kExitOther;
}
