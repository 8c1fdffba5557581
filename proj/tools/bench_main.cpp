// Benchmark of the trial loop: serial reference vs the OpenMP path.
// Both must produce bit-identical traces; the tool reports times,
// speedup, and the identity check.

#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "cab/harness.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool identical(const std::vector<cab::RegretTrace>& a,
               const std::vector<cab::RegretTrace>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].trial != b[i].trial) return false;
        if (a[i].cumulative_regret != b[i].cumulative_regret) return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trial-loop benchmark: serial reference vs OpenMP"};
    std::uint64_t horizon = 200000;
    std::uint64_t trials = 16;
    int d_x = 1, d_y = 2;
    app.add_option("--T", horizon, "epochs per trial");
    app.add_option("--trials", trials, "number of trials");
    app.add_option("--d_x", d_x, "context dimension");
    app.add_option("--d_y", d_y, "arm dimension");
    CLI11_PARSE(app, argc, argv);

    cab::ExperimentConfig config;
    config.context_dim = d_x;
    config.arm_dim = d_y;
    config.horizon = horizon;
    config.trials = trials;
    config.master_seed = 20240901;
    config.env.context_dim = d_x;
    config.env.arm_dim = d_y;
    config.env.peak = 1.0;
    config.env.curvature.assign(d_y, 1.0);
    config.env.center.assign(d_y, 0.5);
    config.env.amplitude.assign(d_y, d_x > 0 ? 0.25 : 0.0);
    config.env.noise_sigma = 0.1;
    config.env.margin = 0.05;
    const cab::QuadraticEnv env = cab::build_environment(config);

#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: not enabled in this build\n");
#endif
    std::printf("workload: %llu trials x %llu epochs (d_x=%d, d_y=%d)\n",
                static_cast<unsigned long long>(trials),
                static_cast<unsigned long long>(horizon), d_x, d_y);

    auto start = Clock::now();
    const auto serial = cab::run_experiment(config, env, cab::RunMode::serial);
    const double t_serial = seconds_since(start);
    std::printf("serial reference: %.3f s (%.1f Mepochs/s)\n", t_serial,
                static_cast<double>(horizon * trials) / t_serial / 1e6);

    start = Clock::now();
    const auto parallel = cab::run_experiment(config, env, cab::RunMode::parallel);
    const double t_parallel = seconds_since(start);
    std::printf("openmp parallel:  %.3f s (%.1f Mepochs/s)\n", t_parallel,
                static_cast<double>(horizon * trials) / t_parallel / 1e6);

    std::printf("speedup: %.2fx\n", t_serial / t_parallel);
    const bool same = identical(serial, parallel);
    std::printf("traces identical: %s\n", same ? "yes" : "NO");
    return same ? 0 : 1;
}
