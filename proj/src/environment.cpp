#include "cab/environment.hpp"

#include <algorithm>
#include <cmath>

#include "cab/errors.hpp"
#include "cab/quadrature.hpp"

namespace cab {

namespace {

constexpr double kContextHolderFloor = 1e-12;

void check_unit_cube(std::span<const double> v, const char* what) {
    for (double c : v)
        if (!(c >= 0.0 && c <= 1.0)) throw DomainError(std::string(what) + " outside [0,1]");
}

}  // namespace

QuadraticEnv::QuadraticEnv(QuadraticEnvSpec spec) : spec_(std::move(spec)) {
    const int d_y = spec_.arm_dim;
    if (d_y < 1) throw DomainError("env: arm_dim must be >= 1");
    if (spec_.context_dim < 0) throw DomainError("env: context_dim must be >= 0");
    const auto expect = static_cast<std::size_t>(d_y);
    if (spec_.curvature.size() != expect || spec_.center.size() != expect ||
        spec_.amplitude.size() != expect)
        throw DomainError("env: curvature/center/amplitude must have arm_dim entries");
    for (double q : spec_.curvature)
        if (!(q > 0.0)) throw DomainError("env: curvatures must be positive");
    if (!(spec_.alpha > 0.0 && spec_.alpha <= 1.0))
        throw DomainError("env: alpha must lie in (0,1]");
    if (!(spec_.margin > 0.0 && spec_.margin < 0.5))
        throw DomainError("env: margin must lie in (0,0.5)");
    if (spec_.noise_sigma < 0.0) throw DomainError("env: noise_sigma must be >= 0");

    // The optimum must stay inside [margin, 1-margin] for every context.
    // The feature ranges over [0,1] on each axis.
    for (int i = 0; i < d_y; ++i) {
        const double a = (spec_.context_dim > 0) ? spec_.amplitude[i] : 0.0;
        const double lo = spec_.center[i] + std::min(0.0, a);
        const double hi = spec_.center[i] + std::max(0.0, a);
        if (lo < spec_.margin || hi > 1.0 - spec_.margin)
            throw DomainError("env: optimum leaves [margin, 1-margin] for some context");
    }

    double q_min = spec_.curvature[0];
    double q_max = spec_.curvature[0];
    double holder = 0.0;
    for (int i = 0; i < d_y; ++i) {
        q_min = std::min(q_min, spec_.curvature[i]);
        q_max = std::max(q_max, spec_.curvature[i]);
        if (spec_.context_dim > 0)
            holder += spec_.curvature[i] * std::abs(spec_.amplitude[i]);
    }
    holder *= 1.0 - spec_.margin;

    constants_.strong_concavity = q_min;
    constants_.gradient_lipschitz = q_max;
    constants_.context_holder = std::max(holder, kContextHolderFloor);
    constants_.payoff_lipschitz = q_max * std::sqrt(static_cast<double>(d_y));
    const double sup_abs = std::abs(spec_.peak) + 0.5 * q_max * d_y;
    constants_.second_moment = sup_abs * sup_abs + spec_.noise_sigma * spec_.noise_sigma;
    constants_.bin_shift = std::sqrt(2.0 * constants_.context_holder / q_min);
    constants_.alpha = (spec_.phi == PhiKind::affine) ? 1.0 : spec_.alpha;
}

double QuadraticEnv::feature(double u) const {
    return spec_.phi == PhiKind::affine ? u : std::pow(u, spec_.alpha);
}

double QuadraticEnv::mean_payoff(std::span<const double> x,
                                 std::span<const double> y) const {
    if (static_cast<int>(x.size()) != spec_.context_dim)
        throw DomainError("mean_payoff: context has wrong dimension");
    if (static_cast<int>(y.size()) != spec_.arm_dim)
        throw DomainError("mean_payoff: arm has wrong dimension");
    check_unit_cube(x, "mean_payoff: context");
    check_unit_cube(y, "mean_payoff: arm");
    return spec_.peak - instant_regret(x, y);
}

double QuadraticEnv::instant_regret(std::span<const double> x,
                                    std::span<const double> y) const {
    if (static_cast<int>(x.size()) != spec_.context_dim ||
        static_cast<int>(y.size()) != spec_.arm_dim)
        throw DomainError("instant_regret: wrong dimension");
    double gap = 0.0;
    for (int i = 0; i < spec_.arm_dim; ++i) {
        double opt = spec_.center[i];
        if (spec_.context_dim > 0)
            opt += spec_.amplitude[i] * feature(x[i % spec_.context_dim]);
        const double d = y[i] - opt;
        gap += 0.5 * spec_.curvature[i] * d * d;
    }
    return gap;
}

double QuadraticEnv::sample_payoff(std::span<const double> x,
                                   std::span<const double> y, Rng& rng) const {
    const double mean = mean_payoff(x, y);
    if (spec_.noise_sigma > 0.0) return mean + spec_.noise_sigma * rng.normal();
    return mean;
}

void QuadraticEnv::optimum(std::span<const double> x, std::vector<double>& y_star) const {
    y_star.assign(spec_.center.begin(), spec_.center.end());
    if (spec_.context_dim == 0) return;
    for (int i = 0; i < spec_.arm_dim; ++i)
        y_star[i] += spec_.amplitude[i] * feature(x[i % spec_.context_dim]);
}

void QuadraticEnv::gradient(std::span<const double> x, std::span<const double> y,
                            std::vector<double>& grad) const {
    grad.assign(spec_.arm_dim, 0.0);
    for (int i = 0; i < spec_.arm_dim; ++i) {
        double opt = spec_.center[i];
        if (spec_.context_dim > 0)
            opt += spec_.amplitude[i] * feature(x[i % spec_.context_dim]);
        grad[i] = -spec_.curvature[i] * (y[i] - opt);
    }
}

void QuadraticEnv::feature_moments(std::span<const double> lo,
                                   std::span<const double> hi, int axis,
                                   double& mean, double& mean_sq) const {
    const double l = lo[axis];
    const double u = hi[axis];
    if (spec_.phi == PhiKind::affine) {
        mean = 0.5 * (l + u);
        mean_sq = (l * l + l * u + u * u) / 3.0;
        return;
    }
    const auto coord = [axis](std::span<const double> p) { return p[axis]; };
    mean = mean_over_rect(lo, hi, 8,
                          [&](std::span<const double> p) { return feature(coord(p)); });
    mean_sq = mean_over_rect(lo, hi, 8, [&](std::span<const double> p) {
        const double v = feature(coord(p));
        return v * v;
    });
}

std::vector<double> QuadraticEnv::bin_optimum(std::span<const double> lo,
                                              std::span<const double> hi) const {
    if (static_cast<int>(lo.size()) != spec_.context_dim || lo.size() != hi.size())
        throw DomainError("bin_optimum: bin has wrong dimension");
    check_unit_cube(lo, "bin_optimum: bin");
    check_unit_cube(hi, "bin_optimum: bin");
    std::vector<double> opt(spec_.center.begin(), spec_.center.end());
    if (spec_.context_dim == 0) return opt;
    for (int i = 0; i < spec_.arm_dim; ++i) {
        double mean = 0.0, mean_sq = 0.0;
        feature_moments(lo, hi, i % spec_.context_dim, mean, mean_sq);
        opt[i] += spec_.amplitude[i] * mean;
    }
    return opt;
}

double QuadraticEnv::bin_payoff(std::span<const double> lo, std::span<const double> hi,
                                std::span<const double> y) const {
    if (static_cast<int>(y.size()) != spec_.arm_dim)
        throw DomainError("bin_payoff: arm has wrong dimension");
    check_unit_cube(y, "bin_payoff: arm");
    if (spec_.context_dim == 0) return mean_payoff({}, y);

    // E[(y_i - opt_i(X))^2 | X in B] splits into the squared distance to
    // the conditional mean plus the conditional variance of opt_i(X).
    double value = spec_.peak;
    for (int i = 0; i < spec_.arm_dim; ++i) {
        double mean = 0.0, mean_sq = 0.0;
        feature_moments(lo, hi, i % spec_.context_dim, mean, mean_sq);
        const double a = spec_.amplitude[i];
        const double d = y[i] - (spec_.center[i] + a * mean);
        const double var = a * a * std::max(0.0, mean_sq - mean * mean);
        value -= 0.5 * spec_.curvature[i] * (d * d + var);
    }
    return value;
}

void sample_context(int context_dim, Rng& rng, std::vector<double>& out) {
    out.resize(context_dim);
    for (int l = 0; l < context_dim; ++l) out[l] = rng.uniform01();
}

}  // namespace cab
