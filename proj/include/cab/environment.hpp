#pragma once

#include <span>
#include <vector>

#include "cab/rng.hpp"

namespace cab {

/// Context feature map applied coordinatewise. `affine` is the identity
/// (Lipschitz); `holder` is u -> u^alpha, Hölder of exponent alpha with
/// constant 1 on [0,1].
enum class PhiKind { affine, holder };

/// Regularity constants of an environment, all analytic for the
/// quadratic family below.
struct EnvConstants {
    double strong_concavity = 0;    // lower curvature bound (min q_i)
    double context_holder = 0;      // Hölder constant of the payoff in x
    double second_moment = 0;       // upper bound on E[Z^2 | x, y]
    double payoff_lipschitz = 0;    // Lipschitz constant of the payoff in y
    double gradient_lipschitz = 0;  // upper curvature bound (max q_i)
    double bin_shift = 0;           // sqrt(2 * context_holder / strong_concavity)
    double alpha = 1;               // Hölder exponent of the context map
};

struct QuadraticEnvSpec {
    int context_dim = 0;
    int arm_dim = 1;
    double peak = 1.0;               // payoff at the per-context optimum
    std::vector<double> curvature;   // per arm coordinate, > 0
    std::vector<double> center;      // optimum location when the feature is 0
    std::vector<double> amplitude;   // optimum displacement scale per coordinate
    PhiKind phi = PhiKind::affine;
    double alpha = 1.0;
    double noise_sigma = 0.0;
    double margin = 0.05;            // the optimum stays in [margin, 1-margin]
};

/// Separable quadratic payoff family:
///
///   mean(x, y) = peak - 1/2 * sum_i curvature_i * (y_i - opt_i(x))^2
///   opt_i(x)   = center_i + amplitude_i * psi(x_{i mod d_x})
///
/// with psi the coordinatewise feature map. Every regularity constant is
/// analytic, the per-context optimum is known in closed form, and the
/// conditional (per-bin) payoff is again a quadratic with the same
/// curvatures, so bin-level oracles are exact.
class QuadraticEnv {
public:
    explicit QuadraticEnv(QuadraticEnvSpec spec);

    int context_dim() const { return spec_.context_dim; }
    int arm_dim() const { return spec_.arm_dim; }
    const QuadraticEnvSpec& spec() const { return spec_; }

    /// Exact mean payoff. Throws DomainError off [0,1]^{d_x} x [0,1]^{d_y}.
    double mean_payoff(std::span<const double> x, std::span<const double> y) const;

    /// Mean payoff plus centered Gaussian noise of the configured sigma.
    double sample_payoff(std::span<const double> x, std::span<const double> y,
                         Rng& rng) const;

    /// Per-context optimum y*(x); the attained payoff is peak() for every x.
    void optimum(std::span<const double> x, std::vector<double>& y_star) const;
    double peak() const { return spec_.peak; }

    /// Analytic payoff gradient in y (test oracle).
    void gradient(std::span<const double> x, std::span<const double> y,
                  std::vector<double>& grad) const;

    /// Mean payoff gap to the oracle, always >= 0. Uses mean payoffs,
    /// never noisy samples.
    double instant_regret(std::span<const double> x, std::span<const double> y) const;

    EnvConstants constants() const { return constants_; }

    /// Maximizer of the conditional payoff over a context rectangle:
    /// the conditional mean of y*(X) given X in the bin. Closed form for
    /// the affine map, tensor Gauss quadrature (order 8 per axis)
    /// otherwise. Singleton bins (lo == hi) are allowed.
    std::vector<double> bin_optimum(std::span<const double> lo,
                                    std::span<const double> hi) const;

    /// Conditional mean payoff f_B(y) = E[mean(X, y) | X in bin].
    double bin_payoff(std::span<const double> lo, std::span<const double> hi,
                      std::span<const double> y) const;

    /// Feature map applied to one coordinate.
    double feature(double u) const;

private:
    // First and second conditional moments of the feature on axis `axis`.
    void feature_moments(std::span<const double> lo, std::span<const double> hi,
                         int axis, double& mean, double& mean_sq) const;

    QuadraticEnvSpec spec_;
    EnvConstants constants_;
};

/// I.i.d. uniform context on [0,1]^{d_x}; d_x = 0 yields an empty vector
/// and consumes no randomness.
void sample_context(int context_dim, Rng& rng, std::vector<double>& out);

}  // namespace cab
