#pragma once

#include <cstdint>
#include <span>

namespace cab {

struct SlopeFit {
    double slope = 0.0;
    double stderr_slope = 0.0;
    double intercept = 0.0;
    int points_used = 0;
};

/// Ordinary least squares of log(value) against log(abscissa). Points
/// with value <= 0 are dropped; fewer than 3 usable points throw
/// NumericError. The standard error comes from the usual residual
/// variance estimate (zero when only 3 points remain would divide by
/// n - 2 = 1, which is fine).
SlopeFit fit_log_log(std::span<const double> abscissa, std::span<const double> value);

/// Verify numerically that the recursion
///
///   b_{n+1} = (1 - contraction/n) b_n
///             + cross_coef  * n^{-5/4} * sqrt(b_n)
///             + tail_coef   * n^{-3/2}
///
/// iterated with equality from b_1 stays below bound_scale * n^{-1/2}
/// for all n <= n_max, where bound_scale = max(b_1, z0) and z0 is the
/// positive root of (2c - 1) z - 2 beta sqrt(z) - 2 omega = 0:
///
///   z0 = ((beta + sqrt(beta^2 + 2 omega (2c - 1))) / (2c - 1))^2.
///
/// Requires contraction in (0.5, 1) (outside it the dominating root is
/// undefined or the contraction factor can go negative); throws
/// DomainError otherwise. cross_coef, tail_coef and b_1 must be >= 0.
bool decay_recursion_check(double contraction, double cross_coef, double tail_coef,
                           double b1, std::uint64_t n_max,
                           double* bound_scale_out = nullptr);

}  // namespace cab
