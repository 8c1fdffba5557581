#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "cab/errors.hpp"

namespace cab {

// Gauss-Legendre abscissae/weights on [-1,1]. Orders 8 and 16 are the
// only ones used: 8 is the production rule, 16 the cross-check in tests.
struct GaussRule {
    std::span<const double> nodes;
    std::span<const double> weights;
};

GaussRule gauss_legendre(int order);

/// Tensor-product Gauss-Legendre integral of `f` over the rectangle
/// [lo, hi], `order` points per axis. Axes with lo == hi degenerate to a
/// point evaluation, so singleton rectangles integrate to f(lo) times
/// the volume of the remaining axes. Throws NumericError if the result
/// is not finite.
template <typename F>
double integrate_rect(std::span<const double> lo, std::span<const double> hi,
                      int order, F&& f) {
    if (lo.size() != hi.size())
        throw DomainError("integrate_rect: bound vectors differ in length");
    const int dim = static_cast<int>(lo.size());
    const GaussRule rule = gauss_legendre(order);

    if (dim == 0) {
        const double v = f(std::span<const double>{});
        if (!std::isfinite(v)) throw NumericError("integrate_rect: non-finite integrand");
        return v;
    }

    std::vector<double> point(dim, 0.0);
    std::vector<int> index(dim, 0);
    std::vector<int> counts(dim, 0);
    for (int a = 0; a < dim; ++a) {
        if (hi[a] < lo[a]) throw DomainError("integrate_rect: hi < lo");
        counts[a] = (hi[a] == lo[a]) ? 1 : order;
    }

    double total = 0.0;
    for (;;) {
        double weight = 1.0;
        for (int a = 0; a < dim; ++a) {
            if (counts[a] == 1) {
                point[a] = lo[a];
            } else {
                const double half = 0.5 * (hi[a] - lo[a]);
                point[a] = 0.5 * (lo[a] + hi[a]) + half * rule.nodes[index[a]];
                weight *= half * rule.weights[index[a]];
            }
        }
        total += weight * f(std::span<const double>(point));

        int a = dim - 1;
        while (a >= 0 && ++index[a] == counts[a]) index[a--] = 0;
        if (a < 0) break;
    }
    if (!std::isfinite(total)) throw NumericError("integrate_rect: non-finite result");
    return total;
}

/// Mean of `f` over the rectangle under the uniform distribution.
/// Singleton axes carry no volume and act as conditioning.
template <typename F>
double mean_over_rect(std::span<const double> lo, std::span<const double> hi,
                      int order, F&& f) {
    double volume = 1.0;
    for (std::size_t a = 0; a < lo.size(); ++a)
        if (hi[a] != lo[a]) volume *= hi[a] - lo[a];
    return integrate_rect(lo, hi, order, std::forward<F>(f)) / volume;
}

}  // namespace cab
