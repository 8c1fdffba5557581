#include "cab/analysis.hpp"

#include <cmath>
#include <vector>

#include "cab/errors.hpp"

namespace cab {

SlopeFit fit_log_log(std::span<const double> abscissa, std::span<const double> value) {
    if (abscissa.size() != value.size())
        throw DomainError("fit_log_log: mismatched lengths");
    std::vector<double> lx, ly;
    lx.reserve(abscissa.size());
    ly.reserve(abscissa.size());
    for (std::size_t i = 0; i < abscissa.size(); ++i) {
        if (value[i] <= 0.0) continue;  // zero regret carries no log information
        if (abscissa[i] <= 0.0) throw DomainError("fit_log_log: abscissa must be positive");
        lx.push_back(std::log(abscissa[i]));
        ly.push_back(std::log(value[i]));
    }
    const int n = static_cast<int>(lx.size());
    if (n < 3) throw NumericError("fit_log_log: fewer than 3 usable points");

    double mx = 0.0, my = 0.0;
    for (int i = 0; i < n; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx <= 0.0) throw NumericError("fit_log_log: degenerate abscissa");

    SlopeFit fit;
    fit.points_used = n;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double rss = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
        rss += r * r;
    }
    fit.stderr_slope = (n > 2) ? std::sqrt(rss / static_cast<double>(n - 2) / sxx) : 0.0;
    return fit;
}

bool decay_recursion_check(double contraction, double cross_coef, double tail_coef,
                           double b1, std::uint64_t n_max, double* bound_scale_out) {
    if (!(contraction > 0.5 && contraction < 1.0))
        throw DomainError("decay_recursion_check: contraction must lie in (0.5, 1)");
    if (cross_coef < 0.0 || tail_coef < 0.0 || b1 < 0.0)
        throw DomainError("decay_recursion_check: coefficients must be >= 0");
    if (n_max < 1) throw DomainError("decay_recursion_check: n_max must be >= 1");

    const double two_c = 2.0 * contraction - 1.0;
    const double root =
        (cross_coef + std::sqrt(cross_coef * cross_coef + 2.0 * tail_coef * two_c)) /
        two_c;
    const double scale = std::max(b1, root * root);
    if (bound_scale_out) *bound_scale_out = scale;

    double b = b1;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const double nd = static_cast<double>(n);
        if (!(b <= scale / std::sqrt(nd))) return false;
        const double quarter = std::sqrt(std::sqrt(nd));
        b = (1.0 - contraction / nd) * b +
            cross_coef / (nd * quarter) * std::sqrt(b) +
            tail_coef / (nd * std::sqrt(nd));
    }
    return true;
}

}  // namespace cab
