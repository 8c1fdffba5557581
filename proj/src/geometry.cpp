#include "cab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cab/errors.hpp"

namespace cab {

Partition::Partition(int context_dim, int bins_per_axis)
    : context_dim(context_dim), bins_per_axis(bins_per_axis) {
    if (context_dim < 0) throw DomainError("Partition: context_dim must be >= 0");
    if (bins_per_axis < 1) throw DomainError("Partition: bins_per_axis must be >= 1");
    total_bins_ = 1;
    for (int l = 0; l < context_dim; ++l) {
        const auto k = static_cast<std::uint64_t>(bins_per_axis);
        if (total_bins_ > std::numeric_limits<std::uint64_t>::max() / k)
            throw DomainError("Partition: bins_per_axis^context_dim overflows 64 bits");
        total_bins_ *= k;
    }
}

Box::Box(std::vector<double> lo, std::vector<double> hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower.size() != upper.size())
        throw DomainError("Box: bound vectors differ in length");
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (!(lower[i] < upper[i]))
            throw DomainError("Box: lower bound must be strictly below upper bound");
    }
}

Box Box::unit_cube(int dim) {
    if (dim < 1) throw DomainError("Box: dimension must be >= 1");
    return Box(std::vector<double>(dim, 0.0), std::vector<double>(dim, 1.0));
}

bool Box::contains(std::span<const double> point) const {
    if (point.size() != lower.size()) return false;
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (point[i] < lower[i] || point[i] > upper[i]) return false;
    }
    return true;
}

std::uint64_t bin_index(std::span<const double> x, const Partition& partition) {
    if (static_cast<int>(x.size()) != partition.context_dim)
        throw DomainError("bin_index: context has wrong dimension");
    const int k_axis = partition.bins_per_axis;
    std::uint64_t flat = 0;
    for (int l = 0; l < partition.context_dim; ++l) {
        const double v = x[l];
        if (!(v >= 0.0 && v <= 1.0))
            throw DomainError("bin_index: coordinate outside [0,1]");
        // cell index on this axis, 1-based; the point 1 belongs to the last cell
        const int cell = std::min(static_cast<int>(std::floor(v * k_axis)) + 1, k_axis);
        flat = flat * static_cast<std::uint64_t>(k_axis) +
               static_cast<std::uint64_t>(cell - 1);
    }
    return flat;
}

void bin_bounds(const Partition& partition, std::uint64_t flat,
                std::vector<double>& lower, std::vector<double>& upper) {
    if (flat >= partition.total_bins())
        throw DomainError("bin_bounds: flat id out of range");
    const int d = partition.context_dim;
    const auto k_axis = static_cast<std::uint64_t>(partition.bins_per_axis);
    lower.assign(d, 0.0);
    upper.assign(d, 0.0);
    for (int l = d - 1; l >= 0; --l) {
        const std::uint64_t cell = flat % k_axis;  // zero-based on this axis
        flat /= k_axis;
        lower[l] = static_cast<double>(cell) / static_cast<double>(k_axis);
        upper[l] = static_cast<double>(cell + 1) / static_cast<double>(k_axis);
    }
}

void project(std::span<const double> y, const Box& box, std::vector<double>& out) {
    out.assign(y.begin(), y.end());
    project_in_place(out, box);
}

void project_in_place(std::vector<double>& y, const Box& box) {
    if (static_cast<int>(y.size()) != box.dim())
        throw DomainError("project: point has wrong dimension");
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] = std::clamp(y[i], box.lower[i], box.upper[i]);
}

double probe_direction(std::span<const double> base, int coord, double radius,
                       const Box& box) {
    if (coord < 0 || coord >= box.dim())
        throw DomainError("probe: coordinate index out of range");
    if (!(radius > 0.0)) throw DomainError("probe: radius must be positive");
    if (base[coord] + radius <= box.upper[coord]) return 1.0;
    if (base[coord] - radius >= box.lower[coord]) return -1.0;
    throw DomainError("probe: radius fits in neither direction");
}

ProbePoint probe_point(std::span<const double> base, int coord, double radius,
                       const Box& box) {
    if (static_cast<int>(base.size()) != box.dim())
        throw DomainError("probe: point has wrong dimension");
    const double sign = probe_direction(base, coord, radius, box);
    ProbePoint result{std::vector<double>(base.begin(), base.end()), sign};
    result.point[coord] += sign * radius;
    return result;
}

}  // namespace cab
