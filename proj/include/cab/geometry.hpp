#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cab {

/// Uniform hyper-rectangular partition of the context space [0,1]^d:
/// each axis is cut into `bins_per_axis` equal intervals, for a total of
/// bins_per_axis^context_dim cells. A zero-dimensional context space is
/// a single cell.
struct Partition {
    int context_dim = 0;
    int bins_per_axis = 1;

    Partition(int context_dim, int bins_per_axis);

    std::uint64_t total_bins() const { return total_bins_; }

private:
    std::uint64_t total_bins_ = 1;
};

/// Axis-aligned box with per-coordinate bounds, lower_i < upper_i.
/// The arm space defaults to the unit cube.
struct Box {
    std::vector<double> lower;
    std::vector<double> upper;

    Box(std::vector<double> lower, std::vector<double> upper);

    static Box unit_cube(int dim);

    int dim() const { return static_cast<int>(lower.size()); }
    bool contains(std::span<const double> point) const;
};

/// Flat cell id of the context x under the half-open convention: cell l
/// on an axis owns [(l-1)/K, l/K), except the last cell which also owns
/// the point 1. Flat ids are row-major over the per-axis indices (first
/// axis most significant). Throws DomainError if any coordinate is
/// outside [0,1].
std::uint64_t bin_index(std::span<const double> x, const Partition& partition);

/// Closed bounds of the cell with the given flat id.
void bin_bounds(const Partition& partition, std::uint64_t flat,
                std::vector<double>& lower, std::vector<double>& upper);

/// Componentwise clamp of y onto the box. Nonexpansive; the identity on
/// box members.
void project(std::span<const double> y, const Box& box, std::vector<double>& out);
void project_in_place(std::vector<double>& y, const Box& box);

/// Direction in which a probe of the given radius fits: +1 if
/// base + radius*e_coord stays inside the box, otherwise -1 for the
/// reflected probe. Throws DomainError when neither direction fits
/// (radius too large for the box). `coord` is zero-based.
double probe_direction(std::span<const double> base, int coord, double radius,
                       const Box& box);

struct ProbePoint {
    std::vector<double> point;
    double sign;  // +1 forward, -1 reflected
};

/// The probe arm used to estimate one gradient coordinate: base shifted
/// by +/- radius along `coord`, reflected off the box boundary when the
/// forward shift would leave it.
ProbePoint probe_point(std::span<const double> base, int coord, double radius,
                       const Box& box);

}  // namespace cab
