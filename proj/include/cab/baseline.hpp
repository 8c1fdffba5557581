#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "cab/geometry.hpp"
#include "cab/policy.hpp"

namespace cab {

struct GridChoice {
    int context_bins_per_axis = 1;  // K_b
    int arm_points_per_axis = 1;    // G
};

/// Uniform discretization balanced over both spaces:
/// K_b = G = max(1, round(T^(1/(d_x + d_y + 2)))).
GridChoice choose_grid(std::uint64_t horizon, int context_dim, int arm_dim);

/// Prior-art comparator: discretize contexts into bins and arms into a
/// uniform grid of G^{d_y} points at cell centers, then run an
/// independent UCB1 learner per visited context bin. Index of an arm
/// with `count` pulls after t_B epochs in its bin:
///
///   mean + exploration_coef * sqrt(2 ln(t_B) / count)
///
/// Unpulled arms are swept first in index order; ties break to the
/// lowest arm index.
class DiscretizedUcbPolicy : public Policy {
public:
    DiscretizedUcbPolicy(Partition partition, int arm_points_per_axis, int arm_dim,
                         double exploration_coef = 1.0);

    std::span<const double> act(std::span<const double> x) override;
    void update(std::span<const double> x, double payoff) override;
    std::vector<BinVisit> visit_counts() const override;

    /// Per bin, the grid arm with the highest empirical mean.
    std::vector<BinIterate> final_iterates() const override;

    std::uint64_t arm_count() const { return arm_count_; }

    /// Coordinates of one grid arm (cell centers: (2g+1)/(2G) per axis).
    std::vector<double> arm_vector(std::uint64_t arm) const;

private:
    struct BinStats {
        std::vector<double> mean;
        std::vector<std::uint64_t> count;
        std::uint64_t pulls = 0;
        std::uint64_t next_unswept = 0;  // arms below this index have been pulled
        std::int64_t pending = -1;       // arm awaiting its payoff, -1 if none
    };

    BinStats& stats_for(std::uint64_t flat);
    std::uint64_t select_arm(const BinStats& stats) const;

    Partition partition_;
    int arm_points_per_axis_;
    int arm_dim_;
    double exploration_coef_;
    std::uint64_t arm_count_;
    std::unordered_map<std::uint64_t, BinStats> bins_;
    std::vector<double> current_arm_;
};

}  // namespace cab
