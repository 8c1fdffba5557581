#include "cab/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cab/errors.hpp"

namespace cab {

GridChoice choose_grid(std::uint64_t horizon, int context_dim, int arm_dim) {
    if (horizon < 1) throw DomainError("choose_grid: horizon must be >= 1");
    if (context_dim < 0 || arm_dim < 1)
        throw DomainError("choose_grid: bad dimensions");
    const double exponent = 1.0 / static_cast<double>(context_dim + arm_dim + 2);
    const int points = std::max(
        1, static_cast<int>(std::llround(std::pow(static_cast<double>(horizon), exponent))));
    return {points, points};
}

DiscretizedUcbPolicy::DiscretizedUcbPolicy(Partition partition, int arm_points_per_axis,
                                           int arm_dim, double exploration_coef)
    : partition_(partition),
      arm_points_per_axis_(arm_points_per_axis),
      arm_dim_(arm_dim),
      exploration_coef_(exploration_coef) {
    if (arm_points_per_axis < 1)
        throw DomainError("ucb: arm grid needs at least one point per axis");
    if (arm_dim < 1) throw DomainError("ucb: arm_dim must be >= 1");
    if (!(exploration_coef > 0.0))
        throw DomainError("ucb: exploration coefficient must be positive");
    arm_count_ = 1;
    for (int i = 0; i < arm_dim; ++i) {
        const auto g = static_cast<std::uint64_t>(arm_points_per_axis);
        if (arm_count_ > (1ULL << 27) / g)
            throw DomainError("ucb: arm grid too large to enumerate");
        arm_count_ *= g;
    }
    current_arm_.resize(arm_dim);
}

std::vector<double> DiscretizedUcbPolicy::arm_vector(std::uint64_t arm) const {
    if (arm >= arm_count_) throw DomainError("ucb: arm id out of range");
    std::vector<double> point(arm_dim_, 0.0);
    const auto g = static_cast<std::uint64_t>(arm_points_per_axis_);
    for (int i = arm_dim_ - 1; i >= 0; --i) {
        const std::uint64_t cell = arm % g;
        arm /= g;
        point[i] = (2.0 * static_cast<double>(cell) + 1.0) / (2.0 * static_cast<double>(g));
    }
    return point;
}

DiscretizedUcbPolicy::BinStats& DiscretizedUcbPolicy::stats_for(std::uint64_t flat) {
    auto it = bins_.find(flat);
    if (it == bins_.end()) {
        BinStats fresh;
        fresh.mean.assign(arm_count_, 0.0);
        fresh.count.assign(arm_count_, 0);
        it = bins_.emplace(flat, std::move(fresh)).first;
    }
    return it->second;
}

std::uint64_t DiscretizedUcbPolicy::select_arm(const BinStats& stats) const {
    if (stats.next_unswept < arm_count_) return stats.next_unswept;

    const double log_term = 2.0 * std::log(static_cast<double>(stats.pulls));
    double best_index = -std::numeric_limits<double>::infinity();
    std::uint64_t best_arm = 0;
    for (std::uint64_t arm = 0; arm < arm_count_; ++arm) {
        const double bonus =
            exploration_coef_ *
            std::sqrt(log_term / static_cast<double>(stats.count[arm]));
        const double index = stats.mean[arm] + bonus;
        if (index > best_index) {
            best_index = index;
            best_arm = arm;
        }
    }
    return best_arm;
}

std::span<const double> DiscretizedUcbPolicy::act(std::span<const double> x) {
    const std::uint64_t flat = bin_index(x, partition_);
    BinStats& stats = stats_for(flat);
    if (stats.pending >= 0)
        throw ProtocolError("act: bin still awaits a payoff");
    const std::uint64_t arm = select_arm(stats);
    stats.pending = static_cast<std::int64_t>(arm);
    current_arm_ = arm_vector(arm);
    return current_arm_;
}

void DiscretizedUcbPolicy::update(std::span<const double> x, double payoff) {
    const std::uint64_t flat = bin_index(x, partition_);
    auto it = bins_.find(flat);
    if (it == bins_.end() || it->second.pending < 0)
        throw ProtocolError("update: bin has no pending act");
    BinStats& stats = it->second;
    const auto arm = static_cast<std::uint64_t>(stats.pending);
    stats.pending = -1;
    ++stats.pulls;
    ++stats.count[arm];
    stats.mean[arm] += (payoff - stats.mean[arm]) / static_cast<double>(stats.count[arm]);
    if (arm == stats.next_unswept) ++stats.next_unswept;
}

std::vector<BinVisit> DiscretizedUcbPolicy::visit_counts() const {
    std::vector<BinVisit> visits;
    visits.reserve(bins_.size());
    for (const auto& [flat, stats] : bins_) visits.push_back({flat, stats.pulls});
    std::sort(visits.begin(), visits.end(),
              [](const BinVisit& a, const BinVisit& b) { return a.bin < b.bin; });
    return visits;
}

std::vector<BinIterate> DiscretizedUcbPolicy::final_iterates() const {
    std::vector<BinIterate> iterates;
    iterates.reserve(bins_.size());
    for (const auto& [flat, stats] : bins_) {
        std::uint64_t best = 0;
        for (std::uint64_t arm = 1; arm < arm_count_; ++arm)
            if (stats.count[arm] > 0 &&
                (stats.count[best] == 0 || stats.mean[arm] > stats.mean[best]))
                best = arm;
        iterates.push_back({flat, arm_vector(best)});
    }
    std::sort(iterates.begin(), iterates.end(),
              [](const BinIterate& a, const BinIterate& b) { return a.bin < b.bin; });
    return iterates;
}

}  // namespace cab
