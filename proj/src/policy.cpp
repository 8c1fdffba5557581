#include "cab/policy.hpp"

#include <algorithm>
#include <cmath>

#include "cab/errors.hpp"

namespace cab {

int choose_bins_per_axis(std::uint64_t horizon, int context_dim, int arm_dim,
                         double alpha) {
    if (horizon < 1) throw DomainError("choose_bins_per_axis: horizon must be >= 1");
    if (arm_dim < 1) throw DomainError("choose_bins_per_axis: arm_dim must be >= 1");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError("choose_bins_per_axis: alpha must lie in (0,1]");
    if (context_dim < 0) throw DomainError("choose_bins_per_axis: context_dim must be >= 0");
    if (context_dim == 0) return 1;

    const double dx = static_cast<double>(context_dim);
    const double dy = static_cast<double>(arm_dim);
    const double value = std::pow(std::pow(dx, alpha - 2.0) * std::pow(dy, alpha - 3.0) *
                                      static_cast<double>(horizon),
                                  1.0 / (dx + 2.0 * alpha));
    return std::max(1, static_cast<int>(std::llround(value)));
}

KwsaBinningPolicy::KwsaBinningPolicy(Partition partition, Box box,
                                     StepSchedule schedule,
                                     std::optional<std::vector<double>> initial_iterate)
    : partition_(partition), box_(std::move(box)), schedule_(schedule) {
    if (initial_iterate) {
        initial_iterate_ = std::move(*initial_iterate);
        if (!box_.contains(initial_iterate_))
            throw DomainError("policy: initial iterate outside the arm box");
    } else {
        initial_iterate_.resize(box_.dim());
        for (int i = 0; i < box_.dim(); ++i)
            initial_iterate_[i] = 0.5 * (box_.lower[i] + box_.upper[i]);
    }
}

KwsaBinningPolicy::BinSlot& KwsaBinningPolicy::slot_for(std::uint64_t flat) {
    auto it = bins_.find(flat);
    if (it == bins_.end())
        it = bins_.emplace(flat, BinSlot{BinState(initial_iterate_, schedule_), 0}).first;
    return it->second;
}

std::span<const double> KwsaBinningPolicy::act(std::span<const double> x) {
    const std::uint64_t flat = bin_index(x, partition_);
    return slot_for(flat).state.next_arm(box_);
}

void KwsaBinningPolicy::update(std::span<const double> x, double payoff) {
    const std::uint64_t flat = bin_index(x, partition_);
    auto it = bins_.find(flat);
    if (it == bins_.end())
        throw ProtocolError("update: bin has no pending act");
    it->second.state.record_payoff(payoff, box_);
    ++it->second.epochs;
}

std::vector<BinVisit> KwsaBinningPolicy::visit_counts() const {
    std::vector<BinVisit> visits;
    visits.reserve(bins_.size());
    for (const auto& [flat, slot] : bins_) visits.push_back({flat, slot.epochs});
    std::sort(visits.begin(), visits.end(),
              [](const BinVisit& a, const BinVisit& b) { return a.bin < b.bin; });
    return visits;
}

std::vector<BinIterate> KwsaBinningPolicy::final_iterates() const {
    std::vector<BinIterate> iterates;
    iterates.reserve(bins_.size());
    for (const auto& [flat, slot] : bins_)
        iterates.push_back({flat, slot.state.iterate});
    std::sort(iterates.begin(), iterates.end(),
              [](const BinIterate& a, const BinIterate& b) { return a.bin < b.bin; });
    return iterates;
}

const BinState* KwsaBinningPolicy::bin(std::uint64_t flat) const {
    auto it = bins_.find(flat);
    return it == bins_.end() ? nullptr : &it->second.state;
}

}  // namespace cab
