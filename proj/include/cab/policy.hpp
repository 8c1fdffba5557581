#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "cab/geometry.hpp"
#include "cab/kwsa.hpp"

namespace cab {

struct BinVisit {
    std::uint64_t bin = 0;
    std::uint64_t epochs = 0;
};

struct BinIterate {
    std::uint64_t bin = 0;
    std::vector<double> value;
};

/// Common surface of the learning policies driven by the harness. One
/// instance belongs to one trial; act and update alternate strictly per
/// bin (violations throw ProtocolError).
class Policy {
public:
    virtual ~Policy() = default;

    /// Arm to play for this context. The span stays valid until the next
    /// act on the same instance.
    virtual std::span<const double> act(std::span<const double> x) = 0;

    /// Payoff observed for the arm returned by the matching act.
    virtual void update(std::span<const double> x, double payoff) = 0;

    /// Epochs routed to each visited bin, sorted by bin id.
    virtual std::vector<BinVisit> visit_counts() const = 0;

    /// Per-bin summary of the learned arm, sorted by bin id.
    virtual std::vector<BinIterate> final_iterates() const = 0;
};

/// Bins per axis that balances per-bin learning error against
/// discretization error for the given horizon:
///
///   K = round((d_x^(alpha-2) * d_y^(alpha-3) * T)^(1/(d_x + 2 alpha)))
///
/// clamped to at least 1; a context-free problem uses a single bin.
/// Nondecreasing in T, and K^{d_x} <= T for d_x >= 1.
int choose_bins_per_axis(std::uint64_t horizon, int context_dim, int arm_dim,
                         double alpha);

/// The contextual learner: a uniform partition of the context space with
/// one independent finite-difference ascent learner per visited bin.
/// Bins are created lazily at an initial iterate (box center unless
/// overridden), so memory scales with visited bins, not with K^{d_x}.
class KwsaBinningPolicy : public Policy {
public:
    KwsaBinningPolicy(Partition partition, Box box, StepSchedule schedule,
                      std::optional<std::vector<double>> initial_iterate = {});

    std::span<const double> act(std::span<const double> x) override;
    void update(std::span<const double> x, double payoff) override;
    std::vector<BinVisit> visit_counts() const override;
    std::vector<BinIterate> final_iterates() const override;

    const Partition& partition() const { return partition_; }
    const Box& box() const { return box_; }

    /// State of one bin, or nullptr if never visited.
    const BinState* bin(std::uint64_t flat) const;
    std::size_t bins_created() const { return bins_.size(); }

private:
    struct BinSlot {
        BinState state;
        std::uint64_t epochs = 0;
    };

    BinSlot& slot_for(std::uint64_t flat);

    Partition partition_;
    Box box_;
    StepSchedule schedule_;
    std::vector<double> initial_iterate_;
    std::unordered_map<std::uint64_t, BinSlot> bins_;
};

}  // namespace cab
