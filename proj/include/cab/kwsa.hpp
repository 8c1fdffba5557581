#pragma once

#include <cstdint>
#include <vector>

#include "cab/geometry.hpp"

namespace cab {

/// Step-size schedule of the finite-difference ascent: gain a_n = gain/n
/// and probe radius c_n = probe * n^{-1/4}, both from cycle n = 1.
struct StepSchedule {
    double gain;   // > 0; admissible range given curvature m1 is (1/(4 m1), 1/(2 m1))
    double probe;  // in (0, 0.5] so a probe always fits in the unit box

    StepSchedule(double gain, double probe);

    double gain_at(std::uint64_t cycle) const;
    double probe_at(std::uint64_t cycle) const;
};

struct StepSizes {
    double gain;
    double probe;
};

/// (a_n, c_n) for cycle n >= 1. Throws DomainError for n = 0.
StepSizes step_sizes(std::uint64_t cycle, const StepSchedule& schedule);

/// Midpoint of the admissible gain interval (1/(4 m1), 1/(2 m1)):
/// 3 / (8 m1). Throws DomainError unless m1 > 0.
double default_gain(double m1);

/// One bin's finite-difference gradient-ascent learner. Each cycle n
/// consumes arm_dim + 1 plays: the base play at the current iterate,
/// then one probe per arm coordinate at distance c_n (reflected off the
/// box boundary when needed). Completing the last probe forms the
/// gradient estimate G_i = sign_i (z_i - z_base) / c_n and applies the
/// projected ascent step iterate <- project(iterate + a_n G).
///
/// Single-owner mutable state; distinct instances may run in parallel.
struct BinState {
    std::vector<double> iterate;      // current base point, always inside the box
    std::uint64_t cycle = 1;          // n, advances once per completed cycle
    int phase = 0;                    // 0: base play next; i in [1, arm_dim]: probe i next
    bool awaiting_payoff = false;     // an arm was issued and not yet paid
    double base_payoff = 0.0;         // valid while phase >= 1
    std::vector<double> probe_diffs;  // sign_i * (z_i - base), one per finished probe
    std::vector<double> probe_signs;  // reflection sign per issued probe
    StepSchedule schedule;

    BinState(std::vector<double> init, StepSchedule schedule_in);

    int arm_dim() const { return static_cast<int>(iterate.size()); }

    /// The arm to play next: the iterate itself in phase 0, otherwise
    /// the probe of coordinate phase-1. Does not move the iterate. The
    /// returned reference stays valid until the next call. Throws
    /// ProtocolError if the previous arm has not been paid.
    const std::vector<double>& next_arm(const Box& box);

    /// Consume the payoff of the most recently issued arm. Completing a
    /// cycle applies the gradient step and advances `cycle`. Throws
    /// ProtocolError without a preceding next_arm.
    void record_payoff(double payoff, const Box& box);

private:
    std::vector<double> probe_arm_;
};

}  // namespace cab
