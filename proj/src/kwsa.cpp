#include "cab/kwsa.hpp"

#include <cmath>

#include "cab/errors.hpp"

namespace cab {

StepSchedule::StepSchedule(double gain_in, double probe_in)
    : gain(gain_in), probe(probe_in) {
    if (!(gain > 0.0)) throw DomainError("StepSchedule: gain must be positive");
    if (!(probe > 0.0 && probe <= 0.5))
        throw DomainError("StepSchedule: probe scale must lie in (0, 0.5]");
}

double StepSchedule::gain_at(std::uint64_t cycle) const {
    if (cycle < 1) throw DomainError("step sizes: cycle index starts at 1");
    return gain / static_cast<double>(cycle);
}

double StepSchedule::probe_at(std::uint64_t cycle) const {
    if (cycle < 1) throw DomainError("step sizes: cycle index starts at 1");
    return probe / std::sqrt(std::sqrt(static_cast<double>(cycle)));
}

StepSizes step_sizes(std::uint64_t cycle, const StepSchedule& schedule) {
    return {schedule.gain_at(cycle), schedule.probe_at(cycle)};
}

double default_gain(double m1) {
    if (!(m1 > 0.0)) throw DomainError("default_gain: curvature bound must be positive");
    return 3.0 / (8.0 * m1);
}

BinState::BinState(std::vector<double> init, StepSchedule schedule_in)
    : iterate(std::move(init)), schedule(schedule_in) {
    if (iterate.empty()) throw DomainError("BinState: arm dimension must be >= 1");
    probe_diffs.reserve(iterate.size());
    probe_signs.reserve(iterate.size());
}

const std::vector<double>& BinState::next_arm(const Box& box) {
    if (awaiting_payoff)
        throw ProtocolError("next_arm: previous arm still awaits its payoff");
    awaiting_payoff = true;
    if (phase == 0) return iterate;

    const int coord = phase - 1;
    const double radius = schedule.probe_at(cycle);
    const double sign = probe_direction(iterate, coord, radius, box);
    probe_arm_ = iterate;
    probe_arm_[coord] += sign * radius;
    probe_signs.push_back(sign);
    return probe_arm_;
}

void BinState::record_payoff(double payoff, const Box& box) {
    if (!awaiting_payoff)
        throw ProtocolError("record_payoff: no arm pending");
    awaiting_payoff = false;

    if (phase == 0) {
        base_payoff = payoff;
        phase = 1;
        return;
    }

    probe_diffs.push_back(probe_signs[static_cast<std::size_t>(phase) - 1] *
                          (payoff - base_payoff));
    if (phase < arm_dim()) {
        ++phase;
        return;
    }

    // Cycle complete: projected ascent along the finite-difference estimate.
    const double gain = schedule.gain_at(cycle);
    const double radius = schedule.probe_at(cycle);
    for (int i = 0; i < arm_dim(); ++i)
        iterate[i] += gain * (probe_diffs[i] / radius);
    project_in_place(iterate, box);

    ++cycle;
    phase = 0;
    probe_diffs.clear();
    probe_signs.clear();
}

}  // namespace cab
