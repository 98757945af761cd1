#pragma once

#include "relaync/model.hpp"

namespace relaync {

/// Optimum of one of the fluid-flow objectives for coding at both s and r.
struct FlowSolution {
    double rate;       // R*, packets per slot
    double alpha;      // alpha*, source time-share
    double objective;  // c(R*, alpha*)
    bool relay_used;   // alpha* < 1
};

/// Max innovative flow sustainable at a given time-share: the binding
/// minimum of the broadcast and relay-path constraints.
double flow_rate_at_alpha(const ChannelParams& ch, double alpha);

/// Throughput-optimal operating point, closed form.
/// p_sd <= p_rd: interior optimum where both flow constraints bind;
/// otherwise the relay is not used (alpha* = 1, R* = p_sd).
FlowSolution optimal_rate(const ChannelParams& ch);

/// Minimize energy per delivered packet, [e_tx + e_nc + a(1-I[a=1])e_rx] / R.
FlowSolution min_delivery_energy(const ChannelParams& ch, const EnergyParams& en);

/// Minimize energy per delivered packet per unit rate (same numerator over R^2).
FlowSolution min_energy_per_rate(const ChannelParams& ch, const EnergyParams& en);

}  // namespace relaync
