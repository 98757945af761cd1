#pragma once

#include <cstdint>

#include "relaync/chain.hpp"
#include "relaync/model.hpp"

namespace relaync {

/// A trial exceeded max_slots; estimates would be biased.
struct TruncatedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SimConfig {
    std::int64_t trials = 100000;
    std::uint64_t master_seed = 1;
    std::uint64_t field_size = 65521;  // prime; packet-level mode only
    std::int64_t max_slots = 1000000;  // per-trial safety cap
    int threads = 0;                   // 0: RELAYNC_THREADS env, else hardware
    bool fail_on_truncation = true;

    void validate(int n) const;
};

struct SimEstimate {
    double mean_t = 0.0;
    double std_err_t = 0.0;
    double mean_e = 0.0;
    double std_err_e = 0.0;
    std::int64_t truncated_trials = 0;
};

/// Sample trajectories of a built chain from its start state until S_T.
/// The hop into S_T is free; every transition out of a non-absorbing state
/// costs one slot. Energy per trial is slots * E_use + e_ack. Per-trial
/// seeds derive from (master_seed, trial index), so the estimate is
/// identical for any thread count.
SimEstimate simulate_chain(const AbsorbingChain& chain, const EnergyParams& en,
                           const SimConfig& sim);

/// Exact packet-level simulation. The destination tracks the true rank of
/// its received coefficient vectors over F_q, so relay mixtures that happen
/// to be non-innovative are detected; this removes the relay-only chain's
/// innovation assumption and measures its bound gap.
///
/// Energy is accumulated per slot by actual events: e_tx every slot, e_rx at
/// the relay for each source slot while the relay participates (alpha < 1),
/// e_nc per coded-packet generation opportunity of the coding node's slots,
/// and e_ack once per trial.
SimEstimate simulate_packets(const SchemeConfig& cfg, const ChannelParams& ch,
                             const EnergyParams& en, const SimConfig& sim);

/// Deterministic per-trial seed derivation (splitmix64 over master ^ index).
std::uint64_t trial_seed(std::uint64_t master_seed, std::int64_t trial);

}  // namespace relaync
