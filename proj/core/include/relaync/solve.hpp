#pragma once

#include <string>
#include <vector>

#include "relaync/chain.hpp"
#include "relaync/model.hpp"

namespace relaync {

/// Some transient state cannot reach the terminating state; the expected
/// completion time is infinite.
struct NonAbsorbingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The linear solve failed numerically; the message carries the residual.
struct SingularSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Expected completion time, throughput and energy of one configuration.
struct EvalResult {
    double t_total = 0.0;      // T, expected slots from the start state
    double t_per_packet = 0.0; // T / n
    double throughput = 0.0;   // n / T
    double e_total = 0.0;      // T * E_use + e_ack (no e_ack for CodeBoth)
    double e_per_packet = 0.0; // E / n
    std::vector<double> passage_times;  // T_i per chain index; empty for CodeBoth
    std::int64_t state_count = 0;
    std::string solver_path;   // "forward", "sparse-lu", or "fluid"
};

/// Expected first-passage times to S_T from every state. Uses exact
/// substitution in topological order when the chain is certified acyclic,
/// otherwise a sparse LU factorization of I - P (transient block).
/// The residual ||(I - P)T - 1||_inf is checked after either path.
std::vector<double> first_passage(const AbsorbingChain& chain);

std::vector<double> first_passage_forward(const AbsorbingChain& chain);
std::vector<double> first_passage_general(const AbsorbingChain& chain);

/// Build the chain for cfg (or the fluid-flow model for CodeBoth), solve,
/// and assemble the full result.
EvalResult evaluate(const SchemeConfig& cfg, const ChannelParams& ch,
                    const EnergyParams& en);

}  // namespace relaync
