#pragma once

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "relaync/model.hpp"

namespace relaync {

/// Ordering key for chain states. In the relay-only chain every non-self
/// transition strictly increases this key, which certifies the absence of
/// cycles and permits an exact substitution solve.
inline std::tuple<int, int, int> state_key(const DofState& s) {
    return {s.m + s.k + s.l, s.m + s.k, s.k};
}

/// Absorbing Markov chain over DofState triples. Index 0 is the virtual
/// terminating state S_T; substantive states occupy indices 1..size()-1,
/// sorted ascending by state_key. Every absorbing state (m+k = n) routes to
/// S_T with probability 1.
struct AbsorbingChain {
    Scheme scheme;
    int n = 0;
    int x = 0;
    double alpha = 0.0;

    // states[0] is a placeholder for S_T and carries no triple.
    std::vector<DofState> states;
    // rows[i]: sparse (target index, probability) pairs, target-sorted.
    std::vector<std::vector<std::pair<int, double>>> rows;
    int start_index = 0;  // index of (0,0,0)
    // True when non-self transitions strictly increase state_key (relay chain).
    bool topo_certified = false;

    std::size_t size() const { return states.size(); }

    /// Index of a substantive state, or -1 if not part of the chain.
    int index_of(const DofState& s) const;

    /// Transition probability P[i][j] (0 if no edge).
    double prob(int i, int j) const;
};

/// Number of states of the relay-only chain, C(n+3,3) substantive plus S_T.
std::int64_t state_count_relay(int n);

/// Number of states of the source-only chain with relay memory x, plus S_T.
std::int64_t state_count_source(int n, int x);

/// Chain for RLNC at the relay only (relay memory = n). Relay-transmitted
/// mixtures are assumed innovative, so the solved completion time is a lower
/// bound on the true one (exact for n = 1).
AbsorbingChain build_relay_chain(int n, double alpha, const ChannelParams& ch);

/// Chain for RLNC at the source only, with the relay acting as a size-x
/// queue of mixtures (drop when full; transmitted mixtures leave the queue).
/// This chain contains cycles, so no topological certificate is attached.
AbsorbingChain build_source_chain(int n, int x, double alpha, const ChannelParams& ch);

}  // namespace relaync
