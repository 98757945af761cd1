#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace relaync {

/// Thrown when a domain parameter fails validation. Out-of-range inputs are
/// rejected rather than clamped, so misconfigured sweeps fail loudly.
struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Where random linear network coding is performed in the s-r-d relay channel.
enum class Scheme {
    CodeBoth,        // both source and relay code (fluid-flow model)
    CodeRelayOnly,   // source sends uncoded packets, relay codes
    CodeSourceOnly,  // source codes, relay stores and forwards mixtures
};

const char* to_string(Scheme s);
Scheme scheme_from_string(std::string_view name);

/// Per-slot packet transmission success probabilities of the three links.
struct ChannelParams {
    double p_sd;
    double p_sr;
    double p_rd;

    ChannelParams(double p_sd, double p_sr, double p_rd);
};

/// Per-packet energy terms. e_ack is paid once per session by the source to
/// listen for the terminal acknowledgement.
struct EnergyParams {
    double e_tx = 1.0;
    double e_rx = 1.0;
    double e_nc = 1.0;
    double e_ack = 1.0;

    EnergyParams() = default;
    EnergyParams(double e_tx, double e_rx, double e_nc, double e_ack);
};

/// Degree-of-freedom triple: m dofs unique to d, k dofs shared by r and d,
/// l dofs unique to r.
struct DofState {
    int m = 0;
    int k = 0;
    int l = 0;

    bool operator==(const DofState&) const = default;
};

/// Completion: d holds all n dofs.
inline bool is_absorbing(const DofState& s, int n) { return s.m + s.k == n; }

/// Scheme-specific state validity. x is the relay queue size and is only
/// meaningful for CodeSourceOnly (the relay-only chain assumes x = n).
bool is_valid_state(const DofState& s, Scheme scheme, int n, int x);

/// A fully specified coding placement: scheme, generation size n, relay
/// memory x, and source time-share alpha.
struct SchemeConfig {
    Scheme scheme;
    int n;
    int x;
    double alpha;

    SchemeConfig(Scheme scheme, int n, int x, double alpha);
};

/// Expected energy consumed per transmitted slot, E_use.
///
/// CodeBoth:       e_tx + e_nc + a*(1 - I[a=1])*e_rx
/// CodeRelayOnly:  e_tx + a*(1 - I[a=1])*e_rx + (1-a)*e_nc
/// CodeSourceOnly: e_tx + a*(1 - I[a=1])*e_rx + a*e_nc
///
/// The indicator removes the relay's listening cost when it never
/// participates (alpha = 1).
double energy_rate(Scheme scheme, double alpha, const EnergyParams& en);

namespace detail {
void require_probability(double v, const char* name);
void require_nonnegative_finite(double v, const char* name);
}  // namespace detail

}  // namespace relaync
