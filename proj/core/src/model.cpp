#include "relaync/model.hpp"

namespace relaync {

namespace detail {

void require_probability(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {  // also rejects NaN
        throw InvalidParameter(std::string(name) + " must be in [0,1], got " +
                               std::to_string(v));
    }
}

void require_nonnegative_finite(double v, const char* name) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
        throw InvalidParameter(std::string(name) +
                               " must be nonnegative and finite, got " +
                               std::to_string(v));
    }
}

}  // namespace detail

const char* to_string(Scheme s) {
    switch (s) {
        case Scheme::CodeBoth: return "both";
        case Scheme::CodeRelayOnly: return "relay-only";
        case Scheme::CodeSourceOnly: return "source-only";
    }
    return "?";
}

Scheme scheme_from_string(std::string_view name) {
    if (name == "both") return Scheme::CodeBoth;
    if (name == "relay-only") return Scheme::CodeRelayOnly;
    if (name == "source-only") return Scheme::CodeSourceOnly;
    throw InvalidParameter("scheme must be one of both, relay-only, source-only; got '" +
                           std::string(name) + "'");
}

ChannelParams::ChannelParams(double p_sd, double p_sr, double p_rd)
    : p_sd(p_sd), p_sr(p_sr), p_rd(p_rd) {
    detail::require_probability(p_sd, "p_sd");
    detail::require_probability(p_sr, "p_sr");
    detail::require_probability(p_rd, "p_rd");
}

EnergyParams::EnergyParams(double e_tx, double e_rx, double e_nc, double e_ack)
    : e_tx(e_tx), e_rx(e_rx), e_nc(e_nc), e_ack(e_ack) {
    detail::require_nonnegative_finite(e_tx, "e_tx");
    detail::require_nonnegative_finite(e_rx, "e_rx");
    detail::require_nonnegative_finite(e_nc, "e_nc");
    detail::require_nonnegative_finite(e_ack, "e_ack");
}

bool is_valid_state(const DofState& s, Scheme scheme, int n, int x) {
    if (s.m < 0 || s.k < 0 || s.l < 0) return false;
    switch (scheme) {
        case Scheme::CodeRelayOnly:
            return s.m + s.k + s.l <= n;
        case Scheme::CodeSourceOnly:
            return s.m + s.k <= n && s.k + s.l <= x;
        case Scheme::CodeBoth:
            // fluid model has no chain states; accept anything within bounds
            return s.m + s.k <= n;
    }
    return false;
}

SchemeConfig::SchemeConfig(Scheme scheme, int n, int x, double alpha)
    : scheme(scheme), n(n), x(x), alpha(alpha) {
    if (n < 1) throw InvalidParameter("n must be >= 1, got " + std::to_string(n));
    if (x < 1 || x > n)
        throw InvalidParameter("x must satisfy 1 <= x <= n, got " + std::to_string(x));
    detail::require_probability(alpha, "alpha");
    if (scheme == Scheme::CodeBoth && alpha == 0.0)
        throw InvalidParameter("alpha must be in (0,1] for the both-coding scheme");
}

double energy_rate(Scheme scheme, double alpha, const EnergyParams& en) {
    detail::require_probability(alpha, "alpha");
    const double relay_on = (alpha == 1.0) ? 0.0 : 1.0;
    const double listen = alpha * relay_on * en.e_rx;
    switch (scheme) {
        case Scheme::CodeBoth:
            return en.e_tx + en.e_nc + listen;
        case Scheme::CodeRelayOnly:
            return en.e_tx + listen + (1.0 - alpha) * en.e_nc;
        case Scheme::CodeSourceOnly:
            return en.e_tx + listen + alpha * en.e_nc;
    }
    throw InvalidParameter("unknown scheme");
}

}  // namespace relaync
