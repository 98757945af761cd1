#include "relaync/fluidflow.hpp"

#include <algorithm>
#include <limits>

namespace relaync {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// c(R,a) numerator for the energy objectives, with the relay's listening
// term dropped at a = 1.
double energy_numerator(const EnergyParams& en, double alpha) {
    const double listen = (alpha == 1.0) ? 0.0 : alpha * en.e_rx;
    return en.e_tx + en.e_nc + listen;
}

// power = 1: energy per packet; power = 2: energy per packet per rate.
double energy_objective(const ChannelParams& ch, const EnergyParams& en,
                        double alpha, int power) {
    const double r = flow_rate_at_alpha(ch, alpha);
    if (r <= 0.0) return kInf;
    double denom = r;
    if (power == 2) denom *= r;
    return energy_numerator(en, alpha) / denom;
}

// Golden-section minimization on [lo, hi]; the objective is smooth there
// (the alpha = 1 discontinuity is handled by the caller as a separate
// candidate).
double golden_refine(const ChannelParams& ch, const EnergyParams& en, int power,
                     double lo, double hi) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = energy_objective(ch, en, c, power);
    double fd = energy_objective(ch, en, d, power);
    while (b - a > 1e-10) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - invphi * (b - a);
            fc = energy_objective(ch, en, c, power);
        } else {
            a = c; c = d; fc = fd;
            d = a + invphi * (b - a);
            fd = energy_objective(ch, en, d, power);
        }
    }
    return 0.5 * (a + b);
}

FlowSolution minimize_energy(const ChannelParams& ch, const EnergyParams& en,
                             int power) {
    // Coarse grid on (0,1), excluding the discontinuous corner.
    constexpr int kGrid = 1000;
    int best = -1;
    double best_val = kInf;
    auto alpha_at = [](int i) { return static_cast<double>(i + 1) / (kGrid + 1); };
    for (int i = 0; i < kGrid; ++i) {
        const double v = energy_objective(ch, en, alpha_at(i), power);
        if (v < best_val) { best_val = v; best = i; }
    }

    double interior_alpha = alpha_at(best < 0 ? kGrid - 1 : best);
    if (best >= 0) {
        const double lo = alpha_at(std::max(0, best - 1));
        const double hi = std::min(alpha_at(std::min(kGrid - 1, best + 1)),
                                   1.0 - 1e-12);
        interior_alpha = golden_refine(ch, en, power, lo, hi);
    }
    const double interior_val = energy_objective(ch, en, interior_alpha, power);
    const double corner_val = energy_objective(ch, en, 1.0, power);

    // Prefer the relay-off corner on ties.
    double alpha, value;
    if (corner_val <= interior_val + 1e-9) {
        alpha = 1.0;
        value = corner_val;
    } else {
        alpha = interior_alpha;
        value = interior_val;
    }
    const double rate = flow_rate_at_alpha(ch, alpha);
    return FlowSolution{rate, alpha, value, alpha < 1.0};
}

}  // namespace

double flow_rate_at_alpha(const ChannelParams& ch, double alpha) {
    const double broadcast = alpha * (ch.p_sr + ch.p_sd - ch.p_sr * ch.p_sd);
    const double relay_path = alpha * ch.p_sd + (1.0 - alpha) * ch.p_rd;
    return std::min(broadcast, relay_path);
}

FlowSolution optimal_rate(const ChannelParams& ch) {
    double rate, alpha;
    if (ch.p_sd <= ch.p_rd) {
        const double denom = ch.p_rd + ch.p_sr * (1.0 - ch.p_sd);
        if (denom <= 0.0) {
            // all links dead; no flow is possible
            return FlowSolution{0.0, 1.0, kInf, false};
        }
        rate = ch.p_rd * (ch.p_sr + ch.p_sd - ch.p_sd * ch.p_sr) / denom;
        alpha = ch.p_rd / denom;
        if (rate <= 0.0) return FlowSolution{0.0, 1.0, kInf, false};
    } else {
        rate = ch.p_sd;
        alpha = 1.0;
    }
    const double objective = rate > 0.0 ? 1.0 / rate : kInf;
    return FlowSolution{rate, alpha, objective, alpha < 1.0};
}

FlowSolution min_delivery_energy(const ChannelParams& ch, const EnergyParams& en) {
    return minimize_energy(ch, en, 1);
}

FlowSolution min_energy_per_rate(const ChannelParams& ch, const EnergyParams& en) {
    return minimize_energy(ch, en, 2);
}

}  // namespace relaync
