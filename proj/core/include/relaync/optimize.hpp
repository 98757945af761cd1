#pragma once

#include <utility>
#include <vector>

#include "relaync/model.hpp"
#include "relaync/solve.hpp"

namespace relaync {

enum class Objective { Time, Energy };

const char* to_string(Objective o);
Objective objective_from_string(std::string_view name);

/// Result of the scalar search over the source time-share.
struct AlphaOptimum {
    double alpha_star = 1.0;
    double objective = 0.0;        // minimized value (t_total or e_total)
    Objective kind = Objective::Time;
    EvalResult at_optimum;         // full evaluation at alpha_star
    std::vector<std::pair<double, double>> curve;  // sampled (alpha, objective)
};

/// Minimize expected completion time or energy over alpha in [0,1] for the
/// given placement. Uniform grid including both endpoints, then
/// golden-section refinement around the best bracket to width 1e-5. The
/// alpha = 1 corner is always a separate candidate (the listening-energy
/// indicator makes the energy objective discontinuous there). Ties within
/// 1e-9 resolve toward larger alpha. Configurations where the chain cannot
/// absorb (e.g. alpha = 0 with no source slots) score +infinity.
AlphaOptimum optimize_alpha(Scheme scheme, int n, int x, const ChannelParams& ch,
                            const EnergyParams& en, Objective kind,
                            int grid_points = 201, bool keep_curve = false);

}  // namespace relaync
