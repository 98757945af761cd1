#include "relaync/optimize.hpp"

#include <algorithm>
#include <limits>

namespace relaync {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double objective_value(const EvalResult& r, Objective kind) {
    return kind == Objective::Time ? r.t_total : r.e_total;
}

}  // namespace

const char* to_string(Objective o) {
    return o == Objective::Time ? "time" : "energy";
}

Objective objective_from_string(std::string_view name) {
    if (name == "time") return Objective::Time;
    if (name == "energy") return Objective::Energy;
    throw InvalidParameter("objective must be time or energy, got '" +
                           std::string(name) + "'");
}

AlphaOptimum optimize_alpha(Scheme scheme, int n, int x, const ChannelParams& ch,
                            const EnergyParams& en, Objective kind,
                            int grid_points, bool keep_curve) {
    if (grid_points < 11)
        throw InvalidParameter("grid_points must be >= 11, got " +
                               std::to_string(grid_points));

    AlphaOptimum out;
    out.kind = kind;

    auto eval_at = [&](double alpha) -> double {
        if (scheme == Scheme::CodeBoth && alpha == 0.0) return kInf;
        try {
            return objective_value(
                evaluate(SchemeConfig(scheme, n, x, alpha), ch, en), kind);
        } catch (const NonAbsorbingError&) {
            return kInf;
        }
    };

    std::vector<double> grid(grid_points);
    std::vector<double> values(grid_points);
    int best = -1;
    double best_val = kInf;
    for (int i = 0; i < grid_points; ++i) {
        grid[i] = static_cast<double>(i) / (grid_points - 1);
        values[i] = eval_at(grid[i]);
        // ties toward larger alpha (the grid is ascending)
        if (best < 0 || values[i] < best_val - 1e-9 ||
            (std::isfinite(values[i]) && values[i] <= best_val + 1e-9)) {
            best = i;
            best_val = std::min(best_val, values[i]);
        }
        if (keep_curve) out.curve.emplace_back(grid[i], values[i]);
    }
    if (best < 0 || !std::isfinite(best_val))
        throw NonAbsorbingError("objective is infinite on the whole alpha grid");

    // Golden-section refinement inside the bracketing interval, staying
    // clear of the alpha = 1 discontinuity (handled as an explicit corner).
    double lo = grid[std::max(0, best - 1)];
    double hi = grid[std::min(grid_points - 1, best + 1)];
    hi = std::min(hi, 1.0 - 1e-9);
    double refined_alpha = std::min(grid[best], hi);
    double refined_val = eval_at(refined_alpha);
    if (hi > lo) {
        constexpr double invphi = 0.6180339887498949;
        double a = lo, b = hi;
        double c = b - invphi * (b - a);
        double d = a + invphi * (b - a);
        double fc = eval_at(c), fd = eval_at(d);
        while (b - a > 1e-5) {
            if (fc < fd) {
                b = d; d = c; fd = fc;
                c = b - invphi * (b - a);
                fc = eval_at(c);
            } else {
                a = c; c = d; fc = fd;
                d = a + invphi * (b - a);
                fd = eval_at(d);
            }
        }
        const double mid = 0.5 * (a + b);
        const double fmid = eval_at(mid);
        if (fmid < refined_val) {
            refined_alpha = mid;
            refined_val = fmid;
        }
    }

    const double corner_val = eval_at(1.0);
    if (corner_val <= refined_val + 1e-9) {
        out.alpha_star = 1.0;
        out.objective = corner_val;
    } else {
        out.alpha_star = refined_alpha;
        out.objective = refined_val;
    }
    out.at_optimum = evaluate(SchemeConfig(scheme, n, x, out.alpha_star), ch, en);
    return out;
}

}  // namespace relaync
