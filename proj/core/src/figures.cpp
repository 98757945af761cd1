#include "relaync/figures.hpp"

#include <fstream>
#include <limits>

#include "relaync/fluidflow.hpp"
#include "relaync/optimize.hpp"

namespace relaync {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

EnergyParams unit_energy() { return EnergyParams(1, 1, 1, 1); }

EvalRow make_row(Scheme scheme, int n, int x, double alpha, const ChannelParams& ch,
                 const EnergyParams& en, const std::string& label) {
    const SchemeConfig cfg(scheme, n, x, alpha);
    EvalRow row{cfg, ch, en, EvalResult{}, std::nullopt, label};
    try {
        row.result = evaluate(cfg, ch, en);
    } catch (const NonAbsorbingError&) {
        row.result.t_total = kInf;
        row.result.t_per_packet = kInf;
        row.result.e_total = kInf;
        row.result.e_per_packet = kInf;
        row.result.throughput = 0.0;
        row.result.solver_path = "non-absorbing";
    }
    row.result.passage_times.clear();  // not serialized; keep rows light
    return row;
}

void alpha_curve(std::vector<EvalRow>& rows, Scheme scheme, int n, int x,
                 const ChannelParams& ch, const std::string& label) {
    const EnergyParams en = unit_energy();
    for (int i = 0; i <= 50; ++i)
        rows.push_back(make_row(scheme, n, x, i / 50.0, ch, en, label));
}

std::vector<double> psd_grid() {
    std::vector<double> grid;
    for (int i = 1; i <= 20; ++i) grid.push_back(i * 0.05);
    return grid;
}

EvalRow optimized_row(Scheme scheme, int n, int x, const ChannelParams& ch,
                      Objective kind, const std::string& label) {
    const EnergyParams en = unit_energy();
    if (scheme == Scheme::CodeBoth) {
        const FlowSolution sol = kind == Objective::Time
                                     ? optimal_rate(ch)
                                     : min_delivery_energy(ch, en);
        return make_row(scheme, 1, 1, sol.alpha, ch, en, label);
    }
    const AlphaOptimum opt = optimize_alpha(scheme, n, x, ch, en, kind);
    return make_row(scheme, n, x, opt.alpha_star, ch, en, label);
}

// One row per (curve, p_sd) at the per-point optimal alpha.
std::vector<EvalRow> comparison_rows(Objective kind) {
    std::vector<EvalRow> rows;
    for (double p_sd : psd_grid()) {
        const ChannelParams ch(p_sd, 0.8, 0.8);
        rows.push_back(optimized_row(Scheme::CodeBoth, 1, 1, ch, kind, "both"));
        rows.push_back(
            optimized_row(Scheme::CodeRelayOnly, 1, 1, ch, kind, "relay n=1"));
        rows.push_back(
            optimized_row(Scheme::CodeRelayOnly, 2, 2, ch, kind, "relay n=2 x=2"));
        rows.push_back(optimized_row(Scheme::CodeSourceOnly, 10, 10, ch, kind,
                                     "source n=10 x=10"));
    }
    return rows;
}

}  // namespace

FigureId figure_from_string(std::string_view id) {
    if (id == "fig3-relay-T") return FigureId::RelayCompletionVsAlpha;
    if (id == "fig4-source-T") return FigureId::SourceCompletionVsAlpha;
    if (id == "fig5-source-channels") return FigureId::SourceChannelsVsAlpha;
    if (id == "fig6-rates") return FigureId::RatesVsPsd;
    if (id == "fig7-alpha") return FigureId::AlphaStarVsPsd;
    if (id == "fig8-energy") return FigureId::EnergyVsPsd;
    if (id == "fig9-energy-per-rate") return FigureId::EnergyPerRateVsPsd;
    if (id == "fig10-11-energy-opt") return FigureId::EnergyOptimizedVsPsd;
    throw InvalidParameter("unknown figure id '" + std::string(id) + "'");
}

std::vector<std::string> figure_names() {
    return {"fig3-relay-T",  "fig4-source-T",       "fig5-source-channels",
            "fig6-rates",    "fig7-alpha",          "fig8-energy",
            "fig9-energy-per-rate", "fig10-11-energy-opt"};
}

std::vector<EvalRow> figure_rows(FigureId id) {
    std::vector<EvalRow> rows;
    switch (id) {
        case FigureId::RelayCompletionVsAlpha: {
            const ChannelParams ch(0.5, 0.8, 0.8);
            for (int n : {1, 2, 5, 10, 20})
                alpha_curve(rows, Scheme::CodeRelayOnly, n, n, ch,
                            "n=" + std::to_string(n));
            break;
        }
        case FigureId::SourceCompletionVsAlpha: {
            const ChannelParams ch(0.25, 0.8, 0.8);
            for (int x : {1, 2, 3, 10})
                alpha_curve(rows, Scheme::CodeSourceOnly, 10, x, ch,
                            "n=10 x=" + std::to_string(x));
            for (int n : {2, 5, 20})
                alpha_curve(rows, Scheme::CodeSourceOnly, n, n, ch,
                            "n=" + std::to_string(n) + " x=" + std::to_string(n));
            break;
        }
        case FigureId::SourceChannelsVsAlpha: {
            const std::pair<double, double> combos[] = {
                {0.8, 0.8}, {0.9, 0.9}, {0.9, 0.5}, {0.5, 0.9}, {0.5, 0.5}};
            for (const auto& [p_sr, p_rd] : combos) {
                const ChannelParams ch(0.5, p_sr, p_rd);
                alpha_curve(rows, Scheme::CodeSourceOnly, 10, 10, ch,
                            "p_sr=" + format_double(p_sr) +
                                " p_rd=" + format_double(p_rd));
            }
            break;
        }
        case FigureId::RatesVsPsd:
        case FigureId::AlphaStarVsPsd:
        case FigureId::EnergyVsPsd:
        case FigureId::EnergyPerRateVsPsd:
            // all read off the same throughput-optimal operating points
            rows = comparison_rows(Objective::Time);
            break;
        case FigureId::EnergyOptimizedVsPsd:
            rows = comparison_rows(Objective::Energy);
            break;
    }
    return rows;
}

void write_figure(FigureId id, const std::string& out_path) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
    out << kCsvHeader << "\n";
    for (const auto& row : figure_rows(id)) out << row.to_csv() << "\n";
}

}  // namespace relaync
