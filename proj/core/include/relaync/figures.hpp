#pragma once

#include <string>
#include <vector>

#include "relaync/csvio.hpp"

namespace relaync {

/// Prebuilt sweep grids for the figure-style comparison datasets.
enum class FigureId {
    RelayCompletionVsAlpha,     // fig3-relay-T
    SourceCompletionVsAlpha,    // fig4-source-T
    SourceChannelsVsAlpha,      // fig5-source-channels
    RatesVsPsd,                 // fig6-rates
    AlphaStarVsPsd,             // fig7-alpha
    EnergyVsPsd,                // fig8-energy
    EnergyPerRateVsPsd,         // fig9-energy-per-rate
    EnergyOptimizedVsPsd,       // fig10-11-energy-opt
};

FigureId figure_from_string(std::string_view id);
std::vector<std::string> figure_names();

std::vector<EvalRow> figure_rows(FigureId id);

/// Compute the named dataset and write it as CSV (header + rows).
void write_figure(FigureId id, const std::string& out_path);

}  // namespace relaync
