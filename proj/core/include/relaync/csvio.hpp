#pragma once

#include <optional>
#include <string>

#include "relaync/model.hpp"
#include "relaync/simulate.hpp"
#include "relaync/solve.hpp"

namespace relaync {

/// Shortest round-trip decimal representation (std::to_chars), so CSV output
/// is byte-deterministic across runs.
std::string format_double(double v);

inline constexpr const char* kCsvHeader =
    "scheme,n,x,alpha,p_sd,p_sr,p_rd,e_tx,e_rx,e_nc,e_ack,"
    "t_total,t_per_packet,throughput,e_total,e_per_packet,"
    "sim_mean_T,sim_stderr_T,sim_mean_E,sim_stderr_E,"
    "state_count,solver_path,curve_label";

/// One fully evaluated configuration, ready for CSV serialization.
struct EvalRow {
    SchemeConfig cfg;
    ChannelParams ch;
    EnergyParams en;
    EvalResult result;
    std::optional<SimEstimate> sim;
    std::string curve_label;

    std::string to_csv() const;
};

}  // namespace relaync
