#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "relaync/csvio.hpp"
#include "relaync/model.hpp"
#include "relaync/simulate.hpp"

namespace relaync {

/// Cross-product sweep description, parsed from a flat key=value file.
///
/// Range-valued keys (n, x, alpha, p_sd, p_sr, p_rd) accept a scalar
/// ("0.5"), an explicit list ("0.1,0.2,0.5"), or an inclusive linear range
/// ("0.1:1.0:0.05"). scheme accepts a comma list of scheme names. Energy
/// keys are scalars. simulate=true toggles the packet-level Monte Carlo
/// (columns sim_*), configured by trials, seed, field_size, max_slots.
struct SweepSpec {
    std::vector<Scheme> schemes{Scheme::CodeRelayOnly};
    std::vector<int> n_values{1};
    std::vector<int> x_values;  // empty: x = n per row
    std::vector<double> alpha_values{1.0};
    std::vector<double> p_sd_values{0.5};
    std::vector<double> p_sr_values{0.8};
    std::vector<double> p_rd_values{0.8};
    EnergyParams energy;
    bool simulate = false;
    SimConfig sim;
    std::int64_t max_rows = 100000;

    static SweepSpec parse(std::istream& in);
    static SweepSpec parse_file(const std::string& path);

    /// Cross-product size before invalid-combination skipping.
    std::int64_t cardinality() const;
};

/// Evaluate the cross-product in deterministic lexicographic parameter
/// order (scheme, n, x, alpha, p_sd, p_sr, p_rd). Combinations that are
/// structurally invalid (x > n for source-only, alpha = 0 for both-coding)
/// are skipped; configurations that cannot absorb yield rows with infinite
/// completion time.
std::vector<EvalRow> run_sweep(const SweepSpec& spec);

/// Write rows (with header) to out_path and a flat key=value manifest to
/// out_path + ".manifest" recording timestamp, seed, spec hash and version.
void write_sweep_csv(const std::vector<EvalRow>& rows, const std::string& out_path,
                     const SweepSpec& spec, std::uint64_t spec_hash);

/// FNV-1a over raw bytes; used to fingerprint the sweep spec file.
std::uint64_t fnv1a_hash(std::string_view bytes);

}  // namespace relaync
