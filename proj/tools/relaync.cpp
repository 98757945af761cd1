// Command-line front end for the relay-channel coding-placement analyzer.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "relaync/csvio.hpp"
#include "relaync/figures.hpp"
#include "relaync/fluidflow.hpp"
#include "relaync/optimize.hpp"
#include "relaync/simulate.hpp"
#include "relaync/solve.hpp"
#include "relaync/sweep.hpp"

namespace {

using namespace relaync;

struct CommonArgs {
    std::string scheme = "relay-only";
    int n = 1;
    int x = 0;  // 0: default to n
    std::optional<double> alpha;
    double p_sd = 0.5;
    double p_sr = 0.8;
    double p_rd = 0.8;
    double e_tx = 1, e_rx = 1, e_nc = 1, e_ack = 1;

    Scheme parsed_scheme() const { return scheme_from_string(scheme); }
    ChannelParams channel() const { return {p_sd, p_sr, p_rd}; }
    EnergyParams energy() const { return {e_tx, e_rx, e_nc, e_ack}; }
    int effective_x() const { return x > 0 ? x : n; }
};

void add_channel_flags(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--scheme", args.scheme, "both, relay-only, or source-only");
    cmd->add_option("--n", args.n, "number of data packets");
    cmd->add_option("--x", args.x, "relay memory units (source-only; default n)");
    cmd->add_option("--psd", args.p_sd, "s->d success probability");
    cmd->add_option("--psr", args.p_sr, "s->r success probability");
    cmd->add_option("--prd", args.p_rd, "r->d success probability");
    cmd->add_option("--etx", args.e_tx, "transmission energy per packet");
    cmd->add_option("--erx", args.e_rx, "reception energy per packet at r");
    cmd->add_option("--enc", args.e_nc, "coded-packet generation energy");
    cmd->add_option("--eack", args.e_ack, "acknowledgement listening energy");
}

double default_alpha(const CommonArgs& args) {
    if (args.alpha) return *args.alpha;
    if (args.parsed_scheme() == Scheme::CodeBoth)
        return optimal_rate(args.channel()).alpha;
    return 1.0;
}

void print_rows(const std::vector<EvalRow>& rows) {
    std::cout << kCsvHeader << "\n";
    for (const auto& row : rows) std::cout << row.to_csv() << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Throughput and energy analysis of coding placements in the "
                 "three-node packet erasure relay channel"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string objective = "time";
    int grid_points = 201;
    std::string spec_path, out_path, figure_id, sim_mode = "packet";
    std::int64_t trials = 100000;
    std::uint64_t seed = 1, field_size = 65521;
    std::int64_t max_slots = 1000000;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate one configuration");
    add_channel_flags(eval_cmd, args);
    eval_cmd->add_option("--alpha", args.alpha, "source time-share");

    auto* opt_cmd = app.add_subcommand("optimize", "optimize alpha for one configuration");
    add_channel_flags(opt_cmd, args);
    opt_cmd->add_option("--objective", objective, "time or energy");
    opt_cmd->add_option("--grid-points", grid_points, "alpha grid resolution");

    auto* sweep_cmd = app.add_subcommand("sweep", "run a cross-product sweep from a spec file");
    sweep_cmd->add_option("spec", spec_path, "flat key=value sweep spec")->required();
    sweep_cmd->add_option("--out", out_path, "output CSV path")->required();

    auto* fig_cmd = app.add_subcommand("figure", "emit a prebuilt comparison dataset");
    fig_cmd->add_option("id", figure_id, "dataset id (see --list)")->required();
    fig_cmd->add_option("--out", out_path, "output CSV path (default <id>.csv)");

    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of one configuration");
    add_channel_flags(sim_cmd, args);
    sim_cmd->add_option("--alpha", args.alpha, "source time-share");
    sim_cmd->add_option("--mode", sim_mode, "packet (exact rank tracking) or chain");
    sim_cmd->add_option("--trials", trials, "number of trials");
    sim_cmd->add_option("--seed", seed, "master seed");
    sim_cmd->add_option("--field-size", field_size, "prime field size");
    sim_cmd->add_option("--max-slots", max_slots, "per-trial slot cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (eval_cmd->parsed()) {
        const SchemeConfig cfg(args.parsed_scheme(), args.n, args.effective_x(),
                               default_alpha(args));
        EvalRow row{cfg, args.channel(), args.energy(),
                    evaluate(cfg, args.channel(), args.energy()), std::nullopt, ""};
        print_rows({row});
    } else if (opt_cmd->parsed()) {
        const Scheme scheme = args.parsed_scheme();
        const Objective kind = objective_from_string(objective);
        double alpha_star;
        if (scheme == Scheme::CodeBoth) {
            const FlowSolution sol = kind == Objective::Time
                                         ? optimal_rate(args.channel())
                                         : min_delivery_energy(args.channel(),
                                                               args.energy());
            alpha_star = sol.alpha;
        } else {
            alpha_star = optimize_alpha(scheme, args.n, args.effective_x(),
                                        args.channel(), args.energy(), kind,
                                        grid_points)
                             .alpha_star;
        }
        const SchemeConfig cfg(scheme, args.n, args.effective_x(), alpha_star);
        EvalRow row{cfg, args.channel(), args.energy(),
                    evaluate(cfg, args.channel(), args.energy()), std::nullopt, ""};
        print_rows({row});
    } else if (sweep_cmd->parsed()) {
        std::ifstream spec_in(spec_path);
        if (!spec_in)
            throw InvalidParameter("cannot open sweep spec file '" + spec_path + "'");
        std::string bytes((std::istreambuf_iterator<char>(spec_in)),
                          std::istreambuf_iterator<char>());
        std::istringstream spec_stream(bytes);
        const SweepSpec spec = SweepSpec::parse(spec_stream);
        std::cerr << "sweep: " << spec.cardinality() << " combinations\n";
        write_sweep_csv(run_sweep(spec), out_path, spec, fnv1a_hash(bytes));
    } else if (fig_cmd->parsed()) {
        const FigureId id = figure_from_string(figure_id);
        if (out_path.empty()) out_path = figure_id + ".csv";
        write_figure(id, out_path);
    } else if (sim_cmd->parsed()) {
        const SchemeConfig cfg(args.parsed_scheme(), args.n, args.effective_x(),
                               default_alpha(args));
        SimConfig sim;
        sim.trials = trials;
        sim.master_seed = seed;
        sim.field_size = field_size;
        sim.max_slots = max_slots;
        EvalRow row{cfg, args.channel(), args.energy(), EvalResult{},
                    std::nullopt, sim_mode};
        row.result = evaluate(cfg, args.channel(), args.energy());
        if (sim_mode == "chain") {
            if (cfg.scheme == Scheme::CodeBoth)
                throw InvalidParameter("chain-mode simulation requires relay-only or source-only");
            const AbsorbingChain chain =
                cfg.scheme == Scheme::CodeRelayOnly
                    ? build_relay_chain(cfg.n, cfg.alpha, args.channel())
                    : build_source_chain(cfg.n, cfg.x, cfg.alpha, args.channel());
            row.sim = simulate_chain(chain, args.energy(), sim);
        } else if (sim_mode == "packet") {
            row.sim = simulate_packets(cfg, args.channel(), args.energy(), sim);
        } else {
            throw InvalidParameter("--mode must be packet or chain, got '" +
                                   sim_mode + "'");
        }
        print_rows({row});
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonAbsorbingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const SingularSystemError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const TruncatedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
