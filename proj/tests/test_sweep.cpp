#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "relaync/figures.hpp"
#include "relaync/optimize.hpp"
#include "relaync/sweep.hpp"

using namespace relaync;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

int run_cli(const std::string& args) {
#ifdef RELAYNC_CLI_PATH
    const std::string cmd =
        std::string(RELAYNC_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status >= 0);
    return WEXITSTATUS(status);
#else
    (void)args;
    return -1;
#endif
}

}  // namespace

TEST_CASE("format_double round-trips and spells infinities") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(1.0 / 3.0) == format_double(1.0 / 3.0));
    CHECK(std::stod(format_double(0.1 + 0.2)) == 0.1 + 0.2);
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_double(std::nan("")) == "nan");
}

TEST_CASE("spec parsing: scalars, lists, ranges, unknown keys") {
    SUBCASE("scalar and list") {
        std::istringstream in(
            "scheme=relay-only,source-only\nn=2,5\nalpha=0.5\np_sd=0.25\n");
        const SweepSpec spec = SweepSpec::parse(in);
        REQUIRE(spec.schemes.size() == 2);
        CHECK(spec.schemes[1] == Scheme::CodeSourceOnly);
        CHECK(spec.n_values == std::vector<int>{2, 5});
        CHECK(spec.alpha_values == std::vector<double>{0.5});
        CHECK(spec.p_sd_values == std::vector<double>{0.25});
    }
    SUBCASE("inclusive range") {
        std::istringstream in("alpha=0.0:1.0:0.25\n");
        const SweepSpec spec = SweepSpec::parse(in);
        REQUIRE(spec.alpha_values.size() == 5);
        CHECK(spec.alpha_values.front() == 0.0);
        CHECK(spec.alpha_values.back() == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("unknown keys are rejected") {
        std::istringstream in("n=2\nbogus_key=1\n");
        CHECK_THROWS_AS(SweepSpec::parse(in), InvalidParameter);
    }
    SUBCASE("cardinality cap") {
        std::istringstream in("n=1:200:1\nalpha=0:1:0.001\nmax_rows=1000\n");
        CHECK_THROWS_AS(SweepSpec::parse(in), InvalidParameter);
    }
    SUBCASE("simulation keys") {
        std::istringstream in("simulate=true\ntrials=500\nseed=7\n");
        const SweepSpec spec = SweepSpec::parse(in);
        CHECK(spec.simulate);
        CHECK(spec.sim.trials == 500);
        CHECK(spec.sim.master_seed == 7);
    }
}

TEST_CASE("a single-point sweep reproduces a direct evaluation") {
    std::istringstream in(
        "scheme=source-only\nn=10\nx=3\nalpha=1\np_sd=0.25\np_sr=0.8\np_rd=0.8\n");
    const SweepSpec spec = SweepSpec::parse(in);
    const std::vector<EvalRow> rows = run_sweep(spec);
    REQUIRE(rows.size() == 1);
    const EvalResult direct =
        evaluate(SchemeConfig(Scheme::CodeSourceOnly, 10, 3, 1.0),
                 {0.25, 0.8, 0.8}, EnergyParams());
    CHECK(rows[0].result.t_total == direct.t_total);
    CHECK(rows[0].result.e_total == direct.e_total);
    CHECK(rows[0].result.state_count == direct.state_count);
}

TEST_CASE("alpha-sweep argmin agrees with the optimizer's grid stage") {
    std::istringstream in(
        "scheme=relay-only\nn=1\nalpha=0:1:0.005\np_sd=0.2\np_sr=0.8\np_rd=0.8\n");
    const std::vector<EvalRow> rows = run_sweep(SweepSpec::parse(in));
    REQUIRE(rows.size() == 201);
    double best_t = std::numeric_limits<double>::infinity();
    double best_alpha = 0.0;
    for (const EvalRow& row : rows)
        if (row.result.t_total < best_t) {
            best_t = row.result.t_total;
            best_alpha = row.cfg.alpha;
        }
    const AlphaOptimum opt = optimize_alpha(Scheme::CodeRelayOnly, 1, 1,
                                            {0.2, 0.8, 0.8}, EnergyParams(),
                                            Objective::Time);
    CHECK(std::abs(best_alpha - opt.alpha_star) <= 0.005 + 1e-12);
    CHECK(opt.objective <= best_t + 1e-12);
}

TEST_CASE("invalid combinations are skipped, dead channels yield inf rows") {
    std::istringstream in(
        "scheme=source-only\nn=2,3\nx=2,3\nalpha=1\np_sd=0.5\n");
    const std::vector<EvalRow> rows = run_sweep(SweepSpec::parse(in));
    CHECK(rows.size() == 3);  // x=3 with n=2 dropped
    std::istringstream dead(
        "scheme=relay-only\nn=2\nalpha=1\np_sd=0\np_sr=0.8\np_rd=0.8\n");
    const std::vector<EvalRow> dead_rows = run_sweep(SweepSpec::parse(dead));
    REQUIRE(dead_rows.size() == 1);
    CHECK(std::isinf(dead_rows[0].result.t_total));
    CHECK(dead_rows[0].result.solver_path == "non-absorbing");
}

TEST_CASE("simulate toggle fills the sim columns consistently") {
    std::istringstream in(
        "scheme=relay-only\nn=1\nalpha=1\np_sd=0.5\nsimulate=true\ntrials=20000\n");
    const std::vector<EvalRow> rows = run_sweep(SweepSpec::parse(in));
    REQUIRE(rows.size() == 1);
    REQUIRE(rows[0].sim.has_value());
    CHECK(std::abs(rows[0].sim->mean_t - rows[0].result.t_total) <=
          3.0 * rows[0].sim->std_err_t);
}

TEST_CASE("CSV output is byte-deterministic") {
    const std::string spec_text =
        "scheme=relay-only,source-only\nn=2\nalpha=0.5,1\np_sd=0.25,0.5\n"
        "simulate=true\ntrials=2000\nseed=3\n";
    auto render = [&] {
        std::istringstream in(spec_text);
        const SweepSpec spec = SweepSpec::parse(in);
        std::ostringstream out;
        out << kCsvHeader << '\n';
        for (const EvalRow& row : run_sweep(spec)) out << row.to_csv() << '\n';
        return out.str();
    };
    const std::string first = render();
    CHECK(first == render());
    // header and every row carry the full 23 columns
    std::istringstream lines(first);
    std::string line;
    while (std::getline(lines, line))
        CHECK(std::count(line.begin(), line.end(), ',') == 22);
}

TEST_CASE("manifest records the spec fingerprint") {
    std::istringstream in("scheme=relay-only\nn=1\nalpha=1\np_sd=0.5\n");
    const SweepSpec spec = SweepSpec::parse(in);
    const std::string path = "/tmp/relaync_test_sweep.csv";
    write_sweep_csv(run_sweep(spec), path, spec, fnv1a_hash("probe"));
    const std::string manifest = slurp(path + ".manifest");
    CHECK(manifest.find("spec_hash = ") != std::string::npos);
    CHECK(manifest.find("rows = 1") != std::string::npos);
    const std::string csv = slurp(path);
    CHECK(csv.rfind(kCsvHeader, 0) == 0);
}

TEST_CASE("figure datasets") {
    SUBCASE("names round-trip") {
        for (const std::string& name : figure_names())
            CHECK_NOTHROW(figure_from_string(name));
        CHECK_THROWS_AS(figure_from_string("fig99"), InvalidParameter);
    }
    SUBCASE("relay completion dataset has the advertised shape") {
        const std::vector<EvalRow> rows =
            figure_rows(FigureId::RelayCompletionVsAlpha);
        CHECK(rows.size() == 5 * 51);
        int inf_rows = 0;
        for (const EvalRow& row : rows) {
            CHECK(row.cfg.scheme == Scheme::CodeRelayOnly);
            if (std::isinf(row.result.t_total)) ++inf_rows;
        }
        CHECK(inf_rows == 5);  // alpha = 0 per curve
    }
    SUBCASE("write_figure emits a parseable file") {
        const std::string path = "/tmp/relaync_test_fig.csv";
        write_figure(FigureId::SourceChannelsVsAlpha, path);
        const std::string csv = slurp(path);
        CHECK(csv.rfind(kCsvHeader, 0) == 0);
        CHECK(std::count(csv.begin(), csv.end(), '\n') > 5);
    }
    SUBCASE("rate comparison stays above the direct link") {
        for (const EvalRow& row : figure_rows(FigureId::RatesVsPsd))
            if (row.cfg.scheme == Scheme::CodeBoth)
                CHECK(row.result.throughput >= row.ch.p_sd - 1e-9);
    }
}

#ifdef RELAYNC_CLI_PATH
TEST_CASE("command-line tool exit codes") {
    CHECK(run_cli("eval --scheme relay-only --n 1 --alpha 1 --psd 0.5") == 0);
    CHECK(run_cli("eval --scheme bogus --n 1") == 2);
    CHECK(run_cli("eval --scheme relay-only --n 1 --alpha 1 --psd 2.0") == 2);
    CHECK(run_cli("eval --scheme relay-only --n 2 --alpha 0 --psd 0.5") == 3);
    CHECK(run_cli("simulate --scheme relay-only --n 1 --alpha 1 --psd 0.001 "
                  "--trials 50 --max-slots 20") == 4);
    CHECK(run_cli("optimize --scheme source-only --n 4 --x 2 --psd 0.3") == 0);
    CHECK(run_cli("figure fig3-relay-T --out /tmp/relaync_cli_fig.csv") == 0);
    CHECK(run_cli("--help") == 0);
}
#endif
