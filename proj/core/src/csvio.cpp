#include "relaync/csvio.hpp"

#include <charconv>
#include <cmath>

namespace relaync {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string EvalRow::to_csv() const {
    std::string out;
    out.reserve(256);
    auto field = [&](const std::string& s) {
        out += s;
        out += ',';
    };
    auto num = [&](double v) { field(format_double(v)); };
    field(to_string(cfg.scheme));
    field(std::to_string(cfg.n));
    field(std::to_string(cfg.x));
    num(cfg.alpha);
    num(ch.p_sd);
    num(ch.p_sr);
    num(ch.p_rd);
    num(en.e_tx);
    num(en.e_rx);
    num(en.e_nc);
    num(en.e_ack);
    num(result.t_total);
    num(result.t_per_packet);
    num(result.throughput);
    num(result.e_total);
    num(result.e_per_packet);
    if (sim) {
        num(sim->mean_t);
        num(sim->std_err_t);
        num(sim->mean_e);
        num(sim->std_err_e);
    } else {
        out += ",,,,";
    }
    field(std::to_string(result.state_count));
    field(result.solver_path);
    out += curve_label;  // last column, no trailing comma
    return out;
}

}  // namespace relaync
