#include "relaync/sweep.hpp"

#include <cmath>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>

namespace relaync {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) parts.push_back(trim(part));
    return parts;
}

double parse_double(const std::string& s, const std::string& key) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InvalidParameter("key '" + key + "': cannot parse number '" + s + "'");
    }
}

std::vector<double> parse_range(const std::string& value, const std::string& key) {
    if (value.find(':') != std::string::npos) {
        const auto parts = split(value, ':');
        if (parts.size() != 3)
            throw InvalidParameter("key '" + key + "': range must be start:stop:step");
        const double start = parse_double(parts[0], key);
        const double stop = parse_double(parts[1], key);
        const double step = parse_double(parts[2], key);
        if (step <= 0.0)
            throw InvalidParameter("key '" + key + "': range step must be > 0");
        std::vector<double> out;
        for (double v = start; v <= stop + step * 1e-9; v += step)
            out.push_back(std::min(v, stop));
        if (out.empty())
            throw InvalidParameter("key '" + key + "': empty range");
        return out;
    }
    std::vector<double> out;
    for (const auto& part : split(value, ','))
        if (!part.empty()) out.push_back(parse_double(part, key));
    if (out.empty()) throw InvalidParameter("key '" + key + "': empty value");
    return out;
}

std::vector<int> parse_int_range(const std::string& value, const std::string& key) {
    std::vector<int> out;
    for (double v : parse_range(value, key)) {
        const int i = static_cast<int>(std::lround(v));
        if (std::abs(v - i) > 1e-9)
            throw InvalidParameter("key '" + key + "': expected integer values");
        out.push_back(i);
    }
    return out;
}

bool parse_bool(const std::string& value, const std::string& key) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw InvalidParameter("key '" + key + "': expected true or false, got '" +
                           value + "'");
}

}  // namespace

std::uint64_t fnv1a_hash(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

SweepSpec SweepSpec::parse(std::istream& in) {
    SweepSpec spec;
    double e_tx = 1, e_rx = 1, e_nc = 1, e_ack = 1;
    std::string line;
    int line_no = 0;
    std::vector<std::string> bad_keys;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw InvalidParameter("sweep spec line " + std::to_string(line_no) +
                                   ": expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));

        if (key == "scheme") {
            spec.schemes.clear();
            for (const auto& name : split(value, ','))
                spec.schemes.push_back(scheme_from_string(name));
        } else if (key == "n") {
            spec.n_values = parse_int_range(value, key);
        } else if (key == "x") {
            spec.x_values = parse_int_range(value, key);
        } else if (key == "alpha") {
            spec.alpha_values = parse_range(value, key);
        } else if (key == "p_sd") {
            spec.p_sd_values = parse_range(value, key);
        } else if (key == "p_sr") {
            spec.p_sr_values = parse_range(value, key);
        } else if (key == "p_rd") {
            spec.p_rd_values = parse_range(value, key);
        } else if (key == "e_tx") {
            e_tx = parse_double(value, key);
        } else if (key == "e_rx") {
            e_rx = parse_double(value, key);
        } else if (key == "e_nc") {
            e_nc = parse_double(value, key);
        } else if (key == "e_ack") {
            e_ack = parse_double(value, key);
        } else if (key == "simulate") {
            spec.simulate = parse_bool(value, key);
        } else if (key == "trials") {
            spec.sim.trials = static_cast<std::int64_t>(parse_double(value, key));
        } else if (key == "seed") {
            spec.sim.master_seed = static_cast<std::uint64_t>(parse_double(value, key));
        } else if (key == "field_size") {
            spec.sim.field_size = static_cast<std::uint64_t>(parse_double(value, key));
        } else if (key == "max_slots") {
            spec.sim.max_slots = static_cast<std::int64_t>(parse_double(value, key));
        } else if (key == "max_rows") {
            spec.max_rows = static_cast<std::int64_t>(parse_double(value, key));
        } else {
            bad_keys.push_back(key);
        }
    }
    if (!bad_keys.empty()) {
        std::string msg = "unknown sweep spec key(s):";
        for (const auto& k : bad_keys) msg += " " + k;
        throw InvalidParameter(msg);
    }
    spec.energy = EnergyParams(e_tx, e_rx, e_nc, e_ack);
    if (spec.cardinality() > spec.max_rows)
        throw InvalidParameter("sweep cross-product has " +
                               std::to_string(spec.cardinality()) +
                               " rows, above max_rows = " +
                               std::to_string(spec.max_rows));
    return spec;
}

SweepSpec SweepSpec::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot open sweep spec file '" + path + "'");
    return parse(in);
}

std::int64_t SweepSpec::cardinality() const {
    const std::int64_t x_count =
        x_values.empty() ? 1 : static_cast<std::int64_t>(x_values.size());
    return static_cast<std::int64_t>(schemes.size()) * n_values.size() * x_count *
           alpha_values.size() * p_sd_values.size() * p_sr_values.size() *
           p_rd_values.size();
}

std::vector<EvalRow> run_sweep(const SweepSpec& spec) {
    std::vector<EvalRow> rows;
    for (Scheme scheme : spec.schemes)
        for (int n : spec.n_values) {
            std::vector<int> xs = spec.x_values.empty() ? std::vector<int>{n}
                                                        : spec.x_values;
            if (scheme != Scheme::CodeSourceOnly) xs = {n};
            for (int x : xs) {
                if (x > n || x < 1) continue;
                for (double alpha : spec.alpha_values) {
                    if (scheme == Scheme::CodeBoth && alpha == 0.0) continue;
                    for (double p_sd : spec.p_sd_values)
                        for (double p_sr : spec.p_sr_values)
                            for (double p_rd : spec.p_rd_values) {
                                const ChannelParams ch(p_sd, p_sr, p_rd);
                                const SchemeConfig cfg(scheme, n, x, alpha);
                                EvalRow row{cfg, ch, spec.energy, EvalResult{},
                                            std::nullopt, ""};
                                try {
                                    row.result = evaluate(cfg, ch, spec.energy);
                                } catch (const NonAbsorbingError&) {
                                    row.result.t_total = kInf;
                                    row.result.t_per_packet = kInf;
                                    row.result.e_total = kInf;
                                    row.result.e_per_packet = kInf;
                                    row.result.throughput = 0.0;
                                    row.result.solver_path = "non-absorbing";
                                }
                                if (spec.simulate &&
                                    row.result.solver_path != "non-absorbing") {
                                    row.sim = simulate_packets(cfg, ch, spec.energy,
                                                               spec.sim);
                                }
                                rows.push_back(std::move(row));
                            }
                }
            }
        }
    return rows;
}

void write_sweep_csv(const std::vector<EvalRow>& rows, const std::string& out_path,
                     const SweepSpec& spec, std::uint64_t spec_hash) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
    out << kCsvHeader << "\n";
    for (const auto& row : rows) out << row.to_csv() << "\n";

    std::ofstream manifest(out_path + ".manifest");
    if (!manifest)
        throw std::runtime_error("cannot write manifest for '" + out_path + "'");
    manifest << "timestamp = " << std::time(nullptr) << "\n";
    manifest << "seed = " << spec.sim.master_seed << "\n";
    manifest << "spec_hash = " << spec_hash << "\n";
    manifest << "artifact_version = 0.1.0\n";
    manifest << "rows = " << rows.size() << "\n";
    manifest << "simulate = " << (spec.simulate ? "true" : "false") << "\n";
}

}  // namespace relaync
