#include "relaync/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <thread>
#include <vector>

namespace relaync {

namespace {

bool is_prime(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("RELAYNC_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Per-trial outcomes are filled into index-addressed vectors and reduced
// sequentially, so results do not depend on the thread count.
struct TrialOutcome {
    double slots = 0.0;
    double energy = 0.0;
    bool truncated = false;
};

template <typename TrialFn>
std::vector<TrialOutcome> run_trials(const SimConfig& sim, TrialFn&& trial_fn) {
    std::vector<TrialOutcome> outcomes(sim.trials);
    const int threads = std::min<std::int64_t>(resolve_threads(sim.threads),
                                               sim.trials);
    if (threads <= 1) {
        for (std::int64_t t = 0; t < sim.trials; ++t) outcomes[t] = trial_fn(t);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (std::int64_t t = w; t < sim.trials; t += threads)
                    outcomes[t] = trial_fn(t);
            });
        }
        for (auto& th : pool) th.join();
    }
    return outcomes;
}

SimEstimate reduce(const std::vector<TrialOutcome>& outcomes, bool fail_on_trunc) {
    SimEstimate est;
    const double count = static_cast<double>(outcomes.size());
    double sum_t = 0.0, sum_e = 0.0;
    for (const auto& o : outcomes) {
        sum_t += o.slots;
        sum_e += o.energy;
        if (o.truncated) ++est.truncated_trials;
    }
    if (est.truncated_trials > 0 && fail_on_trunc)
        throw TruncatedError(std::to_string(est.truncated_trials) +
                             " trial(s) exceeded max_slots");
    est.mean_t = sum_t / count;
    est.mean_e = sum_e / count;
    if (outcomes.size() > 1) {
        double ss_t = 0.0, ss_e = 0.0;
        for (const auto& o : outcomes) {
            ss_t += (o.slots - est.mean_t) * (o.slots - est.mean_t);
            ss_e += (o.energy - est.mean_e) * (o.energy - est.mean_e);
        }
        est.std_err_t = std::sqrt(ss_t / (count * (count - 1.0)));
        est.std_err_e = std::sqrt(ss_e / (count * (count - 1.0)));
    }
    return est;
}

// Incremental row reduction over the prime field F_q; tracks the rank of
// the offered coefficient vectors.
class RankTracker {
public:
    RankTracker(int dim, std::uint64_t q) : dim_(dim), q_(q) {}

    int rank() const { return static_cast<int>(rows_.size()); }

    // Returns true when the vector was innovative (rank increased).
    bool offer(std::vector<std::uint64_t> vec) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::uint64_t factor = vec[pivots_[r]];
            if (factor == 0) continue;
            for (int c = 0; c < dim_; ++c)
                vec[c] = sub(vec[c], mul(factor, rows_[r][c]));
        }
        int pivot = -1;
        for (int c = 0; c < dim_; ++c)
            if (vec[c] != 0) { pivot = c; break; }
        if (pivot < 0) return false;
        const std::uint64_t inv_pivot = inv(vec[pivot]);
        for (int c = 0; c < dim_; ++c) vec[c] = mul(vec[c], inv_pivot);
        rows_.push_back(std::move(vec));
        pivots_.push_back(pivot);
        return true;
    }

private:
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % q_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return (a + q_ - b) % q_;
    }
    std::uint64_t inv(std::uint64_t a) const {  // Fermat: a^(q-2)
        std::uint64_t result = 1, base = a, e = q_ - 2;
        while (e > 0) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    int dim_;
    std::uint64_t q_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<int> pivots_;
};

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master_seed, std::int64_t trial) {
    return splitmix64(master_seed ^ splitmix64(static_cast<std::uint64_t>(trial)));
}

void SimConfig::validate(int n) const {
    if (trials < 1)
        throw InvalidParameter("trials must be >= 1, got " + std::to_string(trials));
    if (!is_prime(field_size) || field_size > 2147483647ULL)
        throw InvalidParameter("field_size must be a prime <= 2^31-1, got " +
                               std::to_string(field_size));
    if (max_slots < n)
        throw InvalidParameter("max_slots must be >= n");
}

SimEstimate simulate_chain(const AbsorbingChain& chain, const EnergyParams& en,
                           const SimConfig& sim) {
    sim.validate(chain.n);
    // Cumulative transition masses per row for inverse-CDF sampling.
    std::vector<std::vector<std::pair<double, int>>> cdf(chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i) {
        double acc = 0.0;
        for (const auto& [j, p] : chain.rows[i]) {
            acc += p;
            cdf[i].emplace_back(acc, j);
        }
    }
    const double e_use = energy_rate(chain.scheme, chain.alpha, en);

    auto outcomes = run_trials(sim, [&](std::int64_t trial) {
        std::mt19937_64 rng(trial_seed(sim.master_seed, trial));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        TrialOutcome out;
        int state = chain.start_index;
        std::int64_t slots = 0;
        while (state != 0 && !is_absorbing(chain.states[state], chain.n)) {
            if (slots >= sim.max_slots) {
                out.truncated = true;
                break;
            }
            const double u = unit(rng);
            int next = cdf[state].back().second;
            for (const auto& [acc, j] : cdf[state])
                if (u < acc) { next = j; break; }
            state = next;
            ++slots;
        }
        out.slots = static_cast<double>(slots);
        out.energy = slots * e_use + en.e_ack;
        return out;
    });
    return reduce(outcomes, sim.fail_on_truncation);
}

SimEstimate simulate_packets(const SchemeConfig& cfg, const ChannelParams& ch,
                             const EnergyParams& en, const SimConfig& sim) {
    sim.validate(cfg.n);
    const int n = cfg.n;
    const std::uint64_t q = sim.field_size;
    const bool relay_active = cfg.alpha < 1.0;

    auto outcomes = run_trials(sim, [&](std::int64_t trial) {
        std::mt19937_64 rng(trial_seed(sim.master_seed, trial));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::uniform_int_distribution<std::uint64_t> coeff(0, q - 1);
        std::uniform_int_distribution<int> pick_packet(0, n - 1);

        RankTracker sink(n, q);
        // relay state: uncoded packet set (relay-only), mixture queue
        // (source-only), or received-subspace basis (both-coding)
        std::vector<char> relay_has(n, 0);
        std::vector<int> relay_set;
        std::vector<std::vector<std::uint64_t>> relay_queue;
        RankTracker relay_basis(n, q);
        std::vector<std::vector<std::uint64_t>> relay_rows;  // basis copies

        auto random_vector = [&] {
            std::vector<std::uint64_t> v(n);
            for (int c = 0; c < n; ++c) v[c] = coeff(rng);
            return v;
        };
        auto unit_vector = [&](int idx) {
            std::vector<std::uint64_t> v(n, 0);
            v[idx] = 1;
            return v;
        };

        TrialOutcome out;
        std::int64_t slots = 0, source_slots = 0, coded_packets = 0;
        while (sink.rank() < n) {
            if (slots >= sim.max_slots) {
                out.truncated = true;
                break;
            }
            ++slots;
            const bool source_turn = relay_active ? unit(rng) < cfg.alpha : true;
            if (source_turn) {
                ++source_slots;
                std::vector<std::uint64_t> payload;
                int uncoded_idx = -1;
                if (cfg.scheme == Scheme::CodeRelayOnly) {
                    uncoded_idx = pick_packet(rng);
                    payload = unit_vector(uncoded_idx);
                } else {
                    payload = random_vector();
                    ++coded_packets;
                }
                const bool d_gets = unit(rng) < ch.p_sd;
                const bool r_gets = unit(rng) < ch.p_sr;
                if (relay_active && r_gets) {
                    switch (cfg.scheme) {
                        case Scheme::CodeRelayOnly:
                            if (!relay_has[uncoded_idx]) {
                                relay_has[uncoded_idx] = 1;
                                relay_set.push_back(uncoded_idx);
                            }
                            break;
                        case Scheme::CodeSourceOnly:
                            if (static_cast<int>(relay_queue.size()) < cfg.x)
                                relay_queue.push_back(payload);
                            // else: queue full, mixture dropped
                            break;
                        case Scheme::CodeBoth: {
                            std::vector<std::uint64_t> copy = payload;
                            if (relay_basis.offer(payload))
                                relay_rows.push_back(std::move(copy));
                            break;
                        }
                    }
                }
                if (d_gets) sink.offer(std::move(payload));
            } else {
                // relay slot
                switch (cfg.scheme) {
                    case Scheme::CodeRelayOnly: {
                        ++coded_packets;  // the relay codes on its slots
                        if (relay_set.empty()) break;  // wasted slot
                        std::vector<std::uint64_t> mix(n, 0);
                        for (int idx : relay_set)
                            mix[idx] = coeff(rng);
                        if (unit(rng) < ch.p_rd) sink.offer(std::move(mix));
                        break;
                    }
                    case Scheme::CodeSourceOnly: {
                        if (relay_queue.empty()) break;  // wasted slot
                        std::uniform_int_distribution<std::size_t> pick(
                            0, relay_queue.size() - 1);
                        const std::size_t chosen = pick(rng);
                        std::vector<std::uint64_t> payload =
                            std::move(relay_queue[chosen]);
                        relay_queue[chosen] = std::move(relay_queue.back());
                        relay_queue.pop_back();  // dropped once transmitted
                        if (unit(rng) < ch.p_rd) sink.offer(std::move(payload));
                        break;
                    }
                    case Scheme::CodeBoth: {
                        ++coded_packets;
                        if (relay_rows.empty()) break;
                        std::vector<std::uint64_t> mix(n, 0);
                        for (const auto& row : relay_rows) {
                            const std::uint64_t w = coeff(rng);
                            for (int c = 0; c < n; ++c)
                                mix[c] = (mix[c] + w * row[c]) % q;
                        }
                        if (unit(rng) < ch.p_rd) sink.offer(std::move(mix));
                        break;
                    }
                }
            }
        }
        out.slots = static_cast<double>(slots);
        out.energy = slots * en.e_tx + coded_packets * en.e_nc + en.e_ack +
                     (relay_active ? source_slots * en.e_rx : 0.0);
        return out;
    });
    return reduce(outcomes, sim.fail_on_truncation);
}

}  // namespace relaync
