#include "relaync/solve.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include <cmath>
#include <deque>
#include <sstream>

#include "relaync/fluidflow.hpp"

namespace relaync {

namespace {

// Reverse reachability from S_T. Every transient state must reach the
// terminal, otherwise the first-passage times are not finite.
void check_absorbing(const AbsorbingChain& chain) {
    const int count = static_cast<int>(chain.size());
    std::vector<std::vector<int>> rev(count);
    for (int i = 0; i < count; ++i)
        for (const auto& [j, p] : chain.rows[i])
            if (j != i && p > 0.0) rev[j].push_back(i);

    std::vector<char> seen(count, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int u : rev[v])
            if (!seen[u]) {
                seen[u] = 1;
                queue.push_back(u);
            }
    }
    for (int i = 0; i < count; ++i) {
        if (!seen[i]) {
            const DofState s = chain.states[i];
            std::ostringstream msg;
            msg << "state (" << s.m << "," << s.k << "," << s.l
                << ") cannot reach the terminating state (alpha=" << chain.alpha
                << ")";
            throw NonAbsorbingError(msg.str());
        }
    }
}

}  // namespace

std::vector<double> first_passage_forward(const AbsorbingChain& chain) {
    if (!chain.topo_certified)
        throw SingularSystemError("forward substitution requires a topologically ordered chain");
    const int count = static_cast<int>(chain.size());
    std::vector<double> t(count, 0.0);
    // Non-self transitions go to strictly higher indices (or to S_T), so
    // solving from the back visits dependencies first.
    for (int i = count - 1; i >= 1; --i) {
        double self = 0.0;
        double acc = 1.0;
        for (const auto& [j, p] : chain.rows[i]) {
            if (j == i)
                self = p;
            else
                acc += p * t[j];
        }
        if (chain.prob(i, 0) == 1.0) {  // absorbing: completion already reached
            t[i] = 0.0;
            continue;
        }
        const double diag = 1.0 - self;
        if (!(diag > 0.0))
            throw NonAbsorbingError("self-loop probability 1 in a transient state");
        t[i] = acc / diag;
    }
    return t;
}

std::vector<double> first_passage_general(const AbsorbingChain& chain) {
    const int count = static_cast<int>(chain.size());
    const int transient = count - 1;  // indices 1..count-1
    Eigen::SparseMatrix<double> system(transient, transient);
    std::vector<Eigen::Triplet<double>> triplets;
    for (int i = 1; i < count; ++i) {
        double diag = 1.0;
        for (const auto& [j, p] : chain.rows[i]) {
            if (j == i)
                diag -= p;
            else if (j != 0)
                triplets.emplace_back(i - 1, j - 1, -p);
        }
        triplets.emplace_back(i - 1, i - 1, diag);
    }
    system.setFromTriplets(triplets.begin(), triplets.end());

    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(system);
    if (lu.info() != Eigen::Success)
        throw SingularSystemError("sparse LU factorization of I - P failed");
    Eigen::VectorXd rhs = Eigen::VectorXd::Ones(transient);
    // Absorbing states reach S_T in a zero-cost hop, not a slot.
    for (int i = 1; i < count; ++i)
        if (is_absorbing(chain.states[i], chain.n)) rhs[i - 1] = 0.0;
    Eigen::VectorXd sol = lu.solve(rhs);
    if (lu.info() != Eigen::Success)
        throw SingularSystemError("sparse LU back-substitution failed");

    std::vector<double> t(count, 0.0);
    for (int i = 1; i < count; ++i) t[i] = sol[i - 1];
    return t;
}

std::vector<double> first_passage(const AbsorbingChain& chain) {
    check_absorbing(chain);
    std::vector<double> t = chain.topo_certified ? first_passage_forward(chain)
                                                 : first_passage_general(chain);
    // Residual defined over transient, non-absorbing states only.
    double worst = 0.0;
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (is_absorbing(chain.states[i], chain.n)) continue;
        double lhs = t[i];
        for (const auto& [j, p] : chain.rows[i]) lhs -= p * t[j];
        worst = std::max(worst, std::abs(lhs - 1.0));
    }
    if (!(worst < 1e-9)) {
        std::ostringstream msg;
        msg << "first-passage residual " << worst << " exceeds 1e-9";
        throw SingularSystemError(msg.str());
    }
    return t;
}

EvalResult evaluate(const SchemeConfig& cfg, const ChannelParams& ch,
                    const EnergyParams& en) {
    EvalResult result;
    if (cfg.scheme == Scheme::CodeBoth) {
        const double rate = flow_rate_at_alpha(ch, cfg.alpha);
        if (rate <= 0.0)
            throw NonAbsorbingError("zero achievable rate for the both-coding scheme");
        const double e_use = energy_rate(cfg.scheme, cfg.alpha, en);
        result.throughput = rate;
        result.t_per_packet = 1.0 / rate;
        result.t_total = cfg.n / rate;
        // rateless in the limit: no acknowledgement-listening term
        result.e_per_packet = e_use / rate;
        result.e_total = cfg.n * e_use / rate;
        result.solver_path = "fluid";
        return result;
    }

    AbsorbingChain chain = cfg.scheme == Scheme::CodeRelayOnly
                               ? build_relay_chain(cfg.n, cfg.alpha, ch)
                               : build_source_chain(cfg.n, cfg.x, cfg.alpha, ch);
    result.passage_times = first_passage(chain);
    result.state_count = static_cast<std::int64_t>(chain.size());
    result.solver_path = chain.topo_certified ? "forward" : "sparse-lu";
    result.t_total = result.passage_times[chain.start_index];
    result.t_per_packet = result.t_total / cfg.n;
    result.throughput = cfg.n / result.t_total;
    const double e_use = energy_rate(cfg.scheme, cfg.alpha, en);
    result.e_total = result.t_total * e_use + en.e_ack;
    result.e_per_packet = result.e_total / cfg.n;
    return result;
}

}  // namespace relaync
