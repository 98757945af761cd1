#include "relaync/chain.hpp"

#include <algorithm>
#include <map>

namespace relaync {

namespace {

// Accumulates transition mass per target, then emits a sorted sparse row.
class RowBuilder {
public:
    void add(int target, double mass) {
        if (mass > 0.0) mass_[target] += mass;
    }
    std::vector<std::pair<int, double>> take() {
        return {mass_.begin(), mass_.end()};
    }

private:
    std::map<int, double> mass_;
};

std::vector<DofState> sorted_states(std::vector<DofState> v) {
    std::sort(v.begin(), v.end(), [](const DofState& a, const DofState& b) {
        return state_key(a) < state_key(b);
    });
    return v;
}

}  // namespace

int AbsorbingChain::index_of(const DofState& s) const {
    auto begin = states.begin() + 1;  // skip S_T placeholder
    auto it = std::lower_bound(begin, states.end(), s,
                               [](const DofState& a, const DofState& b) {
                                   return state_key(a) < state_key(b);
                               });
    if (it == states.end() || !(*it == s)) return -1;
    return static_cast<int>(it - states.begin());
}

double AbsorbingChain::prob(int i, int j) const {
    for (const auto& [t, p] : rows[i])
        if (t == j) return p;
    return 0.0;
}

std::int64_t state_count_relay(int n) {
    // triples with m+k+l <= n: C(n+3,3)
    const std::int64_t nn = n;
    return (nn + 1) * (nn + 2) * (nn + 3) / 6 + 1;
}

std::int64_t state_count_source(int n, int x) {
    std::int64_t count = 0;
    for (int k = 0; k <= std::min(n, x); ++k)
        count += static_cast<std::int64_t>(n - k + 1) * (x - k + 1);
    return count + 1;
}

AbsorbingChain build_relay_chain(int n, double alpha, const ChannelParams& ch) {
    if (n < 1) throw InvalidParameter("n must be >= 1, got " + std::to_string(n));
    detail::require_probability(alpha, "alpha");

    std::vector<DofState> substantive;
    substantive.reserve(state_count_relay(n) - 1);
    for (int m = 0; m <= n; ++m)
        for (int k = 0; m + k <= n; ++k)
            for (int l = 0; m + k + l <= n; ++l)
                substantive.push_back({m, k, l});
    substantive = sorted_states(std::move(substantive));

    AbsorbingChain chain;
    chain.scheme = Scheme::CodeRelayOnly;
    chain.n = n;
    chain.x = n;
    chain.alpha = alpha;
    chain.topo_certified = true;
    chain.states.push_back({-1, -1, -1});  // S_T placeholder
    chain.states.insert(chain.states.end(), substantive.begin(), substantive.end());
    chain.rows.resize(chain.states.size());
    chain.rows[0] = {{0, 1.0}};  // S_T absorbs
    chain.start_index = chain.index_of({0, 0, 0});

    const double a = alpha, psd = ch.p_sd, psr = ch.p_sr, prd = ch.p_rd;
    for (std::size_t i = 1; i < chain.states.size(); ++i) {
        const DofState s = chain.states[i];
        if (is_absorbing(s, n)) {
            chain.rows[i] = {{0, 1.0}};
            continue;
        }
        const double fresh = static_cast<double>(n - s.m - s.k - s.l) / n;
        const double fm = static_cast<double>(s.m) / n;
        const double fk = static_cast<double>(s.k) / n;
        const double fl = static_cast<double>(s.l) / n;
        const double relay_has = s.l > 0 ? 1.0 : 0.0;

        RowBuilder row;
        auto to = [&](int m, int k, int l, double p) {
            row.add(chain.index_of({m, k, l}), p);
        };
        // source transmits (probability a): uniform pick among the n packets
        to(s.m + 1, s.k, s.l, fresh * psd * (1.0 - psr) * a);
        to(s.m, s.k + 1, s.l, fresh * psd * psr * a);
        to(s.m, s.k, s.l + 1, fresh * psr * (1.0 - psd) * a);
        to(s.m - 1, s.k + 1, s.l, fm * psr * a);
        // d catching up on an r-only dof, plus the relay's coded transmission
        to(s.m, s.k + 1, s.l - 1, fl * psd * a + relay_has * prd * (1.0 - a));
        // self-loop: wasted source slot (shared packet wastes the slot
        // regardless of reception) plus failed or empty relay slot
        const double self =
            (fm * (1.0 - psr) + fl * (1.0 - psd) + fk +
             fresh * (1.0 - psd) * (1.0 - psr)) * a +
            (1.0 - relay_has * prd) * (1.0 - a);
        row.add(static_cast<int>(i), self);
        chain.rows[i] = row.take();
    }
    return chain;
}

AbsorbingChain build_source_chain(int n, int x, double alpha, const ChannelParams& ch) {
    if (n < 1) throw InvalidParameter("n must be >= 1, got " + std::to_string(n));
    if (x < 1 || x > n)
        throw InvalidParameter("x must satisfy 1 <= x <= n, got " + std::to_string(x));
    detail::require_probability(alpha, "alpha");

    std::vector<DofState> substantive;
    substantive.reserve(state_count_source(n, x) - 1);
    for (int m = 0; m <= n; ++m)
        for (int k = 0; m + k <= n && k <= x; ++k)
            for (int l = 0; k + l <= x; ++l)
                substantive.push_back({m, k, l});
    substantive = sorted_states(std::move(substantive));

    AbsorbingChain chain;
    chain.scheme = Scheme::CodeSourceOnly;
    chain.n = n;
    chain.x = x;
    chain.alpha = alpha;
    chain.topo_certified = false;  // relay queue dynamics introduce cycles
    chain.states.push_back({-1, -1, -1});
    chain.states.insert(chain.states.end(), substantive.begin(), substantive.end());
    chain.rows.resize(chain.states.size());
    chain.rows[0] = {{0, 1.0}};
    chain.start_index = chain.index_of({0, 0, 0});

    const double a = alpha, psd = ch.p_sd, psr = ch.p_sr, prd = ch.p_rd;
    for (std::size_t i = 1; i < chain.states.size(); ++i) {
        const DofState s = chain.states[i];
        if (is_absorbing(s, n)) {
            chain.rows[i] = {{0, 1.0}};
            continue;
        }
        const bool queue_full = s.k + s.l == x;
        const bool queue_empty = s.k + s.l == 0;
        const double kl = s.k + s.l;

        RowBuilder row;
        auto to = [&](int m, int k, int l, double p) {
            row.add(chain.index_of({m, k, l}), p);
        };
        // source transmits a fresh mixture (innovative by assumption)
        to(s.m + 1, s.k, s.l,
           a * psd * (1.0 - psr) + (queue_full ? a * psd * psr : 0.0));
        if (!queue_full) {
            to(s.m, s.k + 1, s.l, a * psd * psr);
            to(s.m, s.k, s.l + 1, a * psr * (1.0 - psd));
        }
        double self = a * (1.0 - psr) * (1.0 - psd);
        if (queue_full) self += a * psr * (1.0 - psd);  // mixture dropped
        if (queue_empty) self += 1.0 - a;               // wasted relay slot
        // relay forwards a uniformly chosen queued mixture, dropping it
        if (s.k > 0)
            to(s.m + 1, s.k - 1, s.l, (1.0 - a) * s.k / kl);
        if (s.l > 0) {
            to(s.m + 1, s.k, s.l - 1, (1.0 - a) * s.l / kl * prd);
            to(s.m, s.k, s.l - 1, (1.0 - a) * s.l / kl * (1.0 - prd));
        }
        row.add(static_cast<int>(i), self);
        chain.rows[i] = row.take();
    }
    return chain;
}

}  // namespace relaync
