#include "opl/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <set>

namespace opl {

uint64_t effective_budget_ms(uint64_t fallback_ms) {
    if (const char* env = std::getenv("OPL_BUDGET_MS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return fallback_ms;
}

std::vector<Connection> connection_pool(const Ordinal& domain) {
    if (domain.is_zero()) throw DomainError("connection_pool: empty domain");
    const uint32_t lead = domain.lead_exp();
    // Largest rank carried by an actual point of the domain.
    uint32_t maxr;
    {
        const auto& ts = domain.terms();
        if (ts.size() == 1 && ts[0].exp >= 1)
            maxr = ts[0].coef >= 2 ? lead : lead - 1;
        else if (domain.is_successor())
            maxr = lead;
        else
            maxr = lead;  // mixed limit domains keep the leading rank
    }
    std::vector<Connection> pool;
    for (uint32_t k = 2; k <= lead + 1; ++k)
        for (uint32_t j1 = 1; j1 < k && j1 <= maxr; ++j1)
            for (uint32_t j2 = 0; j2 < j1; ++j2)
                for (ConnKind kind : {ConnKind::Forward, ConnKind::Backward, ConnKind::Downward})
                    pool.push_back(Connection{kind, k, j1, j2});
    std::sort(pool.begin(), pool.end());
    return pool;
}

namespace {

using Clock = std::chrono::steady_clock;

struct SearchState {
    Ordinal domain;
    uint32_t m = 1;
    uint32_t max_connections = 8;
    Clock::time_point deadline;
    std::vector<Connection> pool;
    std::set<std::vector<Connection>> visited;
    std::vector<std::vector<Connection>> witnesses;
    uint32_t max_results = 0;
    uint64_t nodes = 0;
    bool out_of_time = false;
    bool truncated = false;  // a branch was cut (budget or result cap)
};

bool is_superset_of_witness(const SearchState& st, const std::vector<Connection>& conns) {
    for (const auto& w : st.witnesses) {
        if (w.size() > conns.size()) continue;
        if (std::includes(conns.begin(), conns.end(), w.begin(), w.end())) return true;
    }
    return false;
}

// Connections that break the given surviving placement: candidates for the
// next branching step. A witness extending the current set must make this
// placement non-red, hence must contain one of these.
std::vector<Connection> breaking_candidates(const SearchState& st,
                                            const std::vector<Connection>& current,
                                            const Placement& pl) {
    std::vector<Ordinal> reps;
    for (const Ordinal& l : pl.limits) reps.push_back(l);
    for (const SeqFamily& s : pl.seqs) {
        reps.push_back(s.instance(1));
        reps.push_back(s.instance(2));
    }
    std::vector<Connection> out;
    for (const Connection& c : st.pool) {
        if (std::binary_search(current.begin(), current.end(), c)) continue;
        bool fires = false;
        for (size_t i = 0; i < reps.size() && !fires; ++i)
            for (size_t j = i + 1; j < reps.size() && !fires; ++j) {
                const Ordinal& hi = reps[i].cb() >= reps[j].cb() ? reps[i] : reps[j];
                const Ordinal& lo = reps[i].cb() >= reps[j].cb() ? reps[j] : reps[i];
                if (hi.cb() != lo.cb() && connection_fires(c, hi, lo)) fires = true;
            }
        if (fires) out.push_back(c);
    }
    return out;
}

void search_rec(SearchState& st, const std::vector<Connection>& current) {
    if (st.out_of_time || (st.max_results && st.witnesses.size() >= st.max_results)) return;
    if (Clock::now() > st.deadline) {
        st.out_of_time = true;
        st.truncated = true;
        return;
    }
    if (!st.visited.insert(current).second) return;
    ++st.nodes;
    if (is_superset_of_witness(st, current)) return;

    MatryoshkaColoring mc = MatryoshkaColoring::make(st.domain, current);
    if (!current.empty() && blue_triangle_check(mc).verdict == Verdict::BlueTriangle)
        return;  // adding connections never removes a blue triangle

    // One pass over the configurations: either everything is killed (a
    // witness, when nonempty) or we branch on the first survivor.
    std::optional<Placement> survivor;
    for (const Configuration& cfg : enumerate_configs(st.domain, st.m)) {
        DecideParams dp;
        dp.exact_killers = false;
        DecideResult r = decide_config(mc, cfg, dp);
        if (!r.killed) {
            survivor = r.survivor;
            break;
        }
    }
    if (!survivor) {
        if (!current.empty()) st.witnesses.push_back(current);
        return;  // supersets are witnesses too; keep minimal ones
    }
    if (current.size() >= st.max_connections) return;
    for (const Connection& c : breaking_candidates(st, current, *survivor)) {
        std::vector<Connection> next = current;
        next.insert(std::upper_bound(next.begin(), next.end(), c), c);
        search_rec(st, next);
        if (st.out_of_time || (st.max_results && st.witnesses.size() >= st.max_results)) {
            st.truncated = true;
            return;
        }
    }
}

}  // namespace

SearchOutcome search_colorings(const Ordinal& domain, uint32_t m, uint32_t max_connections,
                               const SearchParams& params) {
    SearchState st;
    st.domain = domain;
    st.m = m;
    st.max_connections = max_connections;
    st.deadline = Clock::now() + std::chrono::milliseconds(effective_budget_ms(params.budget_ms));
    st.pool = connection_pool(domain);
    st.max_results = params.max_results;

    // The empty coloring never counts as a witness: search enumerates
    // nonempty connection sets.
    bool any_config = !enumerate_configs(domain, m).empty();
    if (any_config && !st.pool.empty()) search_rec(st, {});

    SearchOutcome out;
    out.nodes_visited = st.nodes;
    out.exhausted = !st.truncated && !st.out_of_time;
    for (const auto& conns : st.witnesses) {
        MatryoshkaColoring mc = MatryoshkaColoring::make(domain, conns);
        // Independent re-verification of every reported witness.
        if (blue_triangle_check(mc).verdict != Verdict::NoBlueTriangle) continue;
        if (red_copy_check(mc, m).verdict != Verdict::NoRedCopy) continue;
        out.witnesses.push_back(std::move(mc));
    }
    return out;
}

}  // namespace opl
