#pragma once

#include "opl/verifier.hpp"

namespace opl {

struct SearchParams {
    uint32_t max_connections = 8;
    uint64_t budget_ms = 60'000;  // wall clock; OPL_BUDGET_MS overrides when set
    uint32_t max_results = 0;     // 0: no cap
    uint32_t jobs = 1;
};

struct SearchOutcome {
    std::vector<MatryoshkaColoring> witnesses;  // verified, minimal under inclusion
    bool exhausted = false;                     // the whole space was covered
    uint64_t nodes_visited = 0;
};

/// All candidate connections for the domain, in canonical order: ranks must
/// be carried by actual points, degrees run up to the leading exponent + 1.
std::vector<Connection> connection_pool(const Ordinal& domain);

/// Search for matryoshka colorings of the domain with no blue triangle and
/// no red closed copy of w*m+1, using at most max_connections connections.
/// Branches on connections that break the first surviving placement, prunes
/// supersets of found witnesses and every triangle-carrying set, and
/// re-verifies each candidate with both decision procedures.
SearchOutcome search_colorings(const Ordinal& domain, uint32_t m, uint32_t max_connections,
                               const SearchParams& params = {});

/// Wall-clock budget in milliseconds: the OPL_BUDGET_MS environment
/// variable when set, otherwise the fallback.
uint64_t effective_budget_ms(uint64_t fallback_ms);

}  // namespace opl
