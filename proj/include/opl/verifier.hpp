#pragma once

#include <optional>

#include "opl/coloring.hpp"

namespace opl {

/// Shape of a normalized red closed copy of w*m+1: per limit i, the rank of
/// its converging sequence (seq_rank) and of the limit itself (lim_rank),
/// plus the merge structure of the limits in the tree relation.
///
/// m == 2: merge_outer is the rank of the least common ancestor of the two
/// limits (equal to lim_rank[1] exactly when limit 1 sits strictly below
/// limit 2 in the tree relation).
/// m == 3: the pairwise ancestor tree is recorded as the inner pair (0 for
/// limits 1,2; 1 for limits 2,3), its merge rank, and the outer merge rank;
/// inner == outer encodes the flat shape where all three meet at one node.
struct Configuration {
    uint32_t m = 1;
    std::array<uint32_t, 3> seq_rank{};
    std::array<uint32_t, 3> lim_rank{};
    uint32_t inner_pair = 0;
    uint32_t merge_inner = 0;
    uint32_t merge_outer = 0;

    /// Rank of the least common ancestor of limits i and j (0-based, i < j).
    uint32_t pair_lca_rank(uint32_t i, uint32_t j) const;

    auto operator<=>(const Configuration&) const = default;
};

std::string to_string(const Configuration& cfg);

/// Shape of a domain eligible for configuration checking: w^N or w^N + 1.
struct DomainShape {
    uint32_t lead = 0;
    bool successor = false;

    uint32_t max_point_rank() const { return successor ? lead : lead - 1; }
};

DomainShape domain_shape(const Ordinal& domain);

/// All realizable configurations for red closed copies of w*m+1 in the
/// domain, sorted, grouped by outer merge rank. m in {1,2,3}.
std::vector<Configuration> enumerate_configs(const Ordinal& domain, uint32_t m);

/// A pair of template objects whose pairs must all be red for a copy to
/// survive. Objects are named seq1, lim1, seq2, ...
struct Forcing {
    Connection conn;
    std::string pair_name;

    friend bool operator==(const Forcing&, const Forcing&) = default;
};

/// A concrete surviving placement: limits as points, sequences as affine
/// families varying at one position.
struct SeqFamily {
    Ordinal base;      // fixed part, including the start value at var_pos
    uint32_t var_pos;  // position whose coefficient grows with n

    Ordinal instance(uint64_t n) const;
};

struct Placement {
    std::vector<Ordinal> limits;
    std::vector<SeqFamily> seqs;

    /// The union of the limits and the first `per_seq` members of each
    /// sequence, in increasing order.
    std::vector<Ordinal> materialize(uint64_t per_seq) const;
};

struct DecideResult {
    bool killed = false;
    /// Connections that fire on the named pair type on every placement.
    /// Exact when the configuration was decided by full enumeration;
    /// possibly partial (or empty, flagged mixed) in pruned modes.
    std::vector<Forcing> killers;
    bool mixed = false;  // killed, but by different connections per placement
    std::optional<Placement> survivor;
};

struct DecideParams {
    uint32_t grid = 0;      // 0: number of template points + 1
    uint32_t sentinels = 2; // values tested per unbounded coordinate
    bool exact_killers = true;
    uint64_t node_budget = 80'000'000;
};

/// Decide whether a normalized red copy with the given shape exists under
/// the coloring. Placement constraints are compiled through the ordinal
/// primitives; sequences are abstracted by a sentinel coordinate.
DecideResult decide_config(const MatryoshkaColoring& mc, const Configuration& cfg,
                           const DecideParams& params = {});

/// Slow oracle: same template, enlarged grid and three sentinel values,
/// evaluated through materialized ordinals and the public coloring path.
DecideResult decide_config_oracle(const MatryoshkaColoring& mc, const Configuration& cfg,
                                  uint32_t grid = 9, uint32_t sentinels = 3);

// ---- certificates ----

enum class Verdict : uint8_t {
    NoBlueTriangle,
    BlueTriangle,
    NoRedCopy,
    RedCopy,
    Inconclusive,
};

std::string to_string(Verdict v);

struct ConfigCase {
    Configuration cfg;
    bool killed = false;
    bool mixed = false;
    std::vector<Forcing> killers;
};

struct Certificate {
    Verdict verdict = Verdict::Inconclusive;
    std::string tool_version;
    Ordinal domain;
    std::vector<Connection> connections;  // self-contained coloring data
    uint32_t target_m = 0;
    std::vector<std::string> assumptions;
    std::vector<ConfigCase> cases;
    // Witness payloads.
    std::vector<Ordinal> witness_points;
    std::vector<SeqFamily> witness_seqs;
    std::vector<std::array<Connection, 3>> refuted_triples;  // triangle check
    std::string note;  // Inconclusive reason or extra context
};

/// Decide blue-triangle freedom by enumerating rank-chained connection
/// triples and testing joint satisfiability of their positional
/// constraints (exact: a grid of three values per position suffices).
Certificate blue_triangle_check(const MatryoshkaColoring& mc);

/// Decide existence of a red closed copy of w*m+1 (m in {1,2,3}).
Certificate red_copy_check(const MatryoshkaColoring& mc, uint32_t m,
                           uint32_t jobs = 1);

/// Kill-table reproduction for the two-limit case: every configuration with
/// its full killer set. `reference` rows, when supplied, are asserted to be
/// contained in the computed killer sets.
struct TableReport {
    std::vector<ConfigCase> cases;
    bool all_killed = false;
    bool reference_contained = true;
    std::vector<std::string> reference_misses;
};

struct ReferenceKill {
    Configuration cfg;
    Connection conn;
};

TableReport reproduce_tables(const MatryoshkaColoring& mc,
                             const std::vector<ReferenceKill>& reference = {},
                             uint32_t jobs = 1);

/// The published killer assignments for the bundled w^4 coloring, one per
/// two-limit configuration (57 rows).
const std::vector<ReferenceKill>& c0_reference_killers();

/// Composite check for domains w^N * t + 1: per-tree two-limit survivors
/// must match the forced rank pattern, per-tree three-limit copies must be
/// excluded, cross-tree top-to-bottom pairs must be forced blue in both
/// directions, and the limits must outnumber the trees by at least two.
Certificate multi_tree_check(const MatryoshkaColoring& mc, uint32_t n,
                             uint32_t jobs = 1);

/// Exhaustive finite sub-domain used by the brute-force oracles.
struct TruncationDomain {
    uint32_t lead = 0;       // exponent N
    uint64_t coef_cap = 4;   // C

    std::vector<Ordinal> points() const;  // all ordinals < w^N with coefs <= C
};

/// Brute-force blue-triangle search on a truncation of the domain.
std::optional<std::array<Ordinal, 3>> truncation_blue_triangle(
    const MatryoshkaColoring& mc, const TruncationDomain& dom);

std::string tool_version();

}  // namespace opl
