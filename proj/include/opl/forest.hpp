#pragma once

#include <map>
#include <vector>

#include "opl/ordinal.hpp"

namespace opl {

/// Position-indexed view of an ordinal used by box membership and the
/// tree-relation tests. For an ordinal a of rank r = cb(a), the entry at
/// position p is the CNF coefficient c_p for p > r, c_r - 1 at p = r, and
/// 0 below r. Positions with entry 0 are not stored.
///
/// The zero ordinal is treated as the first point of level 0 (same place
/// as the ordinal 1), so nu(0) == nu(1).
struct NormalizedVector {
    uint32_t rank = 0;
    std::map<uint32_t, uint64_t> entries;

    uint64_t at(uint32_t p) const {
        auto it = entries.find(p);
        return it == entries.end() ? 0 : it->second;
    }

    /// True iff the two vectors agree at every position >= from.
    bool agrees_above(const NormalizedVector& other, uint32_t from) const;

    friend bool operator==(const NormalizedVector&, const NormalizedVector&) = default;
};

NormalizedVector nu(const Ordinal& a);

/// Tree index of alpha in the forest representation of gamma: the least k
/// such that alpha is at most the k-th partial sum of gamma's ungrouped
/// normal form. For a limit gamma the trailing w-many trees count as one.
/// Preconditions: alpha <= gamma; alpha == 0 is placed in tree 1.
uint32_t cnf_index(const Ordinal& gamma, const Ordinal& alpha);

/// The tree relation: beta <* alpha iff alpha == beta + w^d for some
/// d > cb(beta). Strict and transitive; never relates equal-rank ordinals.
bool star_below(const Ordinal& beta, const Ordinal& alpha);

/// The unique A with cb(A) == d and alpha <* A (alpha itself when
/// d == cb(alpha)). Errors when d < cb(alpha) or d exceeds the cap.
Ordinal ancestor_at(const Ordinal& alpha, uint32_t d);

/// Least common ancestor of two points in the forest of `domain`.
/// When the ancestor chains meet only above the domain (the limit case's
/// merged trailing trees, pictured with a single vertex above them all),
/// the result is the virtual root at the domain's leading exponent.
struct LcaResult {
    uint32_t rank = 0;
    bool virtual_root = false;
    Ordinal ancestor;  // meaningful iff !virtual_root

    friend bool operator==(const LcaResult&, const LcaResult&) = default;
};

LcaResult lca(const Ordinal& a, const Ordinal& b, const Ordinal& domain);

/// Membership in the large subset F(alpha)^r_m of level m of the subtree
/// below alpha: beta lies at rank m below alpha and every chain element
/// strictly below alpha has last coefficient > r.
/// Precondition: m <= cb(alpha).
bool f_contains(const Ordinal& alpha, uint32_t r, uint32_t m, const Ordinal& beta);

/// The first `count` members of F(alpha)^r_m in increasing order.
std::vector<Ordinal> f_first(const Ordinal& alpha, uint32_t r, uint32_t m, size_t count);

struct Cell {
    uint32_t tree = 0;   // 1-based
    uint32_t level = 0;  // CB rank

    auto operator<=>(const Cell&) const = default;
};

/// The canonical-partition cell of alpha inside gamma. Precondition: alpha < gamma.
Cell cell_of(const Ordinal& gamma, const Ordinal& alpha);

std::string to_string(const Cell& c);

}  // namespace opl
