#pragma once

#include <array>
#include <functional>
#include <set>

#include "opl/coloring.hpp"

namespace opl {

/// Directed graph induced on the canonical-partition cells by table data:
/// cross arcs follow the cross table, within-tree arcs go from a level to a
/// strictly lower level of the same tree.
struct Digraph {
    std::vector<Cell> cells;
    std::set<std::pair<Cell, Cell>> arcs;

    bool has(const Cell& from, const Cell& to) const { return arcs.count({from, to}) != 0; }
    void add(const Cell& from, const Cell& to);
};

Digraph digraph_of(const CanonicalTables& t);

/// Inverse of digraph_of on table entries (residual color supplied).
CanonicalTables tables_from_digraph(const Digraph& d, std::vector<uint32_t> tree_ranks,
                                    Color residual = Color::Red);

struct PatternOccurrence {
    std::string pattern_id;
    std::vector<Cell> cells;
    std::vector<std::pair<Cell, Cell>> arcs;
};

/// A forbidden-pattern shape. The catalog drives scan_patterns; entries can
/// be added without touching the scanner. P1 is the transitive directed
/// triangle; P2 fans from one vertex to two lower levels of its own tree;
/// P3 fans from a tree-top vertex to two levels of one other tree. The
/// fourth slot is kept as a 2-cycle shape but is marked unconfirmed.
struct PatternDef {
    std::string id;
    std::string summary;
    bool confirmed;
    std::function<std::vector<PatternOccurrence>(const Digraph&)> scan;
};

const std::vector<PatternDef>& pattern_catalog();

std::vector<PatternOccurrence> scan_patterns(const Digraph& d);

/// For a P1 occurrence in the digraph of `t`, produce three concrete points
/// whose pairs all evaluate blue. Throws if the occurrence is not genuine.
std::array<Ordinal, 3> pattern1_witness(const CanonicalTables& t,
                                        const PatternOccurrence& occ);

/// Smallest point of a cell (tree i, level j) in the domain of `t`.
Ordinal cell_min_point(const CanonicalTables& t, const Cell& c);

}  // namespace opl
