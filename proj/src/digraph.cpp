#include "opl/digraph.hpp"

#include <algorithm>

namespace opl {

void Digraph::add(const Cell& from, const Cell& to) {
    if (from == to) throw DomainError("digraph: self-arc");
    arcs.insert({from, to});
}

Digraph digraph_of(const CanonicalTables& t) {
    Digraph d;
    d.cells = t.cells();
    for (uint32_t i = 1; i <= t.tree_count(); ++i) {
        for (uint32_t j = 1; j <= t.tree_rank(i); ++j)
            for (uint32_t k = 0; k < j; ++k)
                if (t.within(i, j, k)) d.add(Cell{i, j}, Cell{i, k});
        for (uint32_t k = 1; k <= t.tree_count(); ++k) {
            if (k == i) continue;
            for (uint32_t j = 0; j <= t.tree_rank(i); ++j)
                for (uint32_t l = 0; l <= t.tree_rank(k); ++l)
                    if (t.cross(i, j, k, l)) d.add(Cell{i, j}, Cell{k, l});
        }
    }
    return d;
}

CanonicalTables tables_from_digraph(const Digraph& d, std::vector<uint32_t> tree_ranks,
                                    Color residual) {
    CanonicalTables t(std::move(tree_ranks), residual);
    for (const auto& [from, to] : d.arcs) {
        if (from.tree == to.tree) {
            if (to.level >= from.level)
                throw DomainError("digraph: within-tree arc must point to a lower level");
            t.set_within(from.tree, from.level, to.level, true);
        } else {
            t.set_cross(from.tree, from.level, to.tree, to.level, true);
        }
    }
    return t;
}

namespace {

std::vector<PatternOccurrence> scan_p1(const Digraph& d) {
    // Transitive directed triangle a->b, b->c, a->c on three distinct cells.
    std::vector<PatternOccurrence> out;
    for (const Cell& a : d.cells)
        for (const Cell& b : d.cells) {
            if (a == b || !d.has(a, b)) continue;
            for (const Cell& c : d.cells) {
                if (c == a || c == b) continue;
                if (d.has(b, c) && d.has(a, c))
                    out.push_back({"P1", {a, b, c}, {{a, b}, {b, c}, {a, c}}});
            }
        }
    return out;
}

std::vector<PatternOccurrence> scan_p2(const Digraph& d) {
    // One vertex with within-tree arcs to two distinct lower levels.
    std::vector<PatternOccurrence> out;
    for (const Cell& a : d.cells) {
        std::vector<Cell> hits;
        for (const Cell& b : d.cells)
            if (b.tree == a.tree && b.level < a.level && d.has(a, b)) hits.push_back(b);
        for (size_t x = 0; x < hits.size(); ++x)
            for (size_t y = x + 1; y < hits.size(); ++y)
                out.push_back({"P2", {a, hits[x], hits[y]}, {{a, hits[x]}, {a, hits[y]}}});
    }
    return out;
}

std::vector<PatternOccurrence> scan_p3(const Digraph& d) {
    // A tree-top vertex with arcs to two distinct levels of one other tree.
    std::vector<PatternOccurrence> out;
    std::map<uint32_t, uint32_t> top;  // tree -> max level present
    for (const Cell& c : d.cells) top[c.tree] = std::max(top[c.tree], c.level);
    for (const Cell& a : d.cells) {
        if (a.level != top[a.tree]) continue;
        std::map<uint32_t, std::vector<Cell>> by_tree;
        for (const Cell& b : d.cells)
            if (b.tree != a.tree && d.has(a, b)) by_tree[b.tree].push_back(b);
        for (auto& [tree, hits] : by_tree)
            for (size_t x = 0; x < hits.size(); ++x)
                for (size_t y = x + 1; y < hits.size(); ++y)
                    out.push_back({"P3", {a, hits[x], hits[y]}, {{a, hits[x]}, {a, hits[y]}}});
    }
    return out;
}

std::vector<PatternOccurrence> scan_p4(const Digraph& d) {
    // Directed 2-cycle between two cells. Catalog slot; shape unconfirmed.
    std::vector<PatternOccurrence> out;
    for (const auto& [a, b] : d.arcs)
        if (a < b && d.has(b, a)) out.push_back({"P4", {a, b}, {{a, b}, {b, a}}});
    return out;
}

}  // namespace

const std::vector<PatternDef>& pattern_catalog() {
    static const std::vector<PatternDef> catalog = {
        {"P1", "transitive directed triangle", true, scan_p1},
        {"P2", "vertex with within-tree arcs to two lower levels", true, scan_p2},
        {"P3", "tree-top vertex with arcs to two levels of one other tree", true, scan_p3},
        {"P4", "directed 2-cycle between two cells (unconfirmed shape)", false, scan_p4},
    };
    return catalog;
}

std::vector<PatternOccurrence> scan_patterns(const Digraph& d) {
    std::vector<PatternOccurrence> out;
    for (const PatternDef& def : pattern_catalog()) {
        auto found = def.scan(d);
        out.insert(out.end(), found.begin(), found.end());
    }
    return out;
}

Ordinal cell_min_point(const CanonicalTables& t, const Cell& c) {
    Ordinal prefix;
    for (uint32_t i = 1; i < c.tree; ++i)
        prefix = add(prefix, Ordinal::omega_power(t.tree_rank(i)));
    if (c.level > t.tree_rank(c.tree)) throw DomainError("cell_min_point: level out of range");
    if (c.level == t.tree_rank(c.tree))
        return add(prefix, Ordinal::omega_power(c.level));  // the tree root
    return add(prefix, Ordinal::omega_power(c.level));
}

std::array<Ordinal, 3> pattern1_witness(const CanonicalTables& t,
                                        const PatternOccurrence& occ) {
    if (occ.pattern_id != "P1" || occ.cells.size() != 3)
        throw DomainError("pattern1_witness: not a P1 occurrence");
    const Cell a = occ.cells[0], b = occ.cells[1], c = occ.cells[2];
    Digraph d = digraph_of(t);
    if (!d.has(a, b) || !d.has(b, c) || !d.has(a, c))
        throw DomainError("pattern1_witness: occurrence arcs absent from the digraph");

    // Same-tree cells must be realized on one <*-chain so the within table
    // governs their pairs; cross-tree pairs may use any representatives.
    std::map<uint32_t, std::vector<Cell>> by_tree;
    for (const Cell& cell : {a, b, c}) by_tree[cell.tree].push_back(cell);
    std::map<Cell, Ordinal> point;
    for (auto& [tree, cells] : by_tree) {
        std::sort(cells.begin(), cells.end(),
                  [](const Cell& x, const Cell& y) { return x.level < y.level; });
        Ordinal base = cell_min_point(t, cells.front());
        point[cells.front()] = base;
        for (size_t i = 1; i < cells.size(); ++i) point[cells[i]] = ancestor_at(base, cells[i].level);
    }
    std::array<Ordinal, 3> triple = {point[a], point[b], point[c]};

    Coloring col{t};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (col.evaluate(triple[i], triple[j]) != Color::Blue)
                throw DomainError("pattern1_witness: occurrence does not force a blue triple");
    return triple;
}

}  // namespace opl
