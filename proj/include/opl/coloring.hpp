#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "opl/forest.hpp"
#include "opl/ordinal.hpp"

namespace opl {

enum class Color : uint8_t { Red = 0, Blue = 1 };

enum class ConnKind : uint8_t { Forward, Backward, Downward };

char kind_letter(ConnKind k);
ConnKind kind_from_letter(char c);

/// A blue-edge rule between two ranks of the matryoshka box structure.
/// Forward/backward connections relate boxes of degree `degree` inside a
/// common box of degree `degree`+1 (earlier box to later box, respectively
/// later to earlier); downward connections relate the two ranks of one box.
struct Connection {
    ConnKind kind;
    uint32_t degree;   // k
    uint32_t hi_rank;  // j1
    uint32_t lo_rank;  // j2, with j2 < j1 < k

    auto operator<=>(const Connection&) const = default;
};

std::string to_string(const Connection& c);

/// Identity of the matryoshka box of degree `degree` containing a point of
/// rank `rank`: the normalized vector restricted to positions >= degree-1.
/// Two same-rank points share a box iff their keys agree.
struct BoxId {
    uint32_t degree = 0;
    uint32_t rank = 0;
    std::map<uint32_t, uint64_t> key;

    friend bool operator==(const BoxId&, const BoxId&) = default;
};

/// Precondition: cb(alpha) < degree.
BoxId box_id(const Ordinal& alpha, uint32_t degree);

/// Comparator realizing the box order (by rank, then by position of the box
/// along its rank, i.e. the key read as an ordinal).
bool box_precedes(const BoxId& a, const BoxId& b);

/// True iff the connection colors the pair {hi, lo} blue. Returns false on
/// any rank mismatch, so it is total.
bool connection_fires(const Connection& c, const Ordinal& hi, const Ordinal& lo);

struct MatryoshkaColoring {
    Ordinal domain;
    std::vector<Connection> connections;  // sorted, duplicate-free

    static MatryoshkaColoring make(Ordinal domain, std::vector<Connection> connections);
};

/// Undirected graph on canonical-partition cells; pairs across adjacent
/// cells are blue, everything else red.
struct CellGraphColoring {
    Ordinal domain;
    std::set<std::pair<Cell, Cell>> edges;  // stored with first < second

    static CellGraphColoring make(Ordinal domain,
                                  std::vector<std::pair<Cell, Cell>> edges);
    bool adjacent(const Cell& a, const Cell& b) const;
};

/// The finite data of a canonical coloring on w^m1 + ... + w^mn + 1:
/// `within(i,j,k)` colors tree-internal pairs beta1 <* beta2 with
/// cb(beta2)=j, cb(beta1)=k; `cross(i,j;k,l)` colors pairs across trees i
/// and k by the cells of the two points. Pairs covered by neither table
/// (same tree, unrelated points) take the residual color.
///
/// Cross pairs are evaluated as blue when either directed entry is 1 (the
/// strongest realization of the table data as a total symmetric coloring).
class CanonicalTables {
public:
    CanonicalTables(std::vector<uint32_t> tree_ranks, Color residual = Color::Red);

    uint32_t tree_count() const { return static_cast<uint32_t>(ms_.size()); }
    uint32_t tree_rank(uint32_t i) const;  // m_i, 1-based i
    const std::vector<uint32_t>& tree_ranks() const { return ms_; }
    Color residual() const { return residual_; }
    void set_residual(Color c) { residual_ = c; }

    Ordinal domain() const;

    bool within(uint32_t i, uint32_t j, uint32_t k) const;
    void set_within(uint32_t i, uint32_t j, uint32_t k, bool blue);
    bool cross(uint32_t i, uint32_t j, uint32_t k, uint32_t l) const;
    void set_cross(uint32_t i, uint32_t j, uint32_t k, uint32_t l, bool blue);

    std::vector<Cell> cells() const;

    friend bool operator==(const CanonicalTables&, const CanonicalTables&) = default;

private:
    size_t within_index(uint32_t i, uint32_t j, uint32_t k) const;
    size_t cross_index(uint32_t i, uint32_t j, uint32_t k, uint32_t l) const;

    std::vector<uint32_t> ms_;
    Color residual_;
    std::vector<uint8_t> within_;
    std::vector<uint8_t> cross_;
    std::vector<size_t> within_off_;
    std::vector<size_t> cross_off_;
};

/// The explicit coloring on w*3+1 whose induced digraph is a directed
/// 3-cycle on the three level-0 cells yet which has no blue triangle.
struct CyclicExampleColoring {
    Ordinal domain;  // w*3+1
};

class Coloring {
public:
    using Data = std::variant<MatryoshkaColoring, CellGraphColoring, CanonicalTables,
                              CyclicExampleColoring>;

    Coloring(MatryoshkaColoring m) : data_(std::move(m)) { cache_domain(); }
    Coloring(CellGraphColoring g) : data_(std::move(g)) { cache_domain(); }
    Coloring(CanonicalTables t) : data_(std::move(t)) { cache_domain(); }
    Coloring(CyclicExampleColoring c) : data_(std::move(c)) { cache_domain(); }

    const Ordinal& domain() const { return domain_; }
    std::string kind() const;

    const MatryoshkaColoring* as_matryoshka() const;
    const CellGraphColoring* as_cellgraph() const;
    const CanonicalTables* as_tables() const;

    /// Color of the pair {a, b}. Preconditions: a != b, both < domain.
    Color evaluate(const Ordinal& a, const Ordinal& b) const;

private:
    void cache_domain();

    Data data_;
    Ordinal domain_;
};

/// Bundled colorings: the verified w^4 coloring, its t-tree extension, the
/// single-tree three-limit variant, and the cyclic w*3+1 example.
MatryoshkaColoring fixture_c0();
MatryoshkaColoring fixture_c1(uint32_t trees);
MatryoshkaColoring fixture_cn3();
Coloring fixture_cyclic();
CanonicalTables fixture_cyclic_tables();

/// Line-based coloring spec files ('#' comments):
///   domain <ordinal>
///   type matryoshka|cellgraph|canonical-tables
///   conn F|B|D <k> <j1> <j2>          (matryoshka)
///   edge (<i>,<j>) (<i'>,<j'>)        (cellgraph)
///   within <i> <j> <k> <0|1>          (canonical-tables)
///   cross <i> <j> <k> <l> <0|1>
///   default red|blue
Coloring read_coloring(std::istream& in);
Coloring read_coloring_file(const std::string& path);
void write_coloring(std::ostream& out, const Coloring& c);

}  // namespace opl
