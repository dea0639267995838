#include "opl/coloring.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace opl {

char kind_letter(ConnKind k) {
    switch (k) {
        case ConnKind::Forward: return 'F';
        case ConnKind::Backward: return 'B';
        case ConnKind::Downward: return 'D';
    }
    return '?';
}

ConnKind kind_from_letter(char c) {
    switch (c) {
        case 'F': return ConnKind::Forward;
        case 'B': return ConnKind::Backward;
        case 'D': return ConnKind::Downward;
    }
    throw ParseError(std::string("unknown connection kind '") + c + "'");
}

std::string to_string(const Connection& c) {
    std::ostringstream out;
    out << kind_letter(c.kind) << '(' << c.degree << ',' << c.hi_rank << "->" << c.lo_rank
        << ')';
    return out.str();
}

BoxId box_id(const Ordinal& alpha, uint32_t degree) {
    if (degree == 0 || alpha.cb() >= degree)
        throw DomainError("box_id: rank must be below the box degree");
    BoxId b;
    b.degree = degree;
    b.rank = alpha.cb();
    NormalizedVector v = nu(alpha);
    for (const auto& [p, e] : v.entries)
        if (p >= degree - 1) b.key[p] = e;
    return b;
}

bool box_precedes(const BoxId& a, const BoxId& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    // Keys read as ordinals: lexicographic from the top position down.
    auto ia = a.key.rbegin(), ib = b.key.rbegin();
    while (ia != a.key.rend() && ib != b.key.rend()) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return ib != b.key.rend();
}

bool connection_fires(const Connection& c, const Ordinal& hi, const Ordinal& lo) {
    if (hi.cb() != c.hi_rank && !(hi.is_zero() && c.hi_rank == 0)) return false;
    if (lo.cb() != c.lo_rank && !(lo.is_zero() && c.lo_rank == 0)) return false;
    NormalizedVector vh = nu(hi);
    NormalizedVector vl = nu(lo);
    if (c.kind == ConnKind::Downward) return vh.agrees_above(vl, c.degree - 1);
    if (!vh.agrees_above(vl, c.degree)) return false;
    uint64_t th = vh.at(c.degree - 1);
    uint64_t tl = vl.at(c.degree - 1);
    return c.kind == ConnKind::Forward ? th < tl : th > tl;
}

MatryoshkaColoring MatryoshkaColoring::make(Ordinal domain,
                                            std::vector<Connection> connections) {
    if (domain.is_zero()) throw DomainError("matryoshka coloring: empty domain");
    const uint32_t lead = domain.lead_exp();
    std::sort(connections.begin(), connections.end());
    for (size_t i = 0; i < connections.size(); ++i) {
        const Connection& c = connections[i];
        if (!(c.lo_rank < c.hi_rank && c.hi_rank < c.degree))
            throw DomainError("connection ranks must satisfy j2 < j1 < k: " + to_string(c));
        if (c.degree > lead + 1)
            throw DomainError("connection degree exceeds the domain bound: " + to_string(c));
        if (i > 0 && connections[i - 1] == c)
            throw DomainError("duplicate connection: " + to_string(c));
    }
    return MatryoshkaColoring{std::move(domain), std::move(connections)};
}

CellGraphColoring CellGraphColoring::make(Ordinal domain,
                                          std::vector<std::pair<Cell, Cell>> edges) {
    CellGraphColoring g;
    g.domain = std::move(domain);
    for (auto [a, b] : edges) {
        if (a == b) throw DomainError("cell graph: self-loop");
        if (b < a) std::swap(a, b);
        g.edges.insert({a, b});
    }
    return g;
}

bool CellGraphColoring::adjacent(const Cell& a, const Cell& b) const {
    auto p = a < b ? std::pair{a, b} : std::pair{b, a};
    return edges.count(p) != 0;
}

CanonicalTables::CanonicalTables(std::vector<uint32_t> tree_ranks, Color residual)
    : ms_(std::move(tree_ranks)), residual_(residual) {
    if (ms_.empty()) throw DomainError("canonical tables: no trees");
    for (size_t i = 0; i + 1 < ms_.size(); ++i)
        if (ms_[i] < ms_[i + 1])
            throw DomainError("canonical tables: tree ranks must be non-increasing");
    within_off_.resize(ms_.size() + 1, 0);
    cross_off_.resize(ms_.size() + 1, 0);
    size_t w = 0, x = 0;
    uint32_t total_levels = 0;
    for (uint32_t m : ms_) total_levels += m + 1;
    for (size_t i = 0; i < ms_.size(); ++i) {
        within_off_[i] = w;
        cross_off_[i] = x;
        w += static_cast<size_t>(ms_[i] + 1) * (ms_[i] + 1);
        x += static_cast<size_t>(ms_[i] + 1) * total_levels;
    }
    within_off_[ms_.size()] = w;
    cross_off_[ms_.size()] = x;
    within_.assign(w, 0);
    cross_.assign(x, 0);
}

uint32_t CanonicalTables::tree_rank(uint32_t i) const {
    if (i == 0 || i > ms_.size()) throw DomainError("canonical tables: tree index out of range");
    return ms_[i - 1];
}

Ordinal CanonicalTables::domain() const {
    Ordinal d;
    for (uint32_t m : ms_) d = add(d, Ordinal::omega_power(m));
    return add(d, Ordinal(1));
}

size_t CanonicalTables::within_index(uint32_t i, uint32_t j, uint32_t k) const {
    uint32_t m = tree_rank(i);
    if (!(k < j && j <= m)) throw DomainError("canonical tables: bad within index");
    return within_off_[i - 1] + static_cast<size_t>(j) * (m + 1) + k;
}

size_t CanonicalTables::cross_index(uint32_t i, uint32_t j, uint32_t k, uint32_t l) const {
    uint32_t mi = tree_rank(i), mk = tree_rank(k);
    if (i == k) throw DomainError("canonical tables: cross entry within one tree");
    if (j > mi || l > mk) throw DomainError("canonical tables: bad cross index");
    size_t col = 0;
    for (uint32_t t = 1; t < k; ++t) col += ms_[t - 1] + 1;
    col += l;
    uint32_t total_levels = 0;
    for (uint32_t m : ms_) total_levels += m + 1;
    return cross_off_[i - 1] + static_cast<size_t>(j) * total_levels + col;
}

bool CanonicalTables::within(uint32_t i, uint32_t j, uint32_t k) const {
    return within_[within_index(i, j, k)] != 0;
}

void CanonicalTables::set_within(uint32_t i, uint32_t j, uint32_t k, bool blue) {
    within_[within_index(i, j, k)] = blue ? 1 : 0;
}

bool CanonicalTables::cross(uint32_t i, uint32_t j, uint32_t k, uint32_t l) const {
    return cross_[cross_index(i, j, k, l)] != 0;
}

void CanonicalTables::set_cross(uint32_t i, uint32_t j, uint32_t k, uint32_t l, bool blue) {
    cross_[cross_index(i, j, k, l)] = blue ? 1 : 0;
}

std::vector<Cell> CanonicalTables::cells() const {
    std::vector<Cell> out;
    for (uint32_t i = 1; i <= tree_count(); ++i)
        for (uint32_t j = 0; j <= tree_rank(i); ++j) out.push_back(Cell{i, j});
    return out;
}

void Coloring::cache_domain() {
    domain_ = std::visit(
        [](const auto& c) -> Ordinal {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, CanonicalTables>)
                return c.domain();
            else
                return c.domain;
        },
        data_);
}

std::string Coloring::kind() const {
    if (std::holds_alternative<MatryoshkaColoring>(data_)) return "matryoshka";
    if (std::holds_alternative<CellGraphColoring>(data_)) return "cellgraph";
    if (std::holds_alternative<CanonicalTables>(data_)) return "canonical-tables";
    return "cyclic-example";
}

const MatryoshkaColoring* Coloring::as_matryoshka() const {
    return std::get_if<MatryoshkaColoring>(&data_);
}

const CellGraphColoring* Coloring::as_cellgraph() const {
    return std::get_if<CellGraphColoring>(&data_);
}

const CanonicalTables* Coloring::as_tables() const {
    return std::get_if<CanonicalTables>(&data_);
}

namespace {

Color evaluate_matryoshka(const MatryoshkaColoring& m, const Ordinal& a, const Ordinal& b) {
    const Ordinal& hi = a.cb() >= b.cb() ? a : b;
    const Ordinal& lo = a.cb() >= b.cb() ? b : a;
    if (hi.cb() == lo.cb()) return Color::Red;  // same-rank pairs are never blue
    for (const Connection& c : m.connections)
        if (connection_fires(c, hi, lo)) return Color::Blue;
    return Color::Red;
}

Color evaluate_tables(const CanonicalTables& t, const Ordinal& a, const Ordinal& b) {
    Ordinal dom = t.domain();
    Cell ca = cell_of(dom, a);
    Cell cb = cell_of(dom, b);
    if (ca.tree != cb.tree) {
        bool blue = t.cross(ca.tree, ca.level, cb.tree, cb.level) ||
                    t.cross(cb.tree, cb.level, ca.tree, ca.level);
        return blue ? Color::Blue : Color::Red;
    }
    if (star_below(a, b)) return t.within(cb.tree, cb.level, ca.level) ? Color::Blue : Color::Red;
    if (star_below(b, a)) return t.within(ca.tree, ca.level, cb.level) ? Color::Blue : Color::Red;
    return t.residual();
}

// Explicit w*3+1 example: level 0 of tree i is blue toward the tail of
// level 0 of tree i+1 (cyclically), pairs {u, v} with u = j, v >= w+(j+1)
// and so on; everything else red.
Color evaluate_cyclic(const Ordinal& a, const Ordinal& b) {
    const Ordinal& lo = compare(a, b) == Cmp::LT ? a : b;
    const Ordinal& hi = compare(a, b) == Cmp::LT ? b : a;
    const Ordinal w = Ordinal::omega_power(1);
    const Ordinal w2 = Ordinal::omega_power(1, 2);
    const Ordinal w3 = Ordinal::omega_power(1, 3);
    auto finite_part = [](const Ordinal& x) { return x.coef_at(0); };
    if (compare(lo, w) == Cmp::LT) {
        uint64_t j = finite_part(lo);
        // clause 1: {j, w+(j+1)+k}
        if (compare(hi, w) != Cmp::LT && compare(hi, w2) == Cmp::LT &&
            finite_part(hi) >= j + 1)
            return Color::Blue;
        // clause 3 (pair seen from the other side): {w*2+j', (j'+1)+k}
        if (compare(hi, w2) != Cmp::LT && compare(hi, w3) == Cmp::LT &&
            j >= finite_part(hi) + 1)
            return Color::Blue;
        return Color::Red;
    }
    if (compare(lo, w2) == Cmp::LT) {
        // clause 2: {w+j, w*2+(j+1)+k}
        if (compare(hi, w2) != Cmp::LT && compare(hi, w3) == Cmp::LT &&
            finite_part(hi) >= finite_part(lo) + 1)
            return Color::Blue;
        return Color::Red;
    }
    return Color::Red;
}

}  // namespace

Color Coloring::evaluate(const Ordinal& a, const Ordinal& b) const {
    if (a == b) throw DomainError("evaluate: pair must consist of two distinct points");
    const Ordinal dom = domain();
    if (compare(a, dom) != Cmp::LT || compare(b, dom) != Cmp::LT)
        throw DomainError("evaluate: point outside the domain");
    if (const auto* m = std::get_if<MatryoshkaColoring>(&data_))
        return evaluate_matryoshka(*m, a, b);
    if (const auto* g = std::get_if<CellGraphColoring>(&data_)) {
        Cell ca = cell_of(dom, a);
        Cell cb = cell_of(dom, b);
        return (ca != cb && g->adjacent(ca, cb)) ? Color::Blue : Color::Red;
    }
    if (const auto* t = std::get_if<CanonicalTables>(&data_)) return evaluate_tables(*t, a, b);
    return evaluate_cyclic(a, b);
}

MatryoshkaColoring fixture_c0() {
    return MatryoshkaColoring::make(
        Ordinal::omega_power(4),
        {
            {ConnKind::Downward, 4, 3, 1},
            {ConnKind::Forward, 4, 2, 0},
            {ConnKind::Backward, 4, 3, 0},
            {ConnKind::Forward, 4, 3, 2},
            {ConnKind::Downward, 3, 2, 1},
            {ConnKind::Forward, 3, 2, 0},
            {ConnKind::Backward, 3, 2, 0},
            {ConnKind::Downward, 2, 1, 0},
        });
}

MatryoshkaColoring fixture_c1(uint32_t trees) {
    if (trees == 0) throw DomainError("fixture_c1: need at least one tree");
    std::vector<Connection> conns = fixture_c0().connections;
    conns.push_back({ConnKind::Forward, 5, 4, 0});
    conns.push_back({ConnKind::Backward, 5, 4, 0});
    conns.push_back({ConnKind::Downward, 5, 4, 3});
    Ordinal dom = add(Ordinal::omega_power(4, trees), Ordinal(1));
    return MatryoshkaColoring::make(std::move(dom), std::move(conns));
}

MatryoshkaColoring fixture_cn3() {
    std::vector<Connection> conns = fixture_c0().connections;
    conns.push_back({ConnKind::Downward, 5, 4, 3});
    Ordinal dom = add(Ordinal::omega_power(4), Ordinal(1));
    return MatryoshkaColoring::make(std::move(dom), std::move(conns));
}

Coloring fixture_cyclic() {
    return Coloring(CyclicExampleColoring{add(Ordinal::omega_power(1, 3), Ordinal(1))});
}

CanonicalTables fixture_cyclic_tables() {
    CanonicalTables t({1, 1, 1});
    t.set_cross(1, 0, 2, 0, true);
    t.set_cross(2, 0, 3, 0, true);
    t.set_cross(3, 0, 1, 0, true);
    return t;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == '#') break;
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

uint32_t to_u32(const std::string& s) {
    size_t pos = 0;
    unsigned long v = std::stoul(s, &pos);
    if (pos != s.size() || v > UINT32_MAX) throw ParseError("bad number '" + s + "'");
    return static_cast<uint32_t>(v);
}

Cell parse_cell(const std::string& s) {
    // (i,j)
    if (s.size() < 5 || s.front() != '(' || s.back() != ')')
        throw ParseError("bad cell '" + s + "'");
    auto comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("bad cell '" + s + "'");
    return Cell{to_u32(s.substr(1, comma - 1)), to_u32(s.substr(comma + 1, s.size() - comma - 2))};
}

std::vector<uint32_t> ungroup_successor(const Ordinal& dom) {
    // domain must have the shape w^m1 + ... + w^mn + 1
    if (!dom.is_successor()) throw ParseError("canonical-tables domain must be a successor");
    std::vector<uint32_t> ms;
    for (const Term& t : dom.terms()) {
        if (t.exp == 0) {
            if (t.coef != 1)
                throw ParseError("canonical-tables domain must end with a single +1");
            continue;
        }
        for (uint64_t c = 0; c < t.coef; ++c) ms.push_back(t.exp);
    }
    if (ms.empty()) throw ParseError("canonical-tables domain must contain a limit part");
    return ms;
}

}  // namespace

Coloring read_coloring(std::istream& in) {
    std::optional<Ordinal> domain;
    std::string type;
    std::vector<Connection> conns;
    std::vector<std::pair<Cell, Cell>> edges;
    std::optional<CanonicalTables> tables;
    std::string line;
    while (std::getline(in, line)) {
        auto tok = tokenize(line);
        if (tok.empty()) continue;
        const std::string& head = tok[0];
        if (head == "domain") {
            if (tok.size() != 2) throw ParseError("domain line needs one literal");
            domain = parse_ordinal(tok[1]);
        } else if (head == "type") {
            if (tok.size() != 2) throw ParseError("type line needs one word");
            type = tok[1];
            if (type == "canonical-tables") {
                if (!domain) throw ParseError("type canonical-tables requires a prior domain");
                tables.emplace(ungroup_successor(*domain));
            }
        } else if (head == "conn") {
            if (tok.size() != 5 || tok[1].size() != 1)
                throw ParseError("conn lines read: conn F|B|D <k> <j1> <j2>");
            conns.push_back(Connection{kind_from_letter(tok[1][0]), to_u32(tok[2]),
                                       to_u32(tok[3]), to_u32(tok[4])});
        } else if (head == "edge") {
            if (tok.size() != 3) throw ParseError("edge lines read: edge (i,j) (i,j)");
            edges.emplace_back(parse_cell(tok[1]), parse_cell(tok[2]));
        } else if (head == "within") {
            if (!tables) throw ParseError("within line outside canonical-tables");
            if (tok.size() != 5) throw ParseError("within lines read: within i j k 0|1");
            tables->set_within(to_u32(tok[1]), to_u32(tok[2]), to_u32(tok[3]),
                               to_u32(tok[4]) != 0);
        } else if (head == "cross") {
            if (!tables) throw ParseError("cross line outside canonical-tables");
            if (tok.size() != 6) throw ParseError("cross lines read: cross i j k l 0|1");
            tables->set_cross(to_u32(tok[1]), to_u32(tok[2]), to_u32(tok[3]), to_u32(tok[4]),
                              to_u32(tok[5]) != 0);
        } else if (head == "default") {
            if (!tables) throw ParseError("default line outside canonical-tables");
            if (tok.size() != 2 || (tok[1] != "red" && tok[1] != "blue"))
                throw ParseError("default lines read: default red|blue");
            tables->set_residual(tok[1] == "blue" ? Color::Blue : Color::Red);
        } else {
            throw ParseError("unknown coloring directive '" + head + "'");
        }
    }
    if (!domain) throw ParseError("coloring file is missing a domain line");
    if (type == "matryoshka") return Coloring(MatryoshkaColoring::make(*domain, std::move(conns)));
    if (type == "cellgraph") return Coloring(CellGraphColoring::make(*domain, std::move(edges)));
    if (type == "canonical-tables") return Coloring(*std::move(tables));
    throw ParseError("coloring file is missing a valid type line");
}

Coloring read_coloring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open coloring file: " + path);
    return read_coloring(in);
}

void write_coloring(std::ostream& out, const Coloring& c) {
    out << "domain " << render(c.domain()) << "\n";
    out << "type " << c.kind() << "\n";
    if (const auto* m = c.as_matryoshka()) {
        for (const Connection& conn : m->connections)
            out << "conn " << kind_letter(conn.kind) << ' ' << conn.degree << ' ' << conn.hi_rank
                << ' ' << conn.lo_rank << "\n";
    } else if (const auto* g = c.as_cellgraph()) {
        for (const auto& [a, b] : g->edges)
            out << "edge " << to_string(a) << ' ' << to_string(b) << "\n";
    } else if (const auto* t = c.as_tables()) {
        out << "default " << (t->residual() == Color::Blue ? "blue" : "red") << "\n";
        for (uint32_t i = 1; i <= t->tree_count(); ++i)
            for (uint32_t j = 1; j <= t->tree_rank(i); ++j)
                for (uint32_t k = 0; k < j; ++k)
                    if (t->within(i, j, k))
                        out << "within " << i << ' ' << j << ' ' << k << " 1\n";
        for (uint32_t i = 1; i <= t->tree_count(); ++i)
            for (uint32_t k = 1; k <= t->tree_count(); ++k) {
                if (i == k) continue;
                for (uint32_t j = 0; j <= t->tree_rank(i); ++j)
                    for (uint32_t l = 0; l <= t->tree_rank(k); ++l)
                        if (t->cross(i, j, k, l))
                            out << "cross " << i << ' ' << j << ' ' << k << ' ' << l << " 1\n";
            }
    }
}

}  // namespace opl
