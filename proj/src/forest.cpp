#include "opl/forest.hpp"

#include <algorithm>
#include <sstream>

namespace opl {

bool NormalizedVector::agrees_above(const NormalizedVector& other, uint32_t from) const {
    for (const auto& [p, v] : entries)
        if (p >= from && other.at(p) != v) return false;
    for (const auto& [p, v] : other.entries)
        if (p >= from && at(p) != v) return false;
    return true;
}

NormalizedVector nu(const Ordinal& a) {
    NormalizedVector v;
    v.rank = a.cb();
    for (const Term& t : a.terms()) {
        uint64_t e = (t.exp == v.rank) ? t.coef - 1 : t.coef;
        if (e != 0) v.entries[t.exp] = e;
    }
    return v;
}

uint32_t cnf_index(const Ordinal& gamma, const Ordinal& alpha) {
    if (gamma.is_zero()) throw DomainError("cnf_index: empty domain");
    if (compare(alpha, gamma) == Cmp::GT) throw DomainError("cnf_index: point above domain");
    if (alpha.is_zero()) return 1;  // 0 shares the first place with 1

    uint32_t index = 0;
    Ordinal prefix;
    for (const Term& t : gamma.terms()) {
        Ordinal block_end = add(prefix, Ordinal::omega_power(t.exp, t.coef));
        if (compare(alpha, block_end) != Cmp::GT) {
            // alpha lies in this block; its CNF extends the prefix.
            // delta = alpha - prefix decomposes as w^exp * x + lower.
            uint64_t x = 0;
            bool lower = false;
            size_t skip = prefix.terms().size();
            const auto& ts = alpha.terms();
            for (size_t i = skip; i < ts.size(); ++i) {
                if (ts[i].exp == t.exp)
                    x = ts[i].coef;
                else if (ts[i].exp < t.exp)
                    lower = true;
            }
            uint64_t j = (!lower && x >= 1) ? x : x + 1;
            return index + static_cast<uint32_t>(j);
        }
        prefix = block_end;
        index += static_cast<uint32_t>(t.coef);
    }
    throw DomainError("cnf_index: unreachable (alpha <= gamma violated)");
}

bool star_below(const Ordinal& beta, const Ordinal& alpha) {
    if (alpha.is_zero()) return false;
    const uint32_t d = alpha.cb();
    if (beta.cb() >= d && !beta.is_zero()) return false;
    if (d == 0) return false;
    return add(beta, Ordinal::omega_power(d)) == alpha;
}

Ordinal ancestor_at(const Ordinal& alpha, uint32_t d) {
    if (d > exponent_cap()) throw OverflowError("ancestor_at: rank exceeds exponent cap");
    if (!alpha.is_zero() && d < alpha.cb())
        throw DomainError("ancestor_at: rank below the point's own rank");
    if (!alpha.is_zero() && d == alpha.cb()) return alpha;
    if (alpha.is_zero() && d == 0) return alpha;
    return add(alpha, Ordinal::omega_power(d));
}

LcaResult lca(const Ordinal& a, const Ordinal& b, const Ordinal& domain) {
    if (compare(a, domain) != Cmp::LT || compare(b, domain) != Cmp::LT)
        throw DomainError("lca: points must lie strictly below the domain");
    const uint32_t lead = domain.lead_exp();
    uint32_t d = std::max(a.cb(), b.cb());
    for (; d <= lead; ++d) {
        Ordinal pa = ancestor_at(a, d);
        Ordinal pb = ancestor_at(b, d);
        if (pa == pb) {
            if (compare(pa, domain) == Cmp::LT) return LcaResult{d, false, pa};
            break;  // chains merge only above the domain
        }
    }
    return LcaResult{lead, true, Ordinal()};
}

namespace {

// Decrement the last CNF term (the subtree base: everything <*-below alpha
// sits strictly above this value).
Ordinal decrement_last(const Ordinal& alpha) {
    std::vector<Term> ts = alpha.terms();
    if (ts.empty()) throw DomainError("decrement_last: zero");
    if (ts.back().coef == 1)
        ts.pop_back();
    else
        ts.back().coef -= 1;
    return Ordinal::from_terms(std::move(ts));
}

}  // namespace

bool f_contains(const Ordinal& alpha, uint32_t r, uint32_t m, const Ordinal& beta) {
    const uint32_t k = alpha.cb();
    if (m > k) throw DomainError("f_contains: level above the rank of alpha");
    if (m == k) return beta == alpha;
    if (beta.cb() != m && !beta.is_zero()) return false;
    if (beta.is_zero() && m != 0) return false;
    if (!star_below(beta, alpha)) return false;
    // Every chain element strictly below alpha must have L > r.
    Ordinal cur = beta;
    for (uint32_t j = m; j < k; ++j) {
        cur = ancestor_at(beta, j);
        if (cur.lcoef() <= r) return false;
    }
    return true;
}

std::vector<Ordinal> f_first(const Ordinal& alpha, uint32_t r, uint32_t m, size_t count) {
    const uint32_t k = alpha.cb();
    if (m > k) throw DomainError("f_first: level above the rank of alpha");
    std::vector<Ordinal> out;
    if (count == 0) return out;
    if (m == k) {
        out.push_back(alpha);
        return out;
    }
    Ordinal base = decrement_last(alpha);
    // The members below the minimal chain are base + sum_{j>m} w^j*r + w^m*(r+t):
    // each chain coefficient is minimal (r+1) except the bottom one, which
    // varies. These are exactly the smallest members in increasing order.
    std::vector<Term> fixed = base.terms();
    for (uint32_t j = k; j-- > m + 1;) {
        if (r >= 1) fixed.push_back(Term{j, r});  // coefficient (r+1) - 1 on the chain
    }
    if (m == 0 && r == 0 && base.is_zero()) out.push_back(Ordinal());  // 0 shares place 1
    for (uint64_t t = 1; out.size() < count; ++t) {
        std::vector<Term> ts = fixed;
        ts.push_back(Term{m, r + t});
        out.push_back(Ordinal::from_terms(std::move(ts)));
    }
    return out;
}

Cell cell_of(const Ordinal& gamma, const Ordinal& alpha) {
    if (compare(alpha, gamma) != Cmp::LT)
        throw DomainError("cell_of: point must lie strictly below the domain");
    return Cell{cnf_index(gamma, alpha), alpha.cb()};
}

std::string to_string(const Cell& c) {
    std::ostringstream out;
    out << '(' << c.tree << ',' << c.level << ')';
    return out.str();
}

}  // namespace opl
