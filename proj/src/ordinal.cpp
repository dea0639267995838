#include "opl/ordinal.hpp"

#include <atomic>
#include <cctype>
#include <sstream>

namespace opl {

namespace {
std::atomic<uint32_t> g_exponent_cap{16};
}

uint32_t exponent_cap() { return g_exponent_cap.load(std::memory_order_relaxed); }

void set_exponent_cap(uint32_t cap) {
    if (cap == 0 || cap > 62)
        throw DomainError("exponent cap must be in [1, 62]");
    g_exponent_cap.store(cap, std::memory_order_relaxed);
}

namespace {

void validate(const std::vector<Term>& ts) {
    const uint32_t cap = exponent_cap();
    for (size_t i = 0; i < ts.size(); ++i) {
        if (ts[i].coef == 0)
            throw DomainError("zero coefficient in CNF term");
        if (ts[i].exp > cap)
            throw OverflowError("exponent " + std::to_string(ts[i].exp) +
                                " exceeds cap " + std::to_string(cap));
        if (i > 0 && ts[i - 1].exp <= ts[i].exp)
            throw DomainError("CNF exponents must be strictly decreasing");
    }
}

uint64_t checked_add_u64(uint64_t a, uint64_t b) {
    uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("coefficient overflow in ordinal addition");
    return r;
}

}  // namespace

Ordinal::Ordinal(uint64_t n) {
    if (n > 0) terms_.push_back(Term{0, n});
}

Ordinal Ordinal::omega_power(uint32_t exp, uint64_t coef) {
    return from_terms({Term{exp, coef}});
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
    validate(terms);
    Ordinal a;
    a.terms_ = std::move(terms);
    return a;
}

uint32_t Ordinal::cb() const { return terms_.empty() ? 0 : terms_.back().exp; }

uint64_t Ordinal::lcoef() const { return terms_.empty() ? 1 : terms_.back().coef; }

uint32_t Ordinal::lead_exp() const { return terms_.empty() ? 0 : terms_.front().exp; }

uint64_t Ordinal::lead_coef() const { return terms_.empty() ? 0 : terms_.front().coef; }

uint64_t Ordinal::coef_at(uint32_t e) const {
    for (const Term& t : terms_) {
        if (t.exp == e) return t.coef;
        if (t.exp < e) break;
    }
    return 0;
}

bool Ordinal::is_successor() const {
    return !terms_.empty() && terms_.back().exp == 0;
}

std::strong_ordering Ordinal::operator<=>(const Ordinal& other) const {
    Cmp c = compare(*this, other);
    if (c == Cmp::LT) return std::strong_ordering::less;
    if (c == Cmp::GT) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Cmp compare(const Ordinal& a, const Ordinal& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    const size_t n = std::min(ta.size(), tb.size());
    for (size_t i = 0; i < n; ++i) {
        if (ta[i].exp != tb[i].exp) return ta[i].exp < tb[i].exp ? Cmp::LT : Cmp::GT;
        if (ta[i].coef != tb[i].coef) return ta[i].coef < tb[i].coef ? Cmp::LT : Cmp::GT;
    }
    if (ta.size() != tb.size()) return ta.size() < tb.size() ? Cmp::LT : Cmp::GT;
    return Cmp::EQ;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    const uint32_t lead = b.lead_exp();
    std::vector<Term> out;
    out.reserve(a.terms().size() + b.terms().size());
    for (const Term& t : a.terms()) {
        if (t.exp > lead) out.push_back(t);
    }
    uint64_t merged = checked_add_u64(a.coef_at(lead), b.lead_coef());
    out.push_back(Term{lead, merged});
    for (size_t i = 1; i < b.terms().size(); ++i) out.push_back(b.terms()[i]);
    return Ordinal::from_terms(std::move(out));
}

Stats stats(const Ordinal& a) { return Stats{a.cb(), a.lcoef()}; }

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    Ordinal run() {
        skip_ws();
        if (eof()) throw ParseError("empty ordinal literal");
        std::vector<Term> terms;
        terms.push_back(term());
        skip_ws();
        while (!eof() && peek() == '+') {
            ++pos_;
            skip_ws();
            terms.push_back(term());
            skip_ws();
        }
        if (!eof())
            throw ParseError("trailing characters in ordinal literal: '" +
                             std::string(s_.substr(pos_)) + "'");
        // "0" alone denotes zero; elsewhere a zero coefficient is an error.
        if (terms.size() == 1 && terms[0].exp == 0 && terms[0].coef == 0) return Ordinal();
        return Ordinal::from_terms(std::move(terms));
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    uint64_t number() {
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a number at position " + std::to_string(pos_));
        uint64_t v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            uint64_t d = static_cast<uint64_t>(peek() - '0');
            if (v > (UINT64_MAX - d) / 10) throw OverflowError("number literal too large");
            v = v * 10 + d;
            ++pos_;
        }
        return v;
    }

    Term term() {
        if (eof()) throw ParseError("expected a term");
        if (peek() == 'w') {
            ++pos_;
            uint32_t exp = 1;
            if (!eof() && peek() == '^') {
                ++pos_;
                uint64_t e = number();
                if (e > 62) throw OverflowError("exponent literal too large");
                exp = static_cast<uint32_t>(e);
            }
            uint64_t coef = 1;
            if (!eof() && peek() == '*') {
                ++pos_;
                coef = number();
                if (coef == 0) throw DomainError("zero coefficient in ordinal literal");
            }
            return Term{exp, coef};
        }
        return Term{0, number()};
    }

    std::string_view s_;
    size_t pos_ = 0;
};

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return Parser(text).run(); }

std::string render(const Ordinal& a) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : a.terms()) {
        if (!first) out << '+';
        first = false;
        if (t.exp == 0) {
            out << t.coef;
        } else {
            if (t.exp == 1)
                out << 'w';
            else
                out << "w^" << t.exp;
            if (t.coef != 1) out << '*' << t.coef;
        }
    }
    return out.str();
}

}  // namespace opl
