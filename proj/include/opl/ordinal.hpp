#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace opl {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (ordinal literals, coloring files, certificates).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Structurally invalid argument (precondition violation).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Coefficient arithmetic left the exactly-representable range, or an
/// exponent exceeded the configured cap. Never silently wrapped.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Exponent cap for all ordinals handled by this process. Values above the
/// cap are rejected at construction time. Default 16.
uint32_t exponent_cap();
void set_exponent_cap(uint32_t cap);

struct Term {
    uint32_t exp;
    uint64_t coef;

    friend bool operator==(const Term&, const Term&) = default;
};

/// An ordinal below w^w in Cantor normal form: a finite sum
/// w^e1*c1 + ... + w^ek*ck with e1 > e2 > ... > ek and all ci >= 1.
/// The empty sum is 0. Immutable after construction.
class Ordinal {
public:
    Ordinal() = default;
    explicit Ordinal(uint64_t n);

    static Ordinal omega_power(uint32_t exp, uint64_t coef = 1);
    static Ordinal from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Least exponent; 0 for the zero ordinal.
    uint32_t cb() const;
    /// Last coefficient; 1 for the zero ordinal.
    uint64_t lcoef() const;
    /// Leading exponent; 0 for the zero ordinal.
    uint32_t lead_exp() const;
    /// Leading coefficient; 0 for the zero ordinal.
    uint64_t lead_coef() const;
    /// Coefficient of w^e, 0 when absent.
    uint64_t coef_at(uint32_t e) const;
    /// True iff the ordinal is a successor (has a term with exponent 0).
    bool is_successor() const;

    friend bool operator==(const Ordinal&, const Ordinal&) = default;
    std::strong_ordering operator<=>(const Ordinal& other) const;

private:
    std::vector<Term> terms_;
};

enum class Cmp : int8_t { LT = -1, EQ = 0, GT = 1 };

Cmp compare(const Ordinal& a, const Ordinal& b);

/// CNF sum. Terms of `a` below the leading exponent of `b` are absorbed.
Ordinal add(const Ordinal& a, const Ordinal& b);

struct Stats {
    uint32_t cb;     // least exponent, 0 for zero
    uint64_t lcoef;  // last coefficient, 1 for zero

    friend bool operator==(const Stats&, const Stats&) = default;
};

Stats stats(const Ordinal& a);

/// Grammar: ordinal := term ("+" term)*
///          term    := "w^" nat ["*" pos] | "w" ["*" pos] | nat
/// Exponents must be strictly decreasing; coefficients must be positive
/// (the literal "0" alone denotes the zero ordinal).
Ordinal parse_ordinal(std::string_view text);

/// Unique canonical literal; parse_ordinal(render(x)) == x.
std::string render(const Ordinal& a);

}  // namespace opl
