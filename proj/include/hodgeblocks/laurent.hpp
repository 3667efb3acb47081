#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hodgeblocks/errors.hpp"
#include "hodgeblocks/numeric.hpp"

namespace hodgeblocks {

/// Bidegree (p, q): the exponent of u and the exponent of v.
struct ExponentPair {
    Exp p = 0;
    Exp q = 0;

    friend auto operator<=>(const ExponentPair&, const ExponentPair&) = default;
};

/// An element of Z[u^{±1}, v^{±1}]: a finitely supported map from integer
/// bidegrees to arbitrary-precision coefficients.
///
/// Canonical form: terms are kept sorted lexicographically by (p, q) and no
/// stored coefficient is zero, so value equality is term-list equality and
/// serialization is deterministic.
class LaurentPoly {
public:
    using Term = std::pair<ExponentPair, Int>;

    LaurentPoly() = default;

    static LaurentPoly constant(Int c) {
        LaurentPoly a;
        if (c != 0) a.terms_.emplace_back(ExponentPair{0, 0}, std::move(c));
        return a;
    }

    static LaurentPoly monomial(Int c, Exp p, Exp q) {
        LaurentPoly a;
        if (c != 0) a.terms_.emplace_back(ExponentPair{p, q}, std::move(c));
        return a;
    }

    static LaurentPoly one() { return constant(1); }
    static LaurentPoly u() { return monomial(1, 1, 0); }
    static LaurentPoly v() { return monomial(1, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// Coefficient at (p, q); zero if absent.
    Int coeff(Exp p, Exp q) const {
        const ExponentPair key{p, q};
        auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                                   [](const Term& t, const ExponentPair& k) { return t.first < k; });
        if (it != terms_.end() && it->first == key) return it->second;
        return 0;
    }

    LaurentPoly& operator+=(const LaurentPoly& rhs) {
        if (rhs.is_zero()) return *this;
        if (is_zero()) {
            terms_ = rhs.terms_;
            return *this;
        }
        std::vector<Term> merged;
        merged.reserve(terms_.size() + rhs.terms_.size());
        auto a = terms_.begin(), ae = terms_.end();
        auto b = rhs.terms_.begin(), be = rhs.terms_.end();
        while (a != ae && b != be) {
            if (a->first < b->first) {
                merged.push_back(std::move(*a++));
            } else if (b->first < a->first) {
                merged.push_back(*b++);
            } else {
                Int c = std::move(a->second) + b->second;
                if (c != 0) merged.emplace_back(a->first, std::move(c));
                ++a;
                ++b;
            }
        }
        merged.insert(merged.end(), std::make_move_iterator(a), std::make_move_iterator(ae));
        merged.insert(merged.end(), b, be);
        terms_ = std::move(merged);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& rhs) { return *this += (-rhs); }

    LaurentPoly operator-() const {
        LaurentPoly a(*this);
        for (auto& t : a.terms_) t.second = -t.second;
        return a;
    }

    LaurentPoly& operator*=(const LaurentPoly& rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
        a += b;
        return a;
    }

    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
        a -= b;
        return a;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        // Z[u^{±1},v^{±1}] has no zero divisors, so a monomial factor maps
        // terms bijectively and the result is already sorted.
        if (a.is_monomial()) return b.scaled_by_term(a.terms_.front());
        if (b.is_monomial()) return a.scaled_by_term(b.terms_.front());
        std::vector<Term> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                acc.emplace_back(ExponentPair{ea.p + eb.p, ea.q + eb.q}, ca * cb);
        std::sort(acc.begin(), acc.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        LaurentPoly out;
        out.terms_.reserve(acc.size());
        for (auto& t : acc) {
            if (!out.terms_.empty() && out.terms_.back().first == t.first) {
                out.terms_.back().second += t.second;
                if (out.terms_.back().second == 0) out.terms_.pop_back();
            } else if (t.second != 0) {
                out.terms_.push_back(std::move(t));
            }
        }
        return out;
    }

    friend LaurentPoly operator*(const Int& c, const LaurentPoly& a) {
        return a.scaled_by_term({ExponentPair{0, 0}, c});
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    LaurentPoly scaled_by_term(const Term& t) const {
        if (t.second == 0) return {};
        LaurentPoly out;
        out.terms_.reserve(terms_.size());
        for (const auto& [e, c] : terms_)
            out.terms_.emplace_back(ExponentPair{e.p + t.first.p, e.q + t.first.q}, c * t.second);
        return out;
    }

    std::vector<Term> terms_;
};

/// Inverse of a unit monomial ±u^p v^q; the inverse negates the exponents and
/// keeps the coefficient.
inline LaurentPoly invert_monomial(const LaurentPoly& a) {
    if (a.term_count() != 1) throw NotAMonomial("invert_monomial: operand has " + std::to_string(a.term_count()) + " terms, expected exactly 1");
    const auto& [e, c] = a.terms().front();
    if (c != 1 && c != -1) throw NotAUnit("invert_monomial: coefficient " + c.str() + " is not a unit in Z");
    return LaurentPoly::monomial(c, -e.p, -e.q);
}

/// Exact evaluation at integer points (u0, v0). Returns a rational because
/// negative exponents occur in intermediate values (the handle element), even
/// though closed Hodge polynomials always evaluate to integers.
inline Rational specialize(const LaurentPoly& a, const Int& u0, const Int& v0) {
    if (u0 == 0 || v0 == 0) throw ZeroSubstitution("specialize: substitution point must have nonzero coordinates");
    Rational sum = 0;
    for (const auto& [e, c] : a.terms()) {
        Rational term(c);
        if (e.p >= 0)
            term *= int_pow(u0, e.p);
        else
            term /= int_pow(u0, -e.p);
        if (e.q >= 0)
            term *= int_pow(v0, e.q);
        else
            term /= int_pow(v0, -e.q);
        sum += term;
    }
    return sum;
}

/// True iff every term satisfies p + q = m. Vacuously true for 0.
inline bool is_homogeneous(const LaurentPoly& a, const Rational& m) {
    for (const auto& [e, c] : a.terms())
        if (Rational(e.p + e.q) != m) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Text form, shared by the CLI and the JSON records.
//
// Sum of terms `c*u^p*v^q`; `^` omitted for exponent 1, factors omitted for
// exponent 0, unit coefficients folded into the sign, negative exponents
// parenthesized: e.g. `u*v^3 + u^2*v^2`, `2*u^(-1)`, `-v`.
// ---------------------------------------------------------------------------

namespace detail {

inline void append_var(std::string& out, char name, Exp e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (e == 1) return;
    out += '^';
    if (e < 0) {
        out += '(';
        out += std::to_string(e);
        out += ')';
    } else {
        out += std::to_string(e);
    }
}

}  // namespace detail

inline std::string to_string(const LaurentPoly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : a.terms()) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const Int mag = abs(c);
        std::string body;
        if (mag != 1) body = mag.str();
        detail::append_var(body, 'u', e.p);
        detail::append_var(body, 'v', e.q);
        if (body.empty()) body = "1";
        out += body;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& a) { return os << to_string(a); }

/// Parse the text form above. Whitespace-insensitive. Throws ParseError.
inline LaurentPoly parse_laurent(std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    auto fail = [&](const std::string& what) -> ParseError {
        return ParseError("parse error at offset " + std::to_string(i) + ": " + what);
    };
    auto parse_int = [&]() -> Int {
        skip_ws();
        std::string digits;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) digits += text[i++];
        const std::size_t start = digits.size();
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') digits += text[i++];
        if (digits.size() == start) throw fail("expected an integer");
        return Int(digits);
    };
    auto parse_exponent = [&]() -> Exp {
        skip_ws();
        bool parenthesized = false;
        if (i < text.size() && text[i] == '(') {
            parenthesized = true;
            ++i;
        }
        const Int e = parse_int();
        if (parenthesized) {
            skip_ws();
            if (i >= text.size() || text[i] != ')') throw fail("expected ')'");
            ++i;
        }
        return static_cast<Exp>(e);
    };

    LaurentPoly result;
    skip_ws();
    if (i == text.size()) throw fail("empty input");
    bool first_term = true;
    while (true) {
        skip_ws();
        Int sign = 1;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (first_term && text[i] == '+') throw fail("unexpected leading '+'");
            if (text[i] == '-') sign = -1;
            ++i;
        } else if (!first_term) {
            break;
        }
        // One term: optional integer coefficient first, then at most one
        // factor each of u and v, joined by '*'.
        Int coeff = sign;
        Exp pu = 0, pv = 0;
        bool seen_u = false, seen_v = false;
        bool coeff_allowed = true;
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                if (!coeff_allowed) throw fail("coefficient must come first in a term");
                coeff *= parse_int();
            } else if (i < text.size() && (text[i] == 'u' || text[i] == 'v')) {
                const char var = text[i++];
                Exp e = 1;
                skip_ws();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    e = parse_exponent();
                }
                if (var == 'u') {
                    if (seen_u) throw fail("repeated factor 'u'");
                    seen_u = true;
                    pu = e;
                } else {
                    if (seen_v) throw fail("repeated factor 'v'");
                    seen_v = true;
                    pv = e;
                }
            } else {
                throw fail("expected a coefficient or a variable");
            }
            coeff_allowed = false;
            expect_factor = false;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                expect_factor = true;
            }
        }
        result += LaurentPoly::monomial(coeff, pu, pv);
        first_term = false;
        skip_ws();
        if (i == text.size()) break;
    }
    if (i != text.size()) throw fail("trailing characters");
    return result;
}

}  // namespace hodgeblocks
