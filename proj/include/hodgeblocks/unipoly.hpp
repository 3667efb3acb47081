#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hodgeblocks/laurent.hpp"

namespace hodgeblocks {

/// Polynomial in one variable X with LaurentPoly coefficients: an element of
/// Z[u^{±1}, v^{±1}][X]. Trailing zero coefficients are trimmed, so the
/// leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
public:
    UniPoly() = default;

    explicit UniPoly(LaurentPoly constant) {
        if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
    }

    static UniPoly one() { return UniPoly(LaurentPoly::one()); }

    static UniPoly X() {
        UniPoly p;
        p.coeffs_ = {LaurentPoly{}, LaurentPoly::one()};
        return p;
    }

    static UniPoly x_power(int k) {
        UniPoly p;
        p.coeffs_.assign(static_cast<std::size_t>(k) + 1, LaurentPoly{});
        p.coeffs_.back() = LaurentPoly::one();
        return p;
    }

    static UniPoly from_coeffs(std::vector<LaurentPoly> coeffs) {
        UniPoly p;
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree in X; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const LaurentPoly& coeff(int j) const {
        static const LaurentPoly zero{};
        if (j < 0 || j >= static_cast<int>(coeffs_.size())) return zero;
        return coeffs_[static_cast<std::size_t>(j)];
    }

    const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == LaurentPoly::one(); }

    UniPoly& operator+=(const UniPoly& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
        trim();
        return *this;
    }

    UniPoly& operator-=(const UniPoly& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
        trim();
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) {
        a += b;
        return a;
    }

    friend UniPoly operator-(UniPoly a, const UniPoly& b) {
        a -= b;
        return a;
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        UniPoly out;
        out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, LaurentPoly{});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        out.trim();
        return out;
    }

    friend UniPoly operator*(const LaurentPoly& s, const UniPoly& a) {
        if (s.is_zero() || a.is_zero()) return {};
        UniPoly out;
        out.coeffs_.reserve(a.coeffs_.size());
        for (const auto& c : a.coeffs_) out.coeffs_.push_back(s * c);
        return out;
    }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<LaurentPoly> coeffs_;
};

/// Remainder of p modulo a monic divisor. Exact: monicity means no
/// coefficient division ever occurs.
inline UniPoly rem_by_monic(UniPoly p, const UniPoly& modulus) {
    const int d = modulus.degree();
    while (p.degree() >= d) {
        const int shift = p.degree() - d;
        const LaurentPoly lead = p.coeff(p.degree());
        p -= lead * (UniPoly::x_power(shift) * modulus);
    }
    return p;
}

inline std::string to_string(const UniPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int j = p.degree(); j >= 0; --j) {
        if (p.coeff(j).is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(p.coeff(j)) + ")";
        if (j >= 1) out += "*X";
        if (j >= 2) out += "^" + std::to_string(j);
    }
    return out;
}

}  // namespace hodgeblocks
