#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hodgeblocks/unipoly.hpp"

namespace hodgeblocks {

/// Element of a quotient ring V = Z[u^{±1},v^{±1}][X]/(modulus), stored as
/// coordinates in the X-power basis 1, X, ..., X^{N-1}.
class RingElement {
public:
    RingElement() = default;
    explicit RingElement(std::vector<LaurentPoly> coords) : coords_(std::move(coords)) {}

    int size() const { return static_cast<int>(coords_.size()); }
    const std::vector<LaurentPoly>& coords() const { return coords_; }
    const LaurentPoly& coord(int j) const { return coords_[static_cast<std::size_t>(j)]; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }

    RingElement& operator+=(const RingElement& rhs) {
        if (size() != rhs.size()) throw InvariantViolation("RingElement sum: rank mismatch");
        for (int j = 0; j < size(); ++j) coords_[static_cast<std::size_t>(j)] += rhs.coord(j);
        return *this;
    }

    friend RingElement operator+(RingElement a, const RingElement& b) {
        a += b;
        return a;
    }

    friend RingElement operator*(const LaurentPoly& s, const RingElement& a) {
        std::vector<LaurentPoly> coords;
        coords.reserve(a.coords_.size());
        for (const auto& c : a.coords_) coords.push_back(s * c);
        return RingElement(std::move(coords));
    }

    friend bool operator==(const RingElement&, const RingElement&) = default;

private:
    std::vector<LaurentPoly> coords_;
};

/// A finite free algebra V = Z[u^{±1},v^{±1}][X]/(modulus) with a
/// distinguished basis [0], ..., [N-1] of monic polynomials of strictly
/// increasing degree, a counit reading off the [0]-coordinate, and an
/// involution on basis indices.
///
/// The named basis being unitriangular against the X-power basis is what
/// makes the basis change exact back-substitution; no linear solving over
/// the Laurent ring is ever needed.
///
/// Instances are immutable after construction. The handle element omega is
/// built eagerly by the constructor, so sharing one algebra across threads
/// needs no synchronization.
class FrobeniusAlgebra {
public:
    FrobeniusAlgebra(UniPoly modulus, std::vector<UniPoly> named_basis, std::vector<int> involution)
        : modulus_(std::move(modulus)), named_basis_(std::move(named_basis)), involution_(std::move(involution)) {
        const int n = static_cast<int>(named_basis_.size());
        if (n < 1) throw InvariantViolation("algebra must have rank >= 1");
        if (!modulus_.is_monic() || modulus_.degree() != n)
            throw InvariantViolation("modulus must be monic of degree equal to the rank");
        for (int k = 0; k < n; ++k) {
            const UniPoly& b = named_basis_[static_cast<std::size_t>(k)];
            if (b.degree() != k || !b.is_monic())
                throw InvariantViolation("named basis element " + std::to_string(k) + " must be monic of degree " + std::to_string(k));
        }
        if (static_cast<int>(involution_.size()) != n || involution_[0] != 0)
            throw InvariantViolation("involution must be a permutation fixing 0");
        for (int k = 0; k < n; ++k) {
            const int d = involution_[static_cast<std::size_t>(k)];
            if (d < 0 || d >= n || involution_[static_cast<std::size_t>(d)] != k)
                throw InvariantViolation("involution must be a self-inverse permutation");
        }
        basis_elements_.reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) basis_elements_.push_back(reduce(named_basis_[static_cast<std::size_t>(k)]));
        omega_ = build_omega();
    }

    int rank() const { return static_cast<int>(named_basis_.size()); }
    const UniPoly& modulus() const { return modulus_; }
    const UniPoly& basis_poly(int k) const { return named_basis_[static_cast<std::size_t>(k)]; }
    int involution(int k) const { return involution_[static_cast<std::size_t>(k)]; }

    RingElement zero_element() const { return RingElement(std::vector<LaurentPoly>(static_cast<std::size_t>(rank()))); }

    /// The unit [0] = 1.
    RingElement unit() const { return basis_element(0); }

    /// The named basis element [k] as a ring element.
    const RingElement& basis_element(int k) const { return basis_elements_[static_cast<std::size_t>(k)]; }

    /// Canonical image of an arbitrary polynomial in V: remainder modulo the
    /// modulus, laid out in the X-power basis.
    RingElement reduce(const UniPoly& p) const {
        const UniPoly r = rem_by_monic(p, modulus_);
        std::vector<LaurentPoly> coords(static_cast<std::size_t>(rank()));
        for (int j = 0; j <= r.degree(); ++j) coords[static_cast<std::size_t>(j)] = r.coeff(j);
        return RingElement(std::move(coords));
    }

    /// X-power expansion of an element (a polynomial of degree < rank).
    UniPoly lift(const RingElement& a) const { return UniPoly::from_coeffs(a.coords()); }

    /// The product in V: multiply the lifts and reduce. Commutative and
    /// associative.
    RingElement ring_mul(const RingElement& a, const RingElement& b) const {
        check_element(a);
        check_element(b);
        return reduce(lift(a) * lift(b));
    }

    /// Coefficients c_k with a = sum_k c_k [k], by back-substitution from
    /// degree N-1 downward.
    std::vector<LaurentPoly> to_named_basis(const RingElement& a) const {
        check_element(a);
        std::vector<LaurentPoly> rest = a.coords();
        std::vector<LaurentPoly> out(rest.size());
        for (int k = rank() - 1; k >= 0; --k) {
            LaurentPoly c = std::move(rest[static_cast<std::size_t>(k)]);
            if (!c.is_zero()) {
                const UniPoly& b = named_basis_[static_cast<std::size_t>(k)];
                for (int j = 0; j < k; ++j) {
                    if (!b.coeff(j).is_zero()) rest[static_cast<std::size_t>(j)] -= c * b.coeff(j);
                }
            }
            out[static_cast<std::size_t>(k)] = std::move(c);
        }
        return out;
    }

    /// Inverse of to_named_basis: sum_k coeffs[k] * [k].
    RingElement from_named_basis(const std::vector<LaurentPoly>& coeffs) const {
        if (static_cast<int>(coeffs.size()) != rank())
            throw InvariantViolation("from_named_basis: expected " + std::to_string(rank()) + " coefficients");
        RingElement acc = zero_element();
        for (int k = 0; k < rank(); ++k) {
            if (!coeffs[static_cast<std::size_t>(k)].is_zero())
                acc += coeffs[static_cast<std::size_t>(k)] * basis_element(k);
        }
        return acc;
    }

    /// The counit: the [0]-coordinate in the named basis.
    LaurentPoly epsilon(const RingElement& a) const { return to_named_basis(a)[0]; }

    /// The bilinear form eta(a, b) = epsilon(a * b).
    LaurentPoly eta(const RingElement& a, const RingElement& b) const { return epsilon(ring_mul(a, b)); }

    /// The handle element: sum over k of epsilon([k][k†])^{-1} [k][k†].
    const RingElement& omega() const { return omega_; }

    /// a^g by repeated squaring; a^0 is the unit.
    RingElement power(RingElement a, long long g) const {
        check_element(a);
        RingElement acc = unit();
        while (g > 0) {
            if (g & 1) acc = ring_mul(acc, a);
            g >>= 1;
            if (g > 0) a = ring_mul(a, a);
        }
        return acc;
    }

private:
    void check_element(const RingElement& a) const {
        if (a.size() != rank()) throw InvariantViolation("element does not belong to this algebra (rank mismatch)");
    }

    RingElement build_omega() const {
        RingElement acc = zero_element();
        for (int k = 0; k < rank(); ++k) {
            const RingElement pair = ring_mul(basis_element(k), basis_element(involution(k)));
            const LaurentPoly norm = epsilon(pair);
            if (norm.term_count() != 1 || (norm.terms().front().second != 1 && norm.terms().front().second != -1))
                throw NonMonomialNorm("epsilon([" + std::to_string(k) + "][" + std::to_string(involution(k)) +
                                      "]) = " + to_string(norm) + " is not a unit monomial");
            acc += invert_monomial(norm) * pair;
        }
        return acc;
    }

    UniPoly modulus_;
    std::vector<UniPoly> named_basis_;
    std::vector<int> involution_;
    std::vector<RingElement> basis_elements_;
    RingElement omega_;
};

}  // namespace hodgeblocks
