#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hodgeblocks/su2_model.hpp"

namespace hodgeblocks {

/// Combinatorial input to an evaluation: a genus-g surface with input colors
/// lambda_1..lambda_n and optionally one output color mu (cobordism form).
struct SurfaceDatum {
    int genus = 0;
    std::vector<int> colors;
    std::optional<int> output_color;
};

/// True iff the space is forced to vanish by parity: the colored SU(2) blocks
/// are zero whenever sum(lambda_i) - mu is odd.
inline bool parity_vanishes(const SurfaceDatum& d) {
    long long sum = 0;
    for (int c : d.colors) sum += c;
    if (d.output_color) sum -= *d.output_color;
    return sum % 2 != 0;
}

/// The weight of the Hodge decomposition: (sum(lambda_i) - mu) / 2.
inline Rational weight_of(const SurfaceDatum& d) {
    long long sum = 0;
    for (int c : d.colors) sum += c;
    if (d.output_color) sum -= *d.output_color;
    return Rational(sum) / 2;
}

inline void check_color(const FrobeniusAlgebra& algebra, int color) {
    if (color < 0 || color >= algebra.rank())
        throw ColorOutOfRange("color " + std::to_string(color) + " outside the color set {0.." +
                              std::to_string(algebra.rank() - 1) + "}");
}

/// The product [lambda_1] * ... * [lambda_n]; the unit for n = 0.
inline RingElement color_product(const FrobeniusAlgebra& algebra, const std::vector<int>& colors) {
    RingElement acc = algebra.unit();
    for (int c : colors) {
        check_color(algebra, c);
        acc = algebra.ring_mul(acc, algebra.basis_element(c));
    }
    return acc;
}

/// The Hodge polynomial e = sum dim(E^{p,q}) u^p v^q of the block attached
/// to the datum: the counit of [lambda_1]*...*[lambda_n]*omega^g, or the
/// [mu]-coefficient of that product when an output color is set.
inline LaurentPoly hodge_polynomial(const FrobeniusAlgebra& algebra, const SurfaceDatum& d) {
    if (d.genus < 0) throw InputError("genus must be non-negative");
    if (d.output_color) check_color(algebra, *d.output_color);
    RingElement full = algebra.ring_mul(color_product(algebra, d.colors), algebra.power(algebra.omega(), d.genus));
    const int mu = d.output_color.value_or(0);
    return algebra.to_named_basis(full)[static_cast<std::size_t>(mu)];
}

/// Substitution point computing signatures: (-1, 1) when floor(2s/r) is
/// even, (1, -1) when it is odd.
inline std::pair<Int, Int> signature_point(const ModelParams& params) {
    validate(params);
    const bool even = ((2 * params.s) / params.r) % 2 == 0;
    return even ? std::pair<Int, Int>{-1, 1} : std::pair<Int, Int>{1, -1};
}

/// Exact integer specialization; the substitution must come out integral.
inline Int specialize_int(const LaurentPoly& e, const Int& u0, const Int& v0) {
    const Rational value = specialize(e, u0, v0);
    if (denominator(value) != 1)
        throw InvariantViolation("specialization expected to be an integer, got " + to_string(value));
    return numerator(value);
}

/// Signature of the invariant Hermitian form on a closed colored surface.
/// Defined only for closed data: the specialization rule is stated for the
/// closed algebra, so an output color is refused rather than guessed.
inline Int signature(const FrobeniusAlgebra& algebra, const ModelParams& params, const SurfaceDatum& d) {
    if (d.output_color)
        throw OutputColorUnsupported("signature is defined for closed colored surfaces only");
    const auto [u0, v0] = signature_point(params);
    return specialize_int(hodge_polynomial(algebra, d), u0, v0);
}

/// Gap diagnostics of a homogeneous Hodge polynomial. Type-1 gaps need more
/// than one residue class of p mod 1 and are structurally impossible with
/// integer bidegrees; a type-2 gap is an internal zero of the p-support.
struct GapReport {
    bool has_type2_gap = false;
    std::vector<Exp> p_support;
};

inline GapReport gap_scan(const LaurentPoly& e) {
    GapReport report;
    if (e.is_zero()) return report;
    const Exp m = e.terms().front().first.p + e.terms().front().first.q;
    for (const auto& [exp, c] : e.terms()) {
        if (exp.p + exp.q != m)
            throw NotHomogeneous("gap_scan requires a homogeneous polynomial, got " + to_string(e));
        report.p_support.push_back(exp.p);  // already sorted: terms are ordered by (p, q)
    }
    const Exp span = report.p_support.back() - report.p_support.front();
    report.has_type2_gap = span + 1 != static_cast<Exp>(report.p_support.size());
    return report;
}

/// A bidegree shift per color; delta(0) must be (0, 0).
using ShiftMap = std::map<int, std::pair<Rational, Rational>>;

/// Action of a shift on a Hodge polynomial: multiplication by the monomial
/// u^a v^b where (a, b) = sum_i delta(lambda_i). The aggregate shift must be
/// integral for this integer-exponent ring.
inline LaurentPoly apply_shift(const LaurentPoly& e, const SurfaceDatum& d, const ShiftMap& delta) {
    if (auto it = delta.find(0); it != delta.end() && (it->second.first != 0 || it->second.second != 0))
        throw ZeroColorShift("shifts must fix the trivial color: delta(0) = (0, 0)");
    Rational a = 0, b = 0;
    for (int c : d.colors) {
        if (auto it = delta.find(c); it != delta.end()) {
            a += it->second.first;
            b += it->second.second;
        }
    }
    if (denominator(a) != 1 || denominator(b) != 1)
        throw NonIntegerShift("aggregate shift (" + to_string(a) + ", " + to_string(b) + ") is not integral");
    return LaurentPoly::monomial(1, static_cast<Exp>(numerator(a)), static_cast<Exp>(numerator(b))) * e;
}

/// Full evaluation record for one surface datum.
struct HodgeResult {
    LaurentPoly polynomial;
    Rational weight;
    Int dimension;
    std::optional<Int> signature;  // absent when an output color is set
    GapReport gaps;
};

inline HodgeResult evaluate(const FrobeniusAlgebra& algebra, const ModelParams& params, const SurfaceDatum& d) {
    HodgeResult result;
    result.polynomial = hodge_polynomial(algebra, d);
    result.weight = weight_of(d);
    result.dimension = specialize_int(result.polynomial, 1, 1);
    if (!d.output_color) {
        const auto [u0, v0] = signature_point(params);
        result.signature = specialize_int(result.polynomial, u0, v0);
    }
    result.gaps = gap_scan(result.polynomial);

    // Cheap internal cross-checks; a failure here is a bug, not bad input.
    if (!is_homogeneous(result.polynomial, result.weight))
        throw InvariantViolation("computed polynomial is not homogeneous of the expected weight");
    if (parity_vanishes(d) && !result.polynomial.is_zero())
        throw InvariantViolation("odd-parity datum produced a nonzero polynomial");
    if (result.signature && abs(*result.signature) > result.dimension)
        throw InvariantViolation("signature exceeds dimension in absolute value");
    return result;
}

}  // namespace hodgeblocks
