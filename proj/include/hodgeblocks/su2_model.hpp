#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hodgeblocks/frobenius.hpp"

namespace hodgeblocks {

/// Parameters of an SU(2) modular functor of level 2r: r >= 3 odd, and
/// 0 < s < r odd and prime to r. The colors are {0, ..., r-2}.
struct ModelParams {
    int r = 0;
    int s = 0;
};

inline ModelParams validate(ModelParams params) {
    if (params.r < 3 || params.r % 2 == 0)
        throw InvalidR("r must be odd and >= 3 (got r=" + std::to_string(params.r) + ")");
    if (params.s <= 0 || params.s >= params.r)
        throw InvalidS("s must satisfy 0 < s < r (got s=" + std::to_string(params.s) + ")");
    if (params.s % 2 == 0)
        throw InvalidS("s must be odd (got s=" + std::to_string(params.s) + ")");
    if (std::gcd(params.s, params.r) != 1)
        throw InvalidS("s must be prime to r (gcd(" + std::to_string(params.s) + "," + std::to_string(params.r) +
                       ")=" + std::to_string(std::gcd(params.s, params.r)) + ")");
    return params;
}

/// The weights w_1, ..., w_{r-2}; each entry is the monomial u or v depending
/// on the parity of floor(2s/r) + floor(ks/r) + floor((k+1)s/r). Floors are
/// exact integer quotients, never floating point.
using WeightSequence = std::vector<LaurentPoly>;

inline WeightSequence weight_sequence(const ModelParams& params) {
    validate(params);
    const long long r = params.r, s = params.s;
    WeightSequence w;
    w.reserve(static_cast<std::size_t>(r - 2));
    for (long long k = 1; k <= r - 2; ++k) {
        const long long floors = (2 * s) / r + (k * s) / r + ((k + 1) * s) / r;
        w.push_back(floors % 2 == 0 ? LaurentPoly::u() : LaurentPoly::v());
    }
    return w;
}

/// Characteristic polynomials of the nested top-left submatrices M_0, ...,
/// M_{r-1} of the tridiagonal multiplication matrix, via the three-term
/// recurrence chi_k = X*chi_{k-1} - w_{k-1}*chi_{k-2}. The last entry is the
/// modulus chi_M.
inline std::vector<UniPoly> char_poly_sequence(const WeightSequence& w) {
    std::vector<UniPoly> chi;
    chi.reserve(w.size() + 2);
    chi.push_back(UniPoly::one());
    chi.push_back(UniPoly::X());
    for (std::size_t k = 2; k <= w.size() + 1; ++k) {
        chi.push_back(UniPoly::X() * chi[k - 1] - w[k - 2] * chi[k - 2]);
    }
    return chi;
}

/// The Frobenius algebra V = Z[u^{±1},v^{±1}][X]/chi_M(X) with named basis
/// [k] = chi_{M_k}(X) and the trivial involution.
inline FrobeniusAlgebra build_algebra(const ModelParams& params) {
    validate(params);
    auto chi = char_poly_sequence(weight_sequence(params));
    UniPoly modulus = std::move(chi.back());
    chi.pop_back();
    std::vector<int> involution(chi.size());
    for (std::size_t k = 0; k < chi.size(); ++k) involution[k] = static_cast<int>(k);
    return FrobeniusAlgebra(std::move(modulus), std::move(chi), std::move(involution));
}

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// The (r-1) x (r-1) matrix of multiplication by [1] in the named basis:
/// zero diagonal, unit subdiagonal, superdiagonal w_1, ..., w_{r-2}.
inline PolyMatrix multiplication_by_one_matrix(const ModelParams& params) {
    const WeightSequence w = weight_sequence(params);
    const std::size_t n = w.size() + 1;
    PolyMatrix m(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        m[i][i + 1] = w[i];
        m[i + 1][i] = LaurentPoly::one();
    }
    return m;
}

}  // namespace hodgeblocks
