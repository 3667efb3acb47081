#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hodgeblocks/hodge_engine.hpp"

// Independent verification paths. None of these touch quotient-ring
// reduction: the structure-constant path is built from the three-term
// recurrence and linearity alone, the matrix path represents elements as
// matrices acting on the named basis, and the determinant path recomputes the
// characteristic polynomials by cofactor expansion. A bug in the main
// evaluation pipeline cannot propagate here.

namespace hodgeblocks {

/// Multiplication table of the named basis: [j] * [k] = sum_l c(j,k,l) [l],
/// derived without polynomial division. Row 0 is the identity, row 1 comes
/// from the recurrence [1][k] = [k+1] + w_k [k-1] (with [r-1] dropped, since
/// it is the modulus), and row j+1 from [j+1][k] = [1]([j][k]) - w_j [j-1][k].
class StructureConstants {
public:
    explicit StructureConstants(const ModelParams& params) {
        const WeightSequence w = weight_sequence(params);
        rank_ = static_cast<int>(w.size()) + 1;
        const int n = rank_;
        table_.assign(static_cast<std::size_t>(n) * n * n, LaurentPoly{});
        for (int k = 0; k < n; ++k) at(0, k, k) = LaurentPoly::one();
        if (n >= 2) {
            at(1, 0, 1) = LaurentPoly::one();
            for (int k = 1; k < n; ++k) {
                if (k + 1 < n) at(1, k, k + 1) = LaurentPoly::one();
                at(1, k, k - 1) = w[static_cast<std::size_t>(k - 1)];
            }
        }
        for (int j = 2; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                for (int l = 0; l < n; ++l) {
                    LaurentPoly acc;
                    for (int m = 0; m < n; ++m) {
                        if (!at(j - 1, k, m).is_zero() && !at(1, m, l).is_zero())
                            acc += at(j - 1, k, m) * at(1, m, l);
                    }
                    acc -= w[static_cast<std::size_t>(j - 2)] * at(j - 2, k, l);
                    at(j, k, l) = std::move(acc);
                }
            }
        }
        build_omega();
    }

    int rank() const { return rank_; }

    const LaurentPoly& c(int j, int k, int l) const {
        return table_[(static_cast<std::size_t>(j) * rank_ + k) * rank_ + l];
    }

    /// The handle element in named-basis coordinates.
    const std::vector<LaurentPoly>& omega_coords() const { return omega_; }

    /// Coefficient of [l] in [k] * omega.
    const LaurentPoly& omega_action(int k, int l) const {
        return omega_mul_[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
    }

    std::vector<LaurentPoly> unit_coords() const {
        std::vector<LaurentPoly> coords(static_cast<std::size_t>(rank_));
        coords[0] = LaurentPoly::one();
        return coords;
    }

    /// Named-basis coordinates of (sum_k coords_k [k]) * [color].
    std::vector<LaurentPoly> mul_basis(int color, const std::vector<LaurentPoly>& coords) const {
        std::vector<LaurentPoly> out(static_cast<std::size_t>(rank_));
        for (int k = 0; k < rank_; ++k) {
            const LaurentPoly& ck = coords[static_cast<std::size_t>(k)];
            if (ck.is_zero()) continue;
            for (int l = 0; l < rank_; ++l) {
                if (!c(color, k, l).is_zero()) out[static_cast<std::size_t>(l)] += ck * c(color, k, l);
            }
        }
        return out;
    }

    std::vector<LaurentPoly> mul_omega(const std::vector<LaurentPoly>& coords) const {
        std::vector<LaurentPoly> out(static_cast<std::size_t>(rank_));
        for (int k = 0; k < rank_; ++k) {
            const LaurentPoly& ck = coords[static_cast<std::size_t>(k)];
            if (ck.is_zero()) continue;
            for (int l = 0; l < rank_; ++l) {
                if (!omega_action(k, l).is_zero()) out[static_cast<std::size_t>(l)] += ck * omega_action(k, l);
            }
        }
        return out;
    }

    /// Hodge polynomial of a surface datum via structure-constant expansion.
    LaurentPoly evaluate(const SurfaceDatum& d) const {
        std::vector<LaurentPoly> coords = unit_coords();
        for (int color : d.colors) {
            if (color < 0 || color >= rank_)
                throw ColorOutOfRange("color " + std::to_string(color) + " outside the color set {0.." +
                                      std::to_string(rank_ - 1) + "}");
            coords = mul_basis(color, coords);
        }
        for (int g = 0; g < d.genus; ++g) coords = mul_omega(coords);
        const int mu = d.output_color.value_or(0);
        if (mu < 0 || mu >= rank_) throw ColorOutOfRange("output color out of range");
        return coords[static_cast<std::size_t>(mu)];
    }

private:
    LaurentPoly& at(int j, int k, int l) {
        return table_[(static_cast<std::size_t>(j) * rank_ + k) * rank_ + l];
    }

    void build_omega() {
        omega_.assign(static_cast<std::size_t>(rank_), LaurentPoly{});
        for (int k = 0; k < rank_; ++k) {
            const LaurentPoly inv_norm = invert_monomial(c(k, k, 0));
            for (int l = 0; l < rank_; ++l) {
                if (!c(k, k, l).is_zero()) omega_[static_cast<std::size_t>(l)] += inv_norm * c(k, k, l);
            }
        }
        omega_mul_.assign(static_cast<std::size_t>(rank_), std::vector<LaurentPoly>(static_cast<std::size_t>(rank_)));
        for (int k = 0; k < rank_; ++k) {
            for (int j = 0; j < rank_; ++j) {
                const LaurentPoly& oj = omega_[static_cast<std::size_t>(j)];
                if (oj.is_zero()) continue;
                for (int l = 0; l < rank_; ++l) {
                    if (!c(j, k, l).is_zero())
                        omega_mul_[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] += oj * c(j, k, l);
                }
            }
        }
    }

    int rank_ = 0;
    std::vector<LaurentPoly> table_;
    std::vector<LaurentPoly> omega_;
    std::vector<std::vector<LaurentPoly>> omega_mul_;
};

inline StructureConstants structure_constants(const ModelParams& params) { return StructureConstants(params); }

// --------------------------------------------------------------------------
// Matrix representation path.
// --------------------------------------------------------------------------

namespace detail {

inline PolyMatrix identity_matrix(int n) {
    PolyMatrix m(static_cast<std::size_t>(n), std::vector<LaurentPoly>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = LaurentPoly::one();
    return m;
}

inline PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    const std::size_t n = a.size();
    PolyMatrix out(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

inline std::vector<LaurentPoly> mat_vec(const PolyMatrix& a, const std::vector<LaurentPoly>& x) {
    const std::size_t n = a.size();
    std::vector<LaurentPoly> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (x[j].is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i) {
            if (!a[i][j].is_zero()) out[i] += a[i][j] * x[j];
        }
    }
    return out;
}

/// Evaluate p at a square matrix argument by Horner's rule.
inline PolyMatrix horner_at_matrix(const UniPoly& p, const PolyMatrix& m) {
    const std::size_t n = m.size();
    PolyMatrix acc(n, std::vector<LaurentPoly>(n));
    for (int j = p.degree(); j >= 0; --j) {
        acc = mat_mul(acc, m);
        if (!p.coeff(j).is_zero()) {
            for (std::size_t i = 0; i < n; ++i) acc[i][i] += p.coeff(j);
        }
    }
    return acc;
}

}  // namespace detail

/// The regular representation on the named basis: [k] acts as chi_{M_k}(M),
/// with M the multiplication-by-[1] matrix. An element's named coordinates
/// are recovered by applying its matrix to the basis vector of [0].
struct MatrixRep {
    int rank = 0;
    PolyMatrix mult_by_one;
    std::vector<PolyMatrix> basis_matrix;
    PolyMatrix omega_matrix;
};

inline MatrixRep build_matrix_rep(const ModelParams& params) {
    MatrixRep rep;
    rep.mult_by_one = multiplication_by_one_matrix(params);
    rep.rank = static_cast<int>(rep.mult_by_one.size());
    const auto chi = char_poly_sequence(weight_sequence(params));
    rep.basis_matrix.reserve(static_cast<std::size_t>(rep.rank));
    for (int k = 0; k < rep.rank; ++k)
        rep.basis_matrix.push_back(detail::horner_at_matrix(chi[static_cast<std::size_t>(k)], rep.mult_by_one));
    rep.omega_matrix.assign(static_cast<std::size_t>(rep.rank), std::vector<LaurentPoly>(static_cast<std::size_t>(rep.rank)));
    for (int k = 0; k < rep.rank; ++k) {
        const PolyMatrix square = detail::mat_mul(rep.basis_matrix[static_cast<std::size_t>(k)],
                                                  rep.basis_matrix[static_cast<std::size_t>(k)]);
        const LaurentPoly inv_norm = invert_monomial(square[0][0]);
        for (std::size_t i = 0; i < square.size(); ++i)
            for (std::size_t j = 0; j < square.size(); ++j)
                rep.omega_matrix[i][j] += inv_norm * square[i][j];
    }
    return rep;
}

inline LaurentPoly matrix_oracle(const MatrixRep& rep, const SurfaceDatum& d) {
    PolyMatrix product = detail::identity_matrix(rep.rank);
    for (int color : d.colors) {
        if (color < 0 || color >= rep.rank)
            throw ColorOutOfRange("color " + std::to_string(color) + " outside the color set {0.." +
                                  std::to_string(rep.rank - 1) + "}");
        product = detail::mat_mul(product, rep.basis_matrix[static_cast<std::size_t>(color)]);
    }
    for (int g = 0; g < d.genus; ++g) product = detail::mat_mul(product, rep.omega_matrix);
    const int mu = d.output_color.value_or(0);
    if (mu < 0 || mu >= rep.rank) throw ColorOutOfRange("output color out of range");
    return product[static_cast<std::size_t>(mu)][0];
}

inline LaurentPoly matrix_oracle(const ModelParams& params, const SurfaceDatum& d) {
    return matrix_oracle(build_matrix_rep(params), d);
}

// --------------------------------------------------------------------------
// Closed forms at (r, s) = (5, 3).
// --------------------------------------------------------------------------

/// Hodge polynomial of the all-2-colored genus-0 block for (r, s) = (5, 3):
/// sum over p+q = n of binom(q-1, p-1) u^p v^q. Its value at (1, 1) is the
/// Fibonacci number F_{n-1}.
inline LaurentPoly pascal_oracle(int n) {
    if (n < 2) throw InputError("pascal_oracle requires n >= 2");
    LaurentPoly e;
    for (Exp p = 1; p < n; ++p) {
        const Exp q = n - p;
        // binom(q-1, p-1), zero when p-1 > q-1
        if (p > q) continue;
        Int binom = 1;
        for (Exp i = 1; i <= p - 1; ++i) {
            binom *= (q - 1) - (p - 1) + i;
            binom /= i;
        }
        e += LaurentPoly::monomial(binom, p, q);
    }
    return e;
}

// --------------------------------------------------------------------------
// Determinant path.
// --------------------------------------------------------------------------

namespace detail {

inline UniPoly det_expand_last_row(const std::vector<std::vector<UniPoly>>& a, std::vector<int>& cols, int m) {
    if (m == 0) return UniPoly::one();
    UniPoly det;
    for (int idx = 0; idx < m; ++idx) {
        const UniPoly& entry = a[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(cols[static_cast<std::size_t>(idx)])];
        if (entry.is_zero()) continue;
        const int removed = cols[static_cast<std::size_t>(idx)];
        cols.erase(cols.begin() + idx);
        const UniPoly minor = det_expand_last_row(a, cols, m - 1);
        cols.insert(cols.begin() + idx, removed);
        if ((m - 1 + idx) % 2 == 0)
            det += entry * minor;
        else
            det -= entry * minor;
    }
    return det;
}

}  // namespace detail

/// det(X I_k - M_k) by cofactor expansion along the last row. Deliberately
/// naive; the three-term recurrence never appears here.
inline UniPoly determinant_oracle(int k, const ModelParams& params) {
    const WeightSequence w = weight_sequence(params);
    if (k < 0 || k > static_cast<int>(w.size()) + 1)
        throw InputError("determinant_oracle: k out of range");
    std::vector<std::vector<UniPoly>> a(static_cast<std::size_t>(k), std::vector<UniPoly>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = UniPoly::X();
        if (i + 1 < k) {
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = UniPoly(-w[static_cast<std::size_t>(i)]);
            a[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = UniPoly(-LaurentPoly::one());
        }
    }
    std::vector<int> cols(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) cols[static_cast<std::size_t>(j)] = j;
    return detail::det_expand_last_row(a, cols, k);
}

}  // namespace hodgeblocks
