#pragma once

#include <random>
#include <vector>

#include "hodgeblocks/hodgeblocks.hpp"

namespace hbtest {

using namespace hodgeblocks;

// Fixed seeds keep every property-test run reproducible.
inline std::mt19937_64 make_rng(std::uint64_t seed = 0x5eed5eedULL) { return std::mt19937_64(seed); }

inline LaurentPoly random_laurent(std::mt19937_64& rng, int max_terms = 6, Exp max_abs_exp = 5, int max_abs_coeff = 9) {
    std::uniform_int_distribution<int> term_count(0, max_terms);
    std::uniform_int_distribution<Exp> exponent(-max_abs_exp, max_abs_exp);
    std::uniform_int_distribution<int> coefficient(-max_abs_coeff, max_abs_coeff);
    LaurentPoly a;
    const int n = term_count(rng);
    for (int i = 0; i < n; ++i) a += LaurentPoly::monomial(coefficient(rng), exponent(rng), exponent(rng));
    return a;
}

inline RingElement random_element(std::mt19937_64& rng, const FrobeniusAlgebra& algebra) {
    std::vector<LaurentPoly> coords;
    coords.reserve(static_cast<std::size_t>(algebra.rank()));
    for (int j = 0; j < algebra.rank(); ++j) coords.push_back(random_laurent(rng, 3, 3, 5));
    return RingElement(std::move(coords));
}

// Independent of everything in the library: F_0 = 0, F_1 = 1.
inline Int fibonacci(int n) {
    Int a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        const Int next = a + b;
        a = b;
        b = next;
    }
    return a;
}

inline LaurentPoly L(const char* text) { return parse_laurent(text); }

}  // namespace hbtest
