// Prints the handle element omega of several models in the named basis, and
// the Hodge polynomials it produces when handles are added to a one-holed
// torus with a single color.

#include <iostream>

#include "hodgeblocks/hodgeblocks.hpp"

using namespace hodgeblocks;

int main() {
    for (const auto& params : {ModelParams{3, 1}, ModelParams{5, 3}, ModelParams{7, 5}}) {
        const FrobeniusAlgebra algebra = build_algebra(params);
        std::cout << "r=" << params.r << " s=" << params.s << "\n  omega = ";
        const auto nb = algebra.to_named_basis(algebra.omega());
        bool first = true;
        for (int k = 0; k < algebra.rank(); ++k) {
            if (nb[static_cast<std::size_t>(k)].is_zero()) continue;
            if (!first) std::cout << " + ";
            std::cout << "(" << to_string(nb[static_cast<std::size_t>(k)]) << ")*[" << k << "]";
            first = false;
        }
        std::cout << '\n';
        for (int g = 1; g <= 3; ++g) {
            const SurfaceDatum d{g, {2 % (params.r - 1)}, std::nullopt};
            std::cout << "  e(V_" << g << "(" << d.colors[0] << ")) = " << to_string(hodge_polynomial(algebra, d))
                      << '\n';
        }
    }
    return 0;
}
