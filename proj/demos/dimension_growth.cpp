// Verlinde-type dimension growth: exact dimensions of the colorless genus-g
// blocks for (r, s) = (7, 3), and of the n-times-2-colored genus-0 blocks for
// (r, s) = (5, 3), where they follow the Fibonacci sequence.

#include <iostream>

#include "hodgeblocks/hodgeblocks.hpp"

using namespace hodgeblocks;

int main() {
    const ModelParams params{7, 3};
    const FrobeniusAlgebra algebra = build_algebra(params);
    std::cout << "dim V_g() for r=7, s=3:\n";
    for (int g = 0; g <= 8; ++g) {
        const SurfaceDatum d{g, {}, std::nullopt};
        const HodgeResult res = evaluate(algebra, params, d);
        std::cout << "  g=" << g << "  dim=" << to_string(res.dimension) << "  signature=" << to_string(*res.signature)
                  << '\n';
    }

    const ModelParams fib{5, 3};
    const FrobeniusAlgebra fib_algebra = build_algebra(fib);
    std::cout << "\ndim V_0(2,...,2) for r=5, s=3 (Fibonacci):\n  ";
    for (int n = 2; n <= 24; ++n) {
        const SurfaceDatum d{0, std::vector<int>(static_cast<std::size_t>(n), 2), std::nullopt};
        std::cout << to_string(evaluate(fib_algebra, fib, d).dimension) << (n < 24 ? " " : "\n");
    }
    return 0;
}
