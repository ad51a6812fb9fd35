// Walks the star on four vertices through the whole pipeline: its curvature
// has a negative center, the upper bound K <= B survives, and the lower
// bound A <= K fails for the uniform measure on the leaves.

#include <iostream>

#include "gcurv/game.hpp"
#include "gcurv/generators.hpp"
#include "gcurv/minimax.hpp"

int main() {
    using namespace gcurv;
    const Graph g = star_graph(4);
    const DistanceMatrix d = apsp(g);
    const CurvatureSolution sol = solve_curvature(d);

    std::cout << "w =";
    for (const auto& x : sol.w) std::cout << ' ' << x;
    std::cout << "\nK = " << *sol.bound_K << '\n';

    const Vertex leaves[] = {1, 2, 3};
    const auto t = transport_vector(d, measure_uniform_on(4, leaves));
    std::cout << "leaf-uniform: A = " << t.A << ", B = " << t.B << '\n';

    const auto game = game_value(d);
    std::cout << "game value = " << game.value << '\n';
}
