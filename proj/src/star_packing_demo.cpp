// Runs the star-packing local search on the eleven-vertex example and prints
// every move with its objective vector and potential.

#include <iostream>

#include "fhg/instances.hpp"
#include "fhg/io.hpp"
#include "fhg/star_packing.hpp"

using namespace fhg;

namespace {

std::string show(const ObjectiveVector& v)
{
    std::string s = "(";
    for (std::size_t k = 0; k < v.values.size(); ++k) {
        s += (k ? " " : "") + v.values[k].str();
    }
    return s + ")";
}

}  // namespace

int main()
{
    const Game g = gadgets::star_packing_11();
    const StarPacking start = gadgets::star_packing_11_start();
    std::cout << "start, phi " << phi_potential(start, g.size()) << " " << show(objective(start)) << "\n"
              << serialize_partition(start.to_partition());

    const auto run = improve_star_packing(g, start);
    for (const auto& m : run.moves) {
        std::cout << (m.kind == StarMoveKind::pair_leaves ? "pair leaves " : "move leaf ") << m.leaf + 1 << " and "
                  << m.other + 1 << ": phi " << m.phi_before << " -> " << m.phi_after << ", " << show(m.after) << "\n";
    }
    std::cout << "final:\n" << serialize_partition(run.partition());
}
