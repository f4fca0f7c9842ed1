// Proves the shipped 39-player partition core stable and shows that every
// deviation walk on the 40-player game keeps cycling.

#include <chrono>
#include <iostream>
#include <random>

#include "fhg/instances.hpp"
#include "fhg/io.hpp"
#include "fhg/stability.hpp"

using namespace fhg;

int main(int argc, char** argv)
{
    const int starts = argc > 1 ? std::stoi(argv[1]) : 10;

    const auto t0 = std::chrono::steady_clock::now();
    const auto rep = is_core_stable(gadgets::stable_39(), gadgets::stable_39_partition(), SearchBudget::connected());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "39-player partition:\n" << serialize_partition(gadgets::stable_39_partition());
    std::cout << "verdict: " << to_string(rep.verdict) << " (" << rep.nodes << " nodes, " << secs << " s)\n\n";

    const Game g = gadgets::empty_core_40();
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick(0, 39);
    for (int k = 0; k < starts; ++k) {
        std::vector<int> labels(40);
        for (int& l : labels) {
            l = pick(rng);
        }
        const auto w = deviation_walk(g, Partition::from_labels(labels), 10000);
        std::cout << "walk " << k + 1 << ": " << to_string(w.outcome) << " after " << w.steps << " steps";
        if (w.outcome == WalkOutcome::cycled) {
            std::cout << ", cycle length " << w.steps - w.cycle_start;
        }
        std::cout << "\n";
    }
    return rep.verdict == Verdict::stable ? 0 : 1;
}
