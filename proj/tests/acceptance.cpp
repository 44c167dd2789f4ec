#include "g2cells/acceptance.hpp"

#include <iostream>

int main() {
    const g2cells::AcceptanceRun run = g2cells::run_acceptance();
    for (const auto& r : run.results) {
        std::cout << r.line() << "\n";
        if (!r.passed)
            for (const auto& p : r.problems) std::cout << "    " << p << "\n";
    }
    return run.all_passed() ? 0 : 1;
}
