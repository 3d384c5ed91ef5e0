// Prints one PASS/FAIL line per acceptance criterion; nonzero exit on any failure.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "scatter/acceptance.hpp"

int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    int failed = 0;
    for (const auto& r : scatter::run_acceptance(ids)) {
        std::cout << scatter::format_result(r) << std::endl;
        if (!r.pass) ++failed;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
