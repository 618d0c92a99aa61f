#include <iostream>

#include "golden_suite.hpp"

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: golden_tests <drinfeld-forge> <golden dir> [--update]\n";
        return 2;
    }
    const bool update = argc > 3 && std::string(argv[3]) == "--update";
    const auto r = golden::run_suite(argv[1], argv[2], update);
    for (const auto& n : r.golden_mismatch) std::cout << "golden mismatch: " << n << "\n";
    for (const auto& n : r.rerun_mismatch) std::cout << "rerun mismatch: " << n << "\n";
    std::cout << r.cases << " cases, " << r.golden_mismatch.size() << " golden mismatches, " << r.rerun_mismatch.size()
              << " rerun mismatches" << (update ? " (golden files rewritten)" : "") << "\n";
    return (update ? r.rerun_mismatch.empty() : r.ok()) ? 0 : 1;
}
