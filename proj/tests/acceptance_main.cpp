// Acceptance runner: executes every criterion at its pinned tolerance and
// prints one pass/fail line per criterion. Exit 0 iff all pass.

#include <cstdio>
#include <iostream>

#include "bergman/verify.hpp"

int main() {
    try {
        bergman::VerifyReport report = bergman::run_acceptance({});
        std::cout << report.to_text();
        return report.all_passed() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "acceptance suite aborted: " << e.what() << "\n";
        return 1;
    }
}
