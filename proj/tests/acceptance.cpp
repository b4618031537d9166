// One line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>

#include "supercrystal/verify.hpp"

int main() {
    int failed = 0, idx = 0;
    for (auto& s : sc::verify::suites()) {
        auto r = s.run({});
        ++idx;
        std::printf("[%s] %d %-16s %s (%zu checks, %.1fs)\n", r.passed ? "PASS" : "FAIL", idx, s.name.c_str(),
                    s.criterion.c_str(), r.outcome.checked, r.seconds);
        for (auto& f : r.outcome.samples) std::printf("    %s\n", f.c_str());
        std::fflush(stdout);
        failed += !r.passed;
    }
    return failed ? 1 : 0;
}
