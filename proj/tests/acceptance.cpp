#include "gl2/verify.hpp"

#include <cstdio>

int main() {
    int failed = 0;
    for (const auto& r : gl2::run_acceptance_suite()) {
        const char* status = r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL";
        std::printf("%s criterion %d (%s) [%.1fs]: %s\n", status, r.criterion, r.title.c_str(), r.seconds,
                    r.summary.c_str());
        for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
        failed += !r.passed;
    }
    std::printf("%d criteria failed\n", failed);
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
