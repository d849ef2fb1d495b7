#include <cstdio>

#include "dwork/acceptance.hpp"

int main() {
    int failed = 0;
    dwork::run_acceptance([&](const dwork::CriterionResult& r) {
        std::printf("%s [%2d] %s: %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str(), r.seconds);
        std::fflush(stdout);
        if (!r.pass) ++failed;
    });
    std::printf("%d of %d criteria passed\n", dwork::kCriteria - failed, dwork::kCriteria);
    return failed ? 1 : 0;
}
