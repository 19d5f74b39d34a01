#include <cstdio>

#include "tfcycle/validation.hpp"

// Runs every validation criterion and prints one pass/fail line each.
int main() {
    tfcycle::ValidationOptions opts;
    opts.jobs = 4;
    const auto results = tfcycle::run_validation(opts);
    int failures = 0;
    for (const auto& r : results) {
        std::printf("%s\n", r.summary().c_str());
        for (const auto& c : r.checks) {
            std::printf("    %-54s %s%s%s\n", c.name.c_str(),
                        c.pass ? "ok" : "FAIL", c.detail.empty() ? "" : "  ",
                        c.detail.c_str());
        }
        if (!r.pass()) ++failures;
    }
    std::printf("%d/%zu criteria passed\n",
                static_cast<int>(results.size()) - failures, results.size());
    return failures == 0 ? 0 : 1;
}
