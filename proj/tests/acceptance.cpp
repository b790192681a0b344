// Acceptance gate: one pass/fail line per criterion.  "quick" runs the first
// eight, "full" runs all twelve.  Exit status is the number of failures.
#include <cstdio>
#include <cstring>
#include <string>

#include "stringcone/verify.hpp"

int main(int argc, char** argv) {
    bool full = true;
    if (argc > 1 && std::strcmp(argv[1], "quick") == 0) full = false;
    int failures = 0;
    for (const auto& id : stringcone::criterion_ids(full)) {
        auto r = stringcone::run_criterion(id);
        std::puts(stringcone::format_line(r).c_str());
        std::fflush(stdout);
        if (!r.pass) ++failures;
    }
    return failures;
}
