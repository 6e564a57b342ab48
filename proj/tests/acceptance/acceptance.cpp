// Runs every acceptance criterion and prints one line per criterion.
// Usage: acceptance [seed]

#include "linefan/suite.hpp"

#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
    linefan::SuiteOptions opt;
    if (argc > 1) opt.seed = std::strtoull(argv[1], nullptr, 10);
    auto results = linefan::run_suite(opt);
    bool ok = !results.empty();
    for (const auto& r : results) {
        std::printf("criterion %d %-24s %s  %7.2f s  %s\n", r.index, r.name.c_str(), r.passed ? "PASS" : "FAIL", r.seconds,
                    r.passed ? r.measured.dump().c_str() : r.failure.c_str());
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}
