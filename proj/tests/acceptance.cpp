#include <algorithm>
#include <cstdio>
#include <cstdlib>

#include <arc/verify.hpp>

int main(int argc, char** argv) {
    unsigned seed = 12345;
    if (argc > 1) seed = static_cast<unsigned>(std::strtoul(argv[1], nullptr, 10));

    std::vector<arc::CheckResult> rows = arc::run_all_checks(seed);
    for (const arc::CheckResult& r : rows) {
        std::printf("%s  %d  %s (expected %s; got %s) [%.2fs]\n", r.pass ? "PASS" : "FAIL",
                    r.index, r.claim.c_str(), r.expected.c_str(), r.got.c_str(), r.seconds);
    }
    bool ok = arc::all_passed(rows);
    std::printf("%s: %zu/9 criteria passed\n", ok ? "SUCCESS" : "FAILURE",
                static_cast<std::size_t>(
                    std::count_if(rows.begin(), rows.end(),
                                  [](const arc::CheckResult& r) { return r.pass; })));
    return ok ? 0 : 1;
}
