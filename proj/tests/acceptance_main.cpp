// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance [--only N] [--seed S] [--jobs J]

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "ampwick/verify.hpp"

using namespace ampwick;

int main(int argc, char** argv) {
    VerifyOptions opt;
    std::vector<int> ids = suite_criteria(Suite::All);
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (i + 1 >= argc) {
            std::fprintf(stderr, "usage: acceptance [--only N] [--seed S] [--jobs J]\n");
            return 2;
        }
        if (a == "--only") ids = {std::atoi(argv[++i])};
        else if (a == "--seed") opt.seed = std::strtoull(argv[++i], nullptr, 10);
        else if (a == "--jobs") opt.jobs = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "unknown argument %s\n", a.c_str());
            return 2;
        }
    }
    bool all = true;
    for (int id : ids) {
        CriterionResult r = run_criterion(id, opt);
        all = all && r.passed;
        std::printf("criterion %2d %s (%.2f s): %s\n    %s\n", r.id, r.passed ? "PASS" : "FAIL", r.seconds,
                    r.name.c_str(), r.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
