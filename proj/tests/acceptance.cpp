// Runs the thirteen acceptance criteria and prints one line each; running past
// the time budget counts as a failure.
#include <cstdio>
#include <cstring>
#include <string>

#include "hcaff/suite.hpp"

using namespace hcaff;

int main(int argc, char** argv)
{
    SuiteOptions opt;
    for (int k = 1; k < argc; ++k) {
        if (!std::strcmp(argv[k], "--smoke")) opt.level = SuiteLevel::Smoke;
        else if (!std::strcmp(argv[k], "--corrupt")) opt.corrupt = true;
        else {
            std::fprintf(stderr, "usage: %s [--smoke] [--corrupt]\n", argv[0]);
            return 2;
        }
    }
    int failed = 0;
    for (const auto& c : criteria()) {
        CriterionResult r = run_criterion(c, opt);
        bool pass = r.ok && r.within_budget;
        if (!pass) ++failed;
        std::string why;
        if (!r.error.empty()) why = " error: " + r.error;
        else if (!r.ok) {
            for (const auto& k : r.report.checks)
                if (!k.ok) {
                    why = " first failure: " + k.name + (k.detail.empty() ? "" : " (" + k.detail + ")");
                    break;
                }
        } else if (!r.within_budget) why = " over budget";
        std::printf("[%s] %2d %-50s %8.2fs / %5.0fs%s\n", pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                    r.budget_seconds, why.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria().size()) - failed, criteria().size());
    return failed ? 1 : 0;
}
