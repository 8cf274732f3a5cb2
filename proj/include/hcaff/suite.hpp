#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hcaff/check.hpp"

namespace hcaff {

enum class SuiteLevel { Smoke, Desk };

struct SuiteOptions {
    SuiteLevel level = SuiteLevel::Desk;
    std::uint64_t seed = 1;
    bool corrupt = false; // negative control: run the algebra checks with c_i^2 = +1
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<CheckReport(const SuiteOptions&)> run;
};

// the thirteen acceptance checks, in order
const std::vector<Criterion>& criteria();

struct CriterionResult {
    int id;
    std::string title;
    double seconds = 0;
    double budget_seconds = 0;
    bool ok = false;
    bool within_budget = false;
    std::string error; // exception text, if one escaped
    CheckReport report;
};
CriterionResult run_criterion(const Criterion& c, const SuiteOptions& opt);

} // namespace hcaff
