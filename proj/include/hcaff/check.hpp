#pragma once

#include <string>
#include <vector>

namespace hcaff {

struct IdentityCheck {
    std::string name;
    bool ok;
    std::string detail;
};

struct CheckReport {
    std::vector<IdentityCheck> checks;

    bool ok() const;
    const IdentityCheck* first_failure() const;
    void add(std::string name, bool ok, std::string detail = {}) { checks.push_back({std::move(name), ok, std::move(detail)}); }
    void append(const CheckReport& other, const std::string& prefix = {});
};

} // namespace hcaff
