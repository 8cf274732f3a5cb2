#include "hcaff/check.hpp"

namespace hcaff {

bool CheckReport::ok() const { return first_failure() == nullptr; }

const IdentityCheck* CheckReport::first_failure() const
{
    for (const auto& c : checks)
        if (!c.ok) return &c;
    return nullptr;
}

void CheckReport::append(const CheckReport& other, const std::string& prefix)
{
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.ok, c.detail});
}

} // namespace hcaff
