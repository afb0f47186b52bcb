#pragma once
#include <string>
#include <vector>

namespace burniat {

// A list of named pass/fail checks, used by every verification routine.
struct Report {
    struct Check {
        std::string name;
        bool pass = false;
        std::string detail;
    };

    std::vector<Check> checks;

    void add(std::string name, bool pass, std::string detail = "")
    {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }

    bool ok() const
    {
        for (const auto &c : checks)
            if (!c.pass) return false;
        return true;
    }

    std::size_t failures() const
    {
        std::size_t n = 0;
        for (const auto &c : checks)
            if (!c.pass) ++n;
        return n;
    }
};

} // namespace burniat
