#pragma once

#include <string>
#include <vector>

namespace pulab {

struct Check {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct Report {
    std::vector<Check> checks;

    void add(std::string name, double residual, double tolerance) {
        checks.push_back({std::move(name), residual, tolerance,
                          residual <= tolerance});
    }
    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    double worst_residual() const {
        double r = 0.0;
        for (const auto& c : checks) r = r < c.residual ? c.residual : r;
        return r;
    }
};

} // namespace pulab
