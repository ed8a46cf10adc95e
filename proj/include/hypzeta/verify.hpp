#pragma once

#include <string>
#include <vector>

namespace hz {

struct Check {
    std::string name;
    double residual = 0;
    double tolerance = 0;
    bool pass = false;
    int criterion = 0;  // acceptance criterion 1..10 this check belongs to, 0 if none
};

struct Report {
    std::string suite;
    unsigned long seed = 0;
    std::vector<Check> checks;
    bool ok() const;
};

const std::vector<std::string>& suite_names();  // specfun, liealg, geom, radial, transforms, zeta

// Runs one module suite or "all". Throws InputError for an unknown suite name.
Report run_suite(const std::string& suite, unsigned long seed);

// {"suite", "seed", "checks": [{"name", "residual", "tolerance", "pass"}]}
std::string report_json(const Report& r);

}  // namespace hz
