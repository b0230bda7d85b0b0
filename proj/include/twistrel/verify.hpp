#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "twistrel/conditions.hpp"
#include "twistrel/partition.hpp"

namespace twistrel {

struct AcceptanceResult {
    int index = 0;
    std::string name;
    bool ok = false;
    double seconds = 0.0;
    std::string detail;  // empty on pass
};

// Runs the ten acceptance criteria, printing one pass/FAIL line each.
// Returns the number of failures. `only` restricts to the listed criteria.
int run_acceptance(std::ostream& os, const std::vector<int>& only = {});

// Independent condition-engine implementation (direct instance enumeration),
// used for double-implementation agreement checks.
bool satisfies_bruteforce(const Partition& mu, const ConditionSet& cs);

}  // namespace twistrel
