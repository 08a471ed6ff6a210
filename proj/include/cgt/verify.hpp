#pragma once

#include <string>
#include <vector>

#include "cgt/decomposition.hpp"

namespace cgt {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

// Named self-checks, grouped into suites: birthdays, daysets, numbers,
// nimbers, distance, stops, starsystems, hackenbush, and the union suite
// "all".  Checks that need day sets pull them from the store, so repeated
// suites in one process share the enumeration work.
std::vector<std::string> suite_names();
bool is_suite(const std::string& name);
std::vector<CheckResult> run_suite(DaySetStore& store, const std::string& suite);
CheckResult run_check(DaySetStore& store, const std::string& check);

}  // namespace cgt
