#ifndef CPCOUNT_SELFTEST_HPP
#define CPCOUNT_SELFTEST_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cpcount::selftest {

struct GridResult {
    std::string name;
    bool passed;
    std::string detail;  // first failure, when any
};

// The oracle-agreement and closed-form-equivalence grids, sized for CI.
std::vector<GridResult> run_all();

// Prints one pass/fail line per grid; returns true when everything passed.
bool run_and_report(std::ostream& out);

}  // namespace cpcount::selftest

#endif
