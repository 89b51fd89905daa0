#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace cubiclf {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the numbered verification criteria (1..13); `which` empty means all.
// Prints one PASS/FAIL line per criterion to `out` as it goes.
std::vector<CriterionResult> run_acceptance(const std::set<int>& which, std::ostream& out);

// Criterion subsets for the CLI: "core" = fast identities, "all" = everything.
std::set<int> suite_criteria(const std::string& suite);

}  // namespace cubiclf
