// Acceptance battery: runs every verification criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.
#include <cstdlib>
#include <iostream>

#include "cubiclf/cache.hpp"
#include "cubiclf/verify.hpp"

int main(int argc, char** argv) {
    std::set<int> which;
    for (int i = 1; i < argc; ++i) which.insert(std::atoi(argv[i]));
    auto results = cubiclf::run_acceptance(which, std::cout);
    int fails = 0;
    for (const auto& r : results) fails += r.pass ? 0 : 1;
    std::cout << (fails == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(fails)) << " ("
              << results.size() << " criteria, cache: " << cubiclf::cache_dir() << ")\n";
    return fails;
}
