#pragma once

#include <string>
#include <vector>

#include "alcove/root_system.hpp"

namespace alcove {

struct Job {
    int n = 0;
    Weight lambda;
};

/// All (n, lambda) pairs with 2 <= n <= max_n, lambda a partition of at most
/// max_size with lambda_n = 0.
std::vector<Job> desk_jobs(int max_n = 4, int max_size = 6);

struct SuiteResult {
    Job job;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// One full verification pass for a single (n, lambda): crystal axioms on
/// both models, character equality, the main-theorem bijection and edge
/// commutation, the structural property sweep, string-datum closed forms,
/// and the element-count cross-check against brute-force tableau
/// enumeration.
SuiteResult run_suite(const Job& job);

/// Runs the suite over all jobs; `parallel` switches between the OpenMP
/// kernel and the serial reference.  Results are returned in job order
/// either way.
std::vector<SuiteResult> run_all(const std::vector<Job>& jobs, bool parallel);

}  // namespace alcove
