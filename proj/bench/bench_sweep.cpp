#include <chrono>
#include <iostream>

#include "alcove/sweep.hpp"

using namespace alcove;

namespace {

double run_timed(const std::vector<Job>& jobs, bool parallel, int& failures) {
    auto start = std::chrono::steady_clock::now();
    auto results = run_all(jobs, parallel);
    auto stop = std::chrono::steady_clock::now();
    failures = 0;
    for (const auto& r : results)
        if (!r.ok()) ++failures;
    return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int max_n = argc > 1 ? std::atoi(argv[1]) : 4;
    int max_size = argc > 2 ? std::atoi(argv[2]) : 6;
    auto jobs = desk_jobs(max_n, max_size);
    std::cout << "jobs: " << jobs.size() << " (n <= " << max_n << ", |lambda| <= "
              << max_size << ")\n";

    int fail_serial = 0, fail_parallel = 0;
    double t_serial = run_timed(jobs, false, fail_serial);
    double t_parallel = run_timed(jobs, true, fail_parallel);

    std::cout << "serial:   " << t_serial << " s, failures " << fail_serial << "\n";
    std::cout << "parallel: " << t_parallel << " s, failures " << fail_parallel << "\n";
    std::cout << "speedup:  " << (t_parallel > 0 ? t_serial / t_parallel : 0) << "x\n";
    return fail_serial + fail_parallel == 0 ? 0 : 1;
}
