#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace shw::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    long checks = 0;       // individual equalities examined
    long skipped = 0;      // skipped for budget reasons
    std::string detail;    // first failure, or a summary note
};

struct Options {
    int degree_max = 4;   // spin/split/gt suites
    int genus_max = 5;
    std::uint64_t oracle_budget = 100'000'000;
    std::string cache_dir;
};

// Property suites mirroring each module's invariants.  Suite names:
// split, handle, gt, frobenius, trflow.
CheckResult run_split_suite(const Options& opt);
CheckResult run_handle_suite(const Options& opt);
CheckResult run_gt_suite(const Options& opt);
CheckResult run_frobenius_suite(const Options& opt);
CheckResult run_trflow_suite(const Options& opt);

std::vector<CheckResult> run_suites(const std::string& which, const Options& opt);

}  // namespace shw::verify
