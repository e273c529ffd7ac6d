#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ctube/rigid.hpp"

namespace ctube {

/* Verification suites: each one machine-checks a finite-type statement by
   exhaustive enumeration at the requested rank. A failing check carries a
   serialized counterexample; the theorems under test are believed, so a
   failure indicts the implementation first and the statement second, but
   the suites are written so that either would surface. */

struct CheckResult {
    std::string description;
    bool pass = false;
    std::string counterexample;  // empty when pass
};

struct Report {
    std::string suite;
    int n = 0;
    std::vector<CheckResult> checks;
    double elapsed_s = 0.0;

    bool all_pass() const;
};

const std::vector<std::string>& suite_names();

/* Runs one named suite at rank parameter n. Unknown names are a usage
   error. Pattern-walking suites accept n <= 8; the purely enumerative ones
   accept n <= 12. */
Report run_suite(const std::string& name, int n);

nlohmann::json to_json(const Report& r);
std::string format_report(const Report& r);

// Worker count for shardable suites: CTUBE_THREADS when set, otherwise the
// hardware concurrency.
int thread_count();

// The worked rank-2 fixture (initial object {(1,2),(1,1)}, its exchange
// matrix and its two first mutations), serialized in canonical JSON form.
// The acceptance gate compares this byte-for-byte against a golden file.
std::string worked_n2_fixture_json();

}  // namespace ctube
