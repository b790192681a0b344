#pragma once

#include <string>
#include <vector>

namespace stringcone {

// One self-contained consistency check of the library against frozen golden
// data and cross-oracles.  Criteria are identified as "A1" .. "A12"; the
// quick tier covers A1..A8, the full tier everything.
struct CriterionResult {
    std::string id;
    std::string title;
    bool pass = false;
    std::string detail;  // check count on success, first mismatches on failure
    double seconds = 0.0;
};

std::vector<std::string> criterion_ids(bool full);
CriterionResult run_criterion(const std::string& id);
std::vector<CriterionResult> run_criteria(bool full);

// "[PASS] A1  <title> (0.01 s) -- <detail>"
std::string format_line(const CriterionResult& r);

}  // namespace stringcone
