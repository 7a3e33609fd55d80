#pragma once

#include <string>
#include <vector>

namespace ratsing {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::vector<std::string> details;
    double seconds = 0;
};

constexpr int kCriterionCount = 11;

// Criterion ids run by `verify-paper --section g`; empty for an unknown group.
std::vector<int> criteria_in_group(int group);
const std::vector<int>& known_groups();

CriterionResult run_criterion(int id);

// Results come back in the order of `ids` whether or not they ran in parallel.
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, bool parallel);

std::string render_result(const CriterionResult& r, bool verbose);

}  // namespace ratsing
