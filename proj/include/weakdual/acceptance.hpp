#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace weakdual {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    long elapsed_ms = 0;
};

inline constexpr int kCriterionCount = 12;

CriterionResult run_criterion(int id, std::uint64_t seed);
// Runs the listed criteria, or all of them when `ids` is empty.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::vector<int>& ids = {});
std::string format_result_line(const CriterionResult& r);

}  // namespace weakdual
