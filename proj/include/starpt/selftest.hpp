/**
 * @file selftest.hpp
 * @brief The acceptance battery, runnable in-process or via `starpt selftest`.
 */
#ifndef STARPT_SELFTEST_HPP
#define STARPT_SELFTEST_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "starpt/shell/report.hpp"

namespace starpt::selftest {

inline constexpr int kCriteria = 10;

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    shell::Json data = shell::Json::object();
};

/// Runs one criterion. Criterion 10 reruns a deterministic subset in-process
/// and compares the serialized results.
CriterionResult run_criterion(int id, std::uint64_t seed);

/// All criteria in order; `progress` is called after each one.
std::vector<CriterionResult> run_all(std::uint64_t seed,
                                     const std::function<void(const CriterionResult&)>& progress = {});

shell::Json to_json(const CriterionResult& r);

}  // namespace starpt::selftest

#endif
