#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "kernelcut/graph.hpp"
#include "kernelcut/oracles.hpp"

namespace kernelcut {

enum class Param { VertexCover, MaxLeaf, Cluster };
std::string to_string(Param p);
Param param_from_string(const std::string& s);

// Routing matrix: throws InputError for (problem, parameter) cells without a kernel.
KernelResult kernelize(Param param, const Instance& inst);

struct CaseReport {
    std::string id;
    std::string suite;
    std::string verdict;  // PASS, FAIL, FAIL-UNKNOWN
    std::int64_t millis = 0;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed_lo = 1;
    std::uint64_t seed_hi = 0;  // 0: suite default
    int jobs = 1;
    OracleLimits limits = default_limits();
};

struct SuiteInfo {
    std::string name;
    std::uint64_t default_seeds;
    std::string summary;
};

const std::vector<SuiteInfo>& suites();

// Sorted by case id; independent of opts.jobs.
std::vector<CaseReport> run_suite(const std::string& name, const VerifyOptions& opts);

nlohmann::json reports_to_json(const std::vector<CaseReport>& reports);
std::string verdict_table(const std::vector<CaseReport>& reports);
bool all_pass(const std::vector<CaseReport>& reports);

}  // namespace kernelcut
