#ifndef CCONES_CHECKS_HPP
#define CCONES_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ccones/serialize.hpp"

namespace ccones {

struct CheckResult {
  std::string name;
  bool passed = true;
  Json detail;  // counts, worst cases, tolerances and bracket methods
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

// Law checks on sampled inputs. Suites: "mall", "exp", "pcs", "qcs"; "all"
// runs the four in that order. Each suite draws from its own stream seeded
// from `seed`, so results do not depend on which suites run.
std::vector<SuiteReport> run_suite(const std::string& suite, std::uint64_t seed, std::size_t trials);

SuiteReport run_mall_checks(std::uint64_t seed, std::size_t trials);
SuiteReport run_exp_checks(std::uint64_t seed, std::size_t trials);
SuiteReport run_pcs_checks(std::uint64_t seed, std::size_t trials);
SuiteReport run_qcs_checks(std::uint64_t seed, std::size_t trials);

Json to_json(const SuiteReport& r);
// {"schema": 1, "command": "check", "seed", "trials", "suites", "passed"}
Json check_report(const std::vector<SuiteReport>& suites, std::uint64_t seed, std::size_t trials);

}  // namespace ccones

#endif  // CCONES_CHECKS_HPP
