#pragma once

// Verification suites shared by the command line tool and the acceptance
// tests. Each suite runs at one configured size and reports named checks.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "affschur/scalar.hpp"

namespace affschur {

struct SuiteConfig {
  int n = 2;
  int r = 2;
  int N = 3;
  int tmax = 2;
  // Tensor window [lo, hi]; defaults to [-n, 2n].
  std::optional<std::pair<int, int>> window;
  // Segment centers; empty means the suite's default grid.
  std::vector<FieldElem> grid;
  std::uint64_t seed = 20240601;
  Param param = Param::generic();
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::size_t count = 0;
  nlohmann::ordered_json counterexample;  // null when the check passed
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const;
  nlohmann::ordered_json to_json() const;
};

inline constexpr std::size_t kMaxWindowTuples = 200000;

const std::vector<std::string>& suite_names();  // without "all"

// Runs one suite; "all" is not accepted here. Throws DomainError for an
// unknown name or invalid sizes and ResourceError beyond the bounds.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

SuiteResult suite_hecke_relations(const SuiteConfig& config);
SuiteResult suite_bimodule(const SuiteConfig& config);
SuiteResult suite_rogawski(const SuiteConfig& config);
SuiteResult suite_factorization(const SuiteConfig& config);
SuiteResult suite_bijection(const SuiteConfig& config);
SuiteResult suite_central_character(const SuiteConfig& config);
SuiteResult suite_gfunctor(const SuiteConfig& config);

// {q v^k : q in {2, 3, 5}, |k| <= 2}
std::vector<FieldElem> default_bijection_grid(const Param& param);
// {2, 3v, 5v^{-1}}
std::vector<FieldElem> default_schur_grid(const Param& param);
// 2v, 3v^{-1}, 5v^2, 7v^{-2}, 11v^3, ...: distinct primes times distinct powers of v.
std::vector<FieldElem> generic_centers(int count, const Param& param);

}  // namespace affschur
