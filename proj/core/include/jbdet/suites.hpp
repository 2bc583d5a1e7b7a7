#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jbdet {

inline constexpr std::uint64_t kDefaultSuiteSeed = 20240501;

struct PropertyResult {
  std::string name;
  int criterion = 0;  // acceptance criterion this property belongs to, 0 if none
  long trials = 0;
  double worst = 0.0;
  double tolerance = 0.0;
  long failures = 0;
  std::string note;  // first failure message

  bool pass() const { return failures == 0 && worst <= tolerance; }
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyResult> properties;
  std::map<std::string, long> coverage;

  bool pass() const;
};

struct SuiteOptions {
  std::uint64_t seed = kDefaultSuiteSeed;
  std::optional<long> trials;        // overrides every per-property count
  std::optional<double> tolerance;   // overrides every residual tolerance
};

const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);
// Throws DomainError for an unknown suite.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});

}  // namespace jbdet
