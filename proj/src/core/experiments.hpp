#pragma once

// Algebra catalog and scripted suites that recompute each structural claim
// at desk scale and report one result per check.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matrixlab.hpp"

namespace mk {

struct CatalogEntry {
  std::string name;
  Algebra algebra;
  std::vector<std::string> tags;  // sorted; from simple, commutative, local, field_extension, matrix, direct_sum
  std::string provenance;
};

/// Built once; tags are recomputed and compared with the declared ones
/// (Internal on mismatch).
const std::vector<CatalogEntry>& catalog();
/// Throws InvalidArgument for unknown names.
const CatalogEntry& catalog_entry(std::string_view name);
/// Tags derived from the algebra alone (scans where affordable).
std::vector<std::string> computed_tags(const Algebra& a, bool direct_sum, bool known_simple);

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  ScanOptions scan;
  bool timing = false;  // fill millis; otherwise 0 for byte-stable output
};

struct CheckResult {
  std::string suite;
  std::string check;
  std::string instance;
  bool pass = false;
  std::optional<std::string> witness;
  std::int64_t millis = 0;
  std::uint64_t seed = 0;
};

const std::vector<std::string>& suite_names();
/// Results sorted by check, then instance. Throws InvalidArgument for an
/// unknown suite name.
std::vector<CheckResult> run_suite(std::string_view name, const SuiteOptions& opts = {});

}  // namespace mk
