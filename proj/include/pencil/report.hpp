#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pencil/invariants.hpp"
#include "pencil/rational.hpp"

namespace pencil {

/// Bad command-line or environment configuration.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Format { md, csv, json };
Format parse_format(const std::string& s);

struct RunConfig {
  std::optional<long> d_min, d_max;  // tables default to 3..8, numeric checks to 2..4
  std::optional<std::uint64_t> seed;
  long height = 10;
  long double cluster_radius = 1e-6L;
  long double residual_tol = 1e-8L;
  int retries = 8;
  bool stretch = false;
  Format format = Format::md;
  bool inject_failure = false;

  /// Throws UsageError.  `numeric` additionally requires a seed.
  void validate(bool numeric) const;
};

enum class Status { pass, fail, skipped };
std::string to_string(Status s);

struct CheckResult {
  std::string invariant_id;
  std::optional<long> d;  // empty for symbolic identities
  std::string expected;
  std::string computed;
  std::string method;
  Status status = Status::pass;
  std::optional<std::uint64_t> seed;
  double millis = 0;
  int criterion = 0;  // acceptance criterion 1..18, 19 for the stretch tier, 0 otherwise
  bool exhausted = false;
};

struct SuiteResult {
  std::vector<CheckResult> rows;

  /// 1 on any failure, otherwise 2 if some check ran out of retries, otherwise 0.
  int exit_code() const;
  void append(const SuiteResult& other);
  /// Sorts by (invariant_id, d, method); symbolic rows precede numeric ones.
  void sort();
};

SuiteResult check_symbolic(const RunConfig& cfg);
SuiteResult check_numeric(const RunConfig& cfg);
/// Both suites; the numeric one only when a seed is configured.
SuiteResult full_report(const RunConfig& cfg);

std::string render(const SuiteResult& r, Format f);
std::string render(const InvariantTable& t, Format f);

}  // namespace pencil
