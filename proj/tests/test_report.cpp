#include <doctest.h>

#include <json.hpp>

#include "pencil/report.hpp"

using namespace pencil;

namespace {

SuiteResult without_timings(SuiteResult r) {
  for (auto& row : r.rows) row.millis = 0;
  return r;
}

}  // namespace

TEST_CASE("symbolic suite passes and is sorted") {
  const SuiteResult r = check_symbolic(RunConfig{});
  CHECK(r.exit_code() == 0);
  REQUIRE(r.rows.size() > 30);
  for (const auto& row : r.rows) {
    CHECK(row.status == Status::pass);
    CHECK_FALSE(row.seed.has_value());
  }
  SuiteResult sorted = r;
  sorted.sort();
  for (std::size_t i = 0; i < r.rows.size(); ++i) CHECK(sorted.rows[i].method == r.rows[i].method);
  for (int k = 1; k <= 12; ++k) {
    bool seen = false;
    for (const auto& row : r.rows) seen |= row.criterion == k;
    CHECK_MESSAGE(seen, "criterion ", k);
  }
}

TEST_CASE("known discrepancies are informational rows") {
  const SuiteResult r = check_symbolic(RunConfig{});
  int discrepancies = 0;
  for (const auto& row : r.rows) {
    if (row.method.rfind("known-discrepancy", 0) != 0) continue;
    ++discrepancies;
    CHECK(row.status == Status::pass);
    CHECK(row.expected != row.computed);
  }
  CHECK(discrepancies == 4);
}

TEST_CASE("injected failure is reported") {
  RunConfig cfg;
  cfg.inject_failure = true;
  const SuiteResult r = check_symbolic(cfg);
  CHECK(r.exit_code() == 1);
  int failed = 0;
  for (const auto& row : r.rows) failed += row.status == Status::fail;
  CHECK(failed == 1);
}

TEST_CASE("exit code precedence") {
  SuiteResult r;
  CHECK(r.exit_code() == 0);
  CheckResult skipped;
  skipped.status = Status::skipped;
  skipped.exhausted = true;
  r.rows.push_back(skipped);
  CHECK(r.exit_code() == 2);
  CheckResult failed;
  failed.status = Status::fail;
  r.rows.push_back(failed);
  CHECK(r.exit_code() == 1);
}

TEST_CASE("report without a seed has only symbolic rows") {
  const SuiteResult r = full_report(RunConfig{});
  for (const auto& row : r.rows) CHECK_FALSE(row.seed.has_value());
  CHECK(r.rows.size() == check_symbolic(RunConfig{}).rows.size());
}

TEST_CASE("configuration validation") {
  RunConfig cfg;
  CHECK_NOTHROW(cfg.validate(false));
  CHECK_THROWS_AS(cfg.validate(true), UsageError);
  CHECK_THROWS_AS(check_numeric(cfg), UsageError);
  cfg.seed = 1;
  CHECK_NOTHROW(cfg.validate(true));
  cfg.residual_tol = 0;
  CHECK_THROWS_AS(cfg.validate(false), UsageError);
  cfg.residual_tol = 1e-8L;
  cfg.d_min = 5;
  cfg.d_max = 4;
  CHECK_THROWS_AS(cfg.validate(false), UsageError);
  CHECK(parse_format("csv") == Format::csv);
  CHECK_THROWS_AS(parse_format("xml"), UsageError);
}

TEST_CASE("numeric suite respects the degree range and is reproducible") {
  RunConfig cfg;
  cfg.seed = 3;
  cfg.d_min = 2;
  cfg.d_max = 3;
  const SuiteResult a = without_timings(check_numeric(cfg));
  const SuiteResult b = without_timings(check_numeric(cfg));
  CHECK(a.exit_code() == 0);
  CHECK(render(a, Format::json) == render(b, Format::json));
  REQUIRE_FALSE(a.rows.empty());
  for (const auto& row : a.rows) {
    REQUIRE(row.d.has_value());
    CHECK(*row.d <= 3);
    CHECK(row.seed == std::optional<std::uint64_t>(3));
    CHECK(row.status == Status::pass);
  }
}

TEST_CASE("rendering") {
  SuiteResult r;
  CheckResult row;
  row.invariant_id = "x";
  row.expected = "a, \"b\"";
  row.computed = "c|d";
  row.method = "m";
  r.rows.push_back(row);
  const std::string csv = render(r, Format::csv);
  CHECK(csv.find("\"a, \"\"b\"\"\"") != std::string::npos);
  CHECK(render(r, Format::md).find("c\\|d") != std::string::npos);
  const auto j = nlohmann::json::parse(render(r, Format::json));
  CHECK(j["rows"][0]["d"] == "symbolic");
  CHECK(j["rows"][0]["seed"].is_null());
  CHECK(j["summary"]["exit_code"] == 0);
  const std::string keys = render(r, Format::json);
  CHECK(keys.find("\"invariant_id\"") < keys.find("\"timings\""));

  const std::string table = render(invariant_table(4, 6), Format::csv);
  CHECK(table.find("hyperflex,chern,6(d - 3)(3d - 2),18d^2 - 66d + 36,60,156,288,yes") != std::string::npos);
  CHECK(table.find("(d^2 + 3d - 2)(d - 3)(d - 4)(d - 5)") != std::string::npos);
  CHECK(table.find("3(d^2 + 6d - 4)(d - 3)(d - 4)") != std::string::npos);
}
