// One line per acceptance criterion; exits nonzero if any core criterion fails.
// The stretch tier is reported but never affects the exit status.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <string>

#include "pencil/report.hpp"

using namespace pencil;

namespace {

struct Tally {
  int checks = 0;
  int failed = 0;
  double millis = 0;
  std::string first_problem;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::map<int, Tally> tally(const SuiteResult& r) {
  std::map<int, Tally> out;
  for (const auto& row : r.rows) {
    Tally& t = out[row.criterion];
    ++t.checks;
    t.millis = std::max(t.millis, row.millis);
    if (row.status != Status::pass) {
      ++t.failed;
      if (t.first_problem.empty()) {
        t.first_problem = row.invariant_id + " d=" + (row.d ? std::to_string(*row.d) : "symbolic") + " " + row.method +
                          ": expected " + row.expected + ", got " + row.computed;
      }
    }
  }
  return out;
}

bool line(const std::string& label, const Tally& t) {
  const bool ok = t.checks > 0 && t.failed == 0;
  std::printf("%-14s %s  (%d checks, slowest %.0f ms)%s%s\n", label.c_str(), ok ? "PASS" : "FAIL", t.checks, t.millis,
              t.first_problem.empty() ? "" : "  ", t.first_problem.c_str());
  return ok;
}

}  // namespace

int main() {
  RunConfig cfg;
  cfg.seed = 1;
  cfg.stretch = true;

  auto start = std::chrono::steady_clock::now();
  const SuiteResult sym = check_symbolic(cfg);
  const double sym_ms = elapsed_ms(start);

  start = std::chrono::steady_clock::now();
  const SuiteResult num = check_numeric(cfg);
  const double num_ms = elapsed_ms(start);

  auto by_criterion = tally(sym);
  for (const auto& [k, t] : tally(num)) {
    Tally& dst = by_criterion[k];
    dst.checks += t.checks;
    dst.failed += t.failed;
    dst.millis = std::max(dst.millis, t.millis);
    if (dst.first_problem.empty()) dst.first_problem = t.first_problem;
  }

  bool ok = true;
  for (int k = 1; k <= 18; ++k) ok &= line("criterion " + std::to_string(k), by_criterion[k]);
  ok &= line("route table", by_criterion[0]);

  double slowest = 0, stretch_ms = 0;
  for (const auto& row : num.rows) {
    if (row.criterion == 19)
      stretch_ms += row.millis;
    else
      slowest = std::max(slowest, row.millis);
  }
  const double core_ms = num_ms - stretch_ms;

  const bool sym_fast = sym_ms < 1000;
  const bool each_fast = slowest < 60000;
  std::printf("%-14s %s  (symbolic suite %.0f ms, limit 1000 ms)\n", "timing", sym_fast ? "PASS" : "FAIL", sym_ms);
  std::printf("%-14s %s  (slowest core numeric check %.0f ms, limit 60000 ms)\n", "timing", each_fast ? "PASS" : "FAIL",
              slowest);
  const bool tier_fast = core_ms < 600000;
  std::printf("%-14s %s  (core numeric tier %.0f ms, limit 600000 ms)\n", "timing", tier_fast ? "PASS" : "FAIL", core_ms);
  ok &= sym_fast && each_fast && tier_fast;

  const Tally& stretch = by_criterion[19];
  const bool stretch_ok = stretch.checks > 0 && stretch.failed == 0;
  std::printf("%-14s %s  (%d checks, slowest %.0f ms, non-blocking)%s%s\n", "stretch", stretch_ok ? "PASS" : "FAIL",
              stretch.checks, stretch.millis, stretch.first_problem.empty() ? "" : "  ",
              stretch.first_problem.c_str());
  std::printf("%s\n", ok ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL");
  return ok ? 0 : 1;
}
