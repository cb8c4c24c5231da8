// pencilcheck: invariant tables and the symbolic and numeric check suites.
//
// Every flag can also be set through an environment variable named
// PENCILCHECK_<FLAG>, e.g. PENCILCHECK_SEED or PENCILCHECK_D_MIN.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 retries exhausted or
// output could not be written, 64 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "pencil/report.hpp"

namespace {

constexpr int kUsage = 64;

struct Options {
  long d_min = 0, d_max = 0;
  std::uint64_t seed = 0;
  long height = 10;
  long double cluster_radius = 1e-6L;
  long double residual_tol = 1e-8L;
  int retries = 8;
  bool stretch = false;
  bool inject_failure = false;
  std::string format;
  std::string out;
};

void add_output(CLI::App* cmd, Options& o, const std::string& default_format) {
  o.format = default_format;
  cmd->add_option("--format", o.format, "md, csv or json")
      ->check(CLI::IsMember({"md", "csv", "json"}))
      ->envname("PENCILCHECK_FORMAT")
      ->capture_default_str();
  cmd->add_option("--out", o.out, "write to FILE instead of stdout")->envname("PENCILCHECK_OUT");
}

void add_range(CLI::App* cmd, Options& o) {
  cmd->add_option("--d-min", o.d_min, "smallest degree")->envname("PENCILCHECK_D_MIN");
  cmd->add_option("--d-max", o.d_max, "largest degree")->envname("PENCILCHECK_D_MAX");
}

void add_numeric(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "fixture and oracle seed")->envname("PENCILCHECK_SEED");
  cmd->add_option("--height", o.height, "coefficient height of random fixtures")
      ->envname("PENCILCHECK_HEIGHT")
      ->capture_default_str();
  cmd->add_option("--cluster-radius", o.cluster_radius, "root clustering radius")
      ->envname("PENCILCHECK_CLUSTER_RADIUS")
      ->capture_default_str();
  cmd->add_option("--residual-tol", o.residual_tol, "residual acceptance")
      ->envname("PENCILCHECK_RESIDUAL_TOL")
      ->capture_default_str();
  cmd->add_option("--retries", o.retries, "attempts per numeric check")
      ->envname("PENCILCHECK_RETRIES")
      ->capture_default_str();
  cmd->add_flag("--stretch", o.stretch, "also run the slow stretch checks")->envname("PENCILCHECK_STRETCH");
}

void add_inject(CLI::App* cmd, Options& o) {
  // Harness self-test; not listed in --help.
  cmd->add_flag("--inject-failure", o.inject_failure)->group("")->envname("PENCILCHECK_INJECT_FAILURE");
}

pencil::RunConfig to_config(const CLI::App* cmd, const Options& o) {
  pencil::RunConfig c;
  auto given = [cmd](const char* name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--d-min")) c.d_min = o.d_min;
  if (given("--d-max")) c.d_max = o.d_max;
  if (given("--seed")) c.seed = o.seed;
  c.height = o.height;
  c.cluster_radius = o.cluster_radius;
  c.residual_tol = o.residual_tol;
  c.retries = o.retries;
  c.stretch = o.stretch;
  c.inject_failure = o.inject_failure;
  c.format = pencil::parse_format(o.format);
  return c;
}

bool emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream f(out, std::ios::binary);
  f << text;
  if (!f) std::cerr << "pencilcheck: cannot write " << out << "\n";
  return static_cast<bool>(f);
}

int finish(const pencil::SuiteResult& r, const Options& o, pencil::Format f) {
  if (!emit(pencil::render(r, f), o.out)) return 2;
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of general pencils of plane curves: tables and checks"};
  app.require_subcommand(1);

  Options tables_o, sym_o, num_o, report_o;
  CLI::App* tables = app.add_subcommand("tables", "print the invariant table (default d = 3..8)");
  add_range(tables, tables_o);
  add_output(tables, tables_o, "md");

  CLI::App* sym = app.add_subcommand("check-symbolic", "run the exact identity suite");
  add_output(sym, sym_o, "md");
  add_inject(sym, sym_o);

  CLI::App* num = app.add_subcommand("check-numeric", "run the seeded numeric suite (default d = 2..4)");
  add_range(num, num_o);
  add_numeric(num, num_o);
  add_output(num, num_o, "md");

  CLI::App* report = app.add_subcommand("report", "both suites in one document; numeric rows need --seed");
  add_range(report, report_o);
  add_numeric(report, report_o);
  add_output(report, report_o, "json");
  add_inject(report, report_o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (tables->parsed()) {
      pencil::RunConfig c = to_config(tables, tables_o);
      c.validate(false);
      const auto t = pencil::invariant_table(c.d_min.value_or(3), c.d_max.value_or(8));
      return emit(pencil::render(t, c.format), tables_o.out) ? 0 : 2;
    }
    if (sym->parsed()) {
      const pencil::RunConfig c = to_config(sym, sym_o);
      return finish(pencil::check_symbolic(c), sym_o, c.format);
    }
    if (num->parsed()) {
      const pencil::RunConfig c = to_config(num, num_o);
      c.validate(true);
      return finish(pencil::check_numeric(c), num_o, c.format);
    }
    const pencil::RunConfig c = to_config(report, report_o);
    c.validate(false);
    return finish(pencil::full_report(c), report_o, c.format);
  } catch (const pencil::UsageError& e) {
    std::cerr << "pencilcheck: " << e.what() << "\n";
    return kUsage;
  } catch (const pencil::DomainError& e) {
    std::cerr << "pencilcheck: " << e.what() << "\n";
    return kUsage;
  }
}
