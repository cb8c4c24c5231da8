#include "pencil/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "pencil/oracle.hpp"

namespace pencil {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

PolyD D(const char* s) { return parse_poly(s); }
Rational at(const PolyD& p, long d) { return p(Rational(d)); }

std::string show(const PolyD& p) { return to_string(p); }
std::string show(const SurfaceDivClass& c) { return to_string(c); }
std::string show(const Rational& r) { return to_string(r); }

// --- symbolic ----------------------------------------------------------------

class SymbolicSuite {
 public:
  SuiteResult result;

  /// Passes iff the two values are equal.
  template <class F>
  void identity(const std::string& id, std::optional<long> d, const std::string& method, int criterion, F compute) {
    run(id, d, method, criterion, false, compute);
  }

  /// A known published value that disagrees with ours.  Passes iff they differ.
  template <class F>
  void discrepancy(const std::string& id, std::optional<long> d, const std::string& what, int criterion, F compute) {
    run(id, d, "known-discrepancy:" + what, criterion, true, compute);
  }

 private:
  template <class F>
  void run(const std::string& id, std::optional<long> d, const std::string& method, int criterion, bool expect_differ,
           F compute) {
    CheckResult row;
    row.invariant_id = id;
    row.d = d;
    row.method = method;
    row.criterion = criterion;
    const auto start = Clock::now();
    try {
      const auto [expected, computed] = compute();
      row.expected = show(expected);
      row.computed = show(computed);
      row.status = ((expected == computed) != expect_differ) ? Status::pass : Status::fail;
    } catch (const Error& e) {
      row.computed = std::string("error: ") + e.what();
      row.status = Status::fail;
    }
    row.millis = millis_since(start);
    result.rows.push_back(std::move(row));
  }
};

template <class T>
std::pair<T, T> both(T a, T b) {
  return {std::move(a), std::move(b)};
}

// --- numeric -----------------------------------------------------------------

struct Expectation {
  std::string id;
  long d;
  std::string method;
  int criterion;
  Rational expected;
};

constexpr std::uint64_t kFixtureTag = 1000;
constexpr std::uint64_t kFixtureDraws = 3;

class NumericSuite {
 public:
  NumericSuite(const RunConfig& cfg) : cfg_(cfg), d_min_(cfg.d_min.value_or(2)), d_max_(cfg.d_max.value_or(4)) {
    oracle_.seed = *cfg.seed;
    oracle_.height = cfg.height;
    oracle_.cluster_radius = cfg.cluster_radius;
    oracle_.residual_tol = cfg.residual_tol;
    oracle_.retries = cfg.retries;
  }

  SuiteResult result;

  bool wants(long d) const { return d >= d_min_ && d <= d_max_; }
  const OracleConfig& oracle() const { return oracle_; }

  /// Independent generator for draw `draw` of the fixture numbered `k`.
  std::mt19937_64 fixture_rng(std::uint64_t k, std::uint64_t draw) const {
    return derived_rng(*cfg_.seed, kFixtureTag + k, draw);
  }
  std::uint64_t fixture_seed(std::uint64_t k, std::uint64_t draw) const { return fixture_rng(k, draw)(); }

  /// Runs `compute` and compares its values with the expectations in order.
  /// A fixture on which the oracle exhausts its retries is not general; it is
  /// redrawn up to kFixtureDraws times.
  void run(const std::vector<Expectation>& specs, const std::function<std::vector<long>(std::uint64_t)>& compute) {
    if (specs.empty() || !wants(specs.front().d)) return;
    std::vector<CheckResult> rows;
    for (const auto& s : specs) {
      CheckResult row;
      row.invariant_id = s.id;
      row.d = s.d;
      row.method = s.method;
      row.criterion = s.criterion;
      row.expected = to_string(s.expected);
      row.seed = cfg_.seed;
      rows.push_back(std::move(row));
    }
    const auto start = Clock::now();
    try {
      std::vector<long> got;
      for (std::uint64_t draw = 0;; ++draw) {
        try {
          got = compute(draw);
          break;
        } catch (const RetryExhausted&) {
          if (draw + 1 >= kFixtureDraws) throw;
        }
      }
      for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].computed = std::to_string(got.at(i));
        rows[i].status = Rational(got.at(i)) == specs[i].expected ? Status::pass : Status::fail;
      }
    } catch (const RetryExhausted&) {
      for (auto& row : rows) {
        row.computed = "retries exhausted";
        row.status = Status::skipped;
        row.exhausted = true;
      }
    } catch (const Error& e) {
      for (auto& row : rows) {
        row.computed = std::string("error: ") + e.what();
        row.status = Status::fail;
      }
    }
    const double ms = millis_since(start);
    for (auto& row : rows) {
      row.millis = ms;
      result.rows.push_back(std::move(row));
    }
  }

 private:
  RunConfig cfg_;
  OracleConfig oracle_;
  long d_min_, d_max_;
};

Point3 random_point_off(const PlaneCurve& c, std::mt19937_64& rng, long height) {
  std::uniform_int_distribution<long> coef(-height, height);
  for (;;) {
    Point3 p{Rational(coef(rng)), Rational(coef(rng)), Rational(coef(rng))};
    if (sgn(p[0]) == 0 && sgn(p[1]) == 0 && sgn(p[2]) == 0) continue;
    if (c(p) != 0) return p;
  }
}

}  // namespace

// --- configuration -----------------------------------------------------------

Format parse_format(const std::string& s) {
  if (s == "md") return Format::md;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw UsageError("unknown format '" + s + "' (expected md, csv or json)");
}

void RunConfig::validate(bool numeric) const {
  if (d_min && d_max && *d_min > *d_max) throw UsageError("--d-min exceeds --d-max");
  if (height < 1) throw UsageError("--height must be positive");
  if (!(cluster_radius > 0)) throw UsageError("--cluster-radius must be positive");
  if (!(residual_tol > 0)) throw UsageError("--residual-tol must be positive");
  if (retries < 1) throw UsageError("--retries must be positive");
  if (numeric && !seed) throw UsageError("numeric checks need --seed");
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

int SuiteResult::exit_code() const {
  bool exhausted = false;
  for (const auto& r : rows) {
    if (r.status == Status::fail) return 1;
    exhausted |= r.exhausted;
  }
  return exhausted ? 2 : 0;
}

void SuiteResult::append(const SuiteResult& other) { rows.insert(rows.end(), other.rows.begin(), other.rows.end()); }

void SuiteResult::sort() {
  std::stable_sort(rows.begin(), rows.end(), [](const CheckResult& a, const CheckResult& b) {
    const long da = a.d.value_or(-1), db = b.d.value_or(-1);
    return std::tie(a.invariant_id, da, a.method) < std::tie(b.invariant_id, db, b.method);
  });
}

// --- suites ------------------------------------------------------------------

SuiteResult check_symbolic(const RunConfig& cfg) {
  SymbolicSuite s;
  const std::optional<long> sym;

  s.identity("hyperflex", sym, "principal_parts", 1,
             [] { return both(D("6(d-3)(3d-2)"), psi_degree(principal_parts_chern(3))); });
  s.identity("flex_points", sym, "chern", 2, [] { return both(D("6d-6"), flex_degrees().first); });
  s.identity("flex_lines", sym, "chern", 2, [] { return both(D("3d(d-2)"), flex_degrees().second); });
  s.identity("hyperflex", sym, "severi=chern", 3, [] { return both(hyperflex_degree(), severi_cusp_count()); });
  s.identity("double_point_class", sym, "double_point", 4, [] {
    return both(SurfaceDivClass{D("2d^3-d^2-9d+6"), D("d^2+d-6"), D("d^2-d-2")}, double_point_class());
  });
  s.identity("bitangent_class_S", sym, "double_point", 5, [] {
    return both(D("d-3") * SurfaceDivClass{D("2d^2+5d-6"), D("d+4"), D("d+2")}, bitangent_class_S());
  });
  s.identity("bitangent_class_S.M", sym, "pairing", 5,
             [] { return both(D("4d(d-2)(d-3)"), s_pair(bitangent_class_S(), pullback_M())); });
  s.identity("bitangent_lines", sym, "chern", 6,
             [] { return both(D("2d(d-2)(d-3)"), bitangent_line_degree(Derivation::chern)); });
  s.identity("bitangent_lines", sym, "recursion", 6,
             [] { return both(D("2d(d-2)(d-3)"), bitangent_line_degree(Derivation::recursion)); });
  s.identity("bitangent_lines", 4, "recursion", 6,
             [] { return both(Rational(16), at(bitangent_line_degree(Derivation::recursion), 4)); });
  for (Derivation r : {Derivation::double_point, Derivation::elementary}) {
    s.identity("bitangent_point_degree", sym, to_string(r), 7,
               [r] { return both(D("(d-3)(2d^2+5d-6)"), bitangent_point_degree(r)); });
    s.identity("bitangent_point_pa", sym, to_string(r), 7, [r] {
      return both(D("3d^5 - 19d^4 + 14d^3 + 120d^2 - 240d + 73"), bitangent_point_pa(r));
    });
  }
  s.identity("e_b", sym, "hurwitz", 8, [] { return both(D("(d-3)(d+4)"), improper_multiplicities().e_b); });
  s.identity("e_b", sym, "double_point", 8, [] { return both(D("(d-3)(d+4)"), bitangent_class_S().eb); });
  s.identity("e_n", sym, "hurwitz", 8, [] { return both(D("d^2-d-6"), improper_multiplicities().e_n); });
  s.identity("e_n", sym, "double_point", 8, [] { return both(D("d^2-d-6"), bitangent_class_S().en); });
  s.identity("flex_bitangent", sym, "double_point", 9,
             [] { return both(D("3(d^2+6d-4)(d-3)(d-4)"), flex_bitangent_degree()); });
  s.discrepancy("flex_bitangent", sym, "salmon", 9,
                [] { return both(salmon_claimed_formula(), flex_bitangent_degree()); });
  s.identity("flex_bitangent", 4, "salmon-agrees", 9,
             [] { return both(at(salmon_claimed_formula(), 4), at(flex_bitangent_degree(), 4)); });
  s.discrepancy("flex_bitangent", 5, "salmon", 9,
                [] { return both(at(salmon_claimed_formula(), 5), at(flex_bitangent_degree(), 5)); });
  s.identity("flex_bitangent", 5, "double_point", 9,
             [] { return both(Rational(306), at(flex_bitangent_degree(), 5)); });
  s.identity("bitangent_curve_ramification", sym, "sum-of-contributions", 10,
             [] { return both(D("18d^4 - 30d^3 - 408d^2 + 1200d - 576"), bitangent_curve_ramification()); });
  s.discrepancy("bitangent_curve_ramification", sym, "printed-total", 10,
                [] { return both(printed_ramification_total(), bitangent_curve_ramification()); });
  s.identity("bitangent_curve_pg", sym, "hurwitz", 10,
             [] { return both(D("8d^4 - 13d^3 - 195d^2 + 582d - 287"), bitangent_curve_pg()); });
  s.identity("bitangent_curve_pg", sym, "hurwitz-recomputed", 10, [] {
    return both(bitangent_curve_pg(), hurwitz_genus(Rational(2) * plucker_bitangents(), bitangent_curve_ramification()));
  });
  for (Derivation r : {Derivation::genus_defect, Derivation::recursion}) {
    s.identity("tritangent", sym, to_string(r), 11,
               [r] { return both(D("(d^2+3d-2)(d-3)(d-4)(d-5)"), tritangent_degree(r)); });
  }
  s.identity("bitangent_pa_minus_pg", sym, "double_point-hurwitz", 11, [] {
    return both(D("3d^5 - 27d^4 + 27d^3 + 315d^2 - 822d + 360"),
                bitangent_point_pa(Derivation::double_point) - bitangent_curve_pg());
  });
  s.identity("bitangent_line_genus", sym, "hurwitz", 12,
             [] { return both(D("4d^4 - (13/2)d^3 - 102d^2 + (615/2)d - 152"), bitangent_line_genus()); });
  s.identity("extra_node_prediction", sym, "genus_defect", 12, [] {
    return both(D("2d^6 - 23d^5 + 97d^4 - (287/2)d^3 - 126d^2 + (993/2)d - 207"), extra_node_prediction());
  });
  s.identity("extra_node_prediction", 4, "genus_defect", 12,
             [] { return both(Rational(51), at(extra_node_prediction(), 4)); });
  s.identity("extra_node_prediction", 3, "genus_defect", 12,
             [] { return both(Rational(0), at(extra_node_prediction(), 3)); });
  s.discrepancy("extra_node_prediction", 3, "printed-value", 12,
                [] { return both(Rational(12), at(extra_node_prediction(), 3)); });

  // Every invariant with more than one route: the routes must coincide.
  const auto rows = invariant_rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[j].invariant_id != rows[i].invariant_id) continue;
      const PolyD a = rows[i].value, b = rows[j].value;
      s.identity(rows[i].invariant_id, sym, "routes:" + to_string(rows[i].derivation) + "=" + to_string(rows[j].derivation),
                 0, [a, b] { return both(a, b); });
    }
  }

  if (cfg.inject_failure) s.identity("injected_failure", sym, "self-test", 0, [] { return both(D("d+1"), D("d")); });
  s.result.sort();
  return s.result;
}

SuiteResult check_numeric(const RunConfig& cfg) {
  cfg.validate(true);
  NumericSuite s(cfg);
  const long h = cfg.height;
  const OracleConfig& oc = s.oracle();
  auto expect = [](const PolyD& p, long d) { return at(p, d); };

  // Criterion 13.
  s.run({{"flexes", 3, "fermat", 13, expect(plucker_flexes(), 3)}},
        [&](std::uint64_t) { return std::vector<long>{count_flexes(fermat_curve(3), oc).distinct}; });
  for (int d : {3, 4}) {
    s.run({{"flexes", d, "random-smooth", 13, expect(plucker_flexes(), d)}}, [&, d](std::uint64_t draw) {
      auto rng = s.fixture_rng(static_cast<std::uint64_t>(d), draw);
      return std::vector<long>{count_flexes(random_curve(d, rng, h), oc).distinct};
    });
  }
  // 14.
  for (int d : {2, 3, 4}) {
    s.run({{"tangents_from_point", d, "random-smooth", 14, expect(dual_degree(), d)}}, [&, d](std::uint64_t draw) {
      auto rng = s.fixture_rng(10 + static_cast<std::uint64_t>(d), draw);
      const PlaneCurve c = random_curve(d, rng, h);
      const Point3 from = random_point_off(c, rng, h);
      return std::vector<long>{count_tangents_from_point(c, from, oc).distinct};
    });
  }
  // 15 and 16.
  for (int d : {2, 3, 4}) {
    s.run({{"tangent_members", d, "random-pencil", 15, expect(tangency_cover_degree(), d)}}, [&, d](std::uint64_t draw) {
      const CurvePencil p = random_pencil(d, s.fixture_seed(20 + static_cast<std::uint64_t>(d), draw), h);
      return std::vector<long>{count_tangent_members(p, std::nullopt, oc).distinct};
    });
  }
  for (int d : {2, 3, 4}) {
    s.run({{"nodal_members", d, "random-pencil", 16, expect(nodal_fiber_count(), d)}}, [&, d](std::uint64_t draw) {
      const CurvePencil p = random_pencil(d, s.fixture_seed(30 + static_cast<std::uint64_t>(d), draw), h);
      return std::vector<long>{count_nodal_members(p, oc).distinct};
    });
  }
  // 17.
  for (int d : {3, 4}) {
    s.run({{"flex_points_on_line", d, "random-pencil", 17, expect(flex_degrees().first, d)}}, [&, d](std::uint64_t draw) {
      const CurvePencil p = random_pencil(d, s.fixture_seed(40 + static_cast<std::uint64_t>(d), draw), h);
      return std::vector<long>{count_flex_points_on_line(p, std::nullopt, oc).distinct};
    });
  }
  // 18.
  const Rational plucker = expect(plucker_bitangents(), 4);
  const Rational e_n = expect(improper_multiplicities().e_n, 4);
  s.run({{"bitangents_proper", 4, "random-smooth", 18, plucker}, {"bitangents_improper", 4, "random-smooth", 18, Rational(0)}},
        [&](std::uint64_t draw) {
          auto rng = s.fixture_rng(50, draw);
          const auto r = count_bitangents_quartic(random_curve(4, rng, h), std::nullopt, oc);
          return std::vector<long>{r.proper, r.improper};
        });
  s.run({{"bitangents_proper", 4, "random-nodal", 18, plucker - 2 * e_n},
         {"bitangents_improper", 4, "random-nodal", 18, e_n},
         {"bitangents_weighted", 4, "random-nodal", 18, plucker}},
        [&](std::uint64_t draw) {
          auto rng = s.fixture_rng(51, draw);
          const PlaneCurve c = random_nodal_quartic(rng, h);
          const Point3 node{Rational(0), Rational(0), Rational(1)};
          const auto r = count_bitangents_quartic(c, node, oc);
          return std::vector<long>{r.proper, r.improper, r.weighted};
        });

  if (cfg.stretch) {
    for (int d : {3, 4}) {
      s.run({{"bitangent_lines_through_point", d, "random-pencil", 19,
              expect(bitangent_line_degree(Derivation::chern), d)}},
            [&, d](std::uint64_t draw) {
              auto rng = s.fixture_rng(60 + static_cast<std::uint64_t>(d), draw);
              const CurvePencil p = random_pencil(d, rng(), h);
              std::uniform_int_distribution<long> coef(-h, h);
              const Point3 x{Rational(coef(rng)), Rational(coef(rng)), Rational(1)};
              return std::vector<long>{count_bitangent_lines_through_point(p, x, oc).distinct};
            });
    }
    for (int d : {3, 4}) {
      s.run({{"hyperflexes", d, "random-pencil", 19, expect(hyperflex_degree(), d)}}, [&, d](std::uint64_t draw) {
        const CurvePencil p = random_pencil(d, s.fixture_seed(70 + static_cast<std::uint64_t>(d), draw), h);
        return std::vector<long>{count_hyperflexes(p, oc).distinct};
      });
    }
  }
  s.result.sort();
  return s.result;
}

SuiteResult full_report(const RunConfig& cfg) {
  SuiteResult r = check_symbolic(cfg);
  if (cfg.seed) r.append(check_numeric(cfg));
  r.sort();
  return r;
}

// --- rendering ---------------------------------------------------------------

namespace {

std::string d_label(const std::optional<long>& d) { return d ? std::to_string(*d) : "symbolic"; }

std::string fixed1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
  return out + "\n";
}

std::string md_line(const std::vector<std::string>& fields) {
  std::string out = "|";
  for (const auto& f : fields) {
    std::string cell;
    for (char c : f) cell += c == '|' ? std::string("\\|") : std::string(1, c);
    out += " " + cell + " |";
  }
  return out + "\n";
}

std::string md_rule(std::size_t n) {
  std::string out = "|";
  for (std::size_t i = 0; i < n; ++i) out += "---|";
  return out + "\n";
}

std::vector<std::string> fields(const CheckResult& r) {
  return {r.invariant_id, d_label(r.d), r.expected, r.computed, r.method, to_string(r.status),
          r.seed ? std::to_string(*r.seed) : "", fixed1(r.millis)};
}

}  // namespace

std::string render(const SuiteResult& r, Format f) {
  const std::vector<std::string> header{"invariant_id", "d", "expected", "computed", "method", "status", "seed", "ms"};
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& row : r.rows) {
    pass += row.status == Status::pass;
    fail += row.status == Status::fail;
    skipped += row.status == Status::skipped;
  }
  std::ostringstream os;
  switch (f) {
    case Format::md: {
      os << md_line(header) << md_rule(header.size());
      for (const auto& row : r.rows) os << md_line(fields(row));
      os << "\n" << r.rows.size() << " checks: " << pass << " pass, " << fail << " fail, " << skipped << " skipped\n";
      break;
    }
    case Format::csv: {
      os << csv_line(header);
      for (const auto& row : r.rows) os << csv_line(fields(row));
      break;
    }
    case Format::json: {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& row : r.rows) {
        nlohmann::ordered_json j;
        j["invariant_id"] = row.invariant_id;
        if (row.d)
          j["d"] = *row.d;
        else
          j["d"] = "symbolic";
        j["expected"] = row.expected;
        j["computed"] = row.computed;
        j["method"] = row.method;
        j["status"] = to_string(row.status);
        if (row.seed)
          j["seed"] = *row.seed;
        else
          j["seed"] = nullptr;
        j["timings"] = {{"ms", std::stod(fixed1(row.millis))}};
        rows.push_back(std::move(j));
      }
      nlohmann::ordered_json doc;
      doc["rows"] = std::move(rows);
      doc["summary"] = {{"pass", pass}, {"fail", fail}, {"skipped", skipped}, {"exit_code", r.exit_code()}};
      os << doc.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

std::string render(const InvariantTable& t, Format f) {
  std::vector<std::string> header{"invariant_id", "derivation", "factored", "expanded"};
  for (long d = t.d_min; d <= t.d_max; ++d) header.push_back("d=" + std::to_string(d));
  header.push_back("routes_agree");
  auto line_fields = [](const TableLine& l) {
    std::vector<std::string> out{l.invariant_id, to_string(l.derivation), l.factored_form, to_string(l.value)};
    for (const auto& v : l.values) out.push_back(to_string(v));
    out.push_back(l.routes_agree ? "yes" : "no");
    return out;
  };
  std::ostringstream os;
  switch (f) {
    case Format::md:
      os << md_line(header) << md_rule(header.size());
      for (const auto& l : t.lines) os << md_line(line_fields(l));
      break;
    case Format::csv:
      os << csv_line(header);
      for (const auto& l : t.lines) os << csv_line(line_fields(l));
      break;
    case Format::json: {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& l : t.lines) {
        nlohmann::ordered_json j;
        j["invariant_id"] = l.invariant_id;
        j["derivation"] = to_string(l.derivation);
        j["factored"] = l.factored_form;
        j["expanded"] = to_string(l.value);
        nlohmann::ordered_json values;
        for (std::size_t i = 0; i < l.values.size(); ++i)
          values[std::to_string(t.d_min + static_cast<long>(i))] = to_string(l.values[i]);
        j["values"] = std::move(values);
        j["routes_agree"] = l.routes_agree;
        rows.push_back(std::move(j));
      }
      nlohmann::ordered_json doc;
      doc["d_min"] = t.d_min;
      doc["d_max"] = t.d_max;
      doc["rows"] = std::move(rows);
      os << doc.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

}  // namespace pencil
