#include "hexcensus/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <limits>
#include <ostream>

#include "hexcensus/asympt.hpp"
#include "hexcensus/census.hpp"
#include "hexcensus/errors.hpp"
#include "hexcensus/formulas.hpp"
#include "hexcensus/hex_matrices.hpp"
#include "hexcensus/pfaffian.hpp"
#include "hexcensus/verify.hpp"

namespace hexcensus {

namespace {

using Json = nlohmann::ordered_json;

std::string hex_name(long a, long b, long c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

void require_symmetric(const CountRequest& r) {
  if (r.a != r.c) {
    throw ArgumentError("class '" + r.tiling_class + "' needs a symmetric hexagon (a == c); got " +
                        hex_name(r.a, r.b, r.c));
  }
}

void require_centered(const CountRequest& r) {
  require_symmetric(r);
  if ((r.a + r.b) % 2 == 0) {
    throw ArgumentError(hex_name(r.a, r.b, r.c) +
                        " has no central rhombus: a and b have the same parity");
  }
}

ExactInt enumerate(const CountRequest& r) {
  CensusOptions options;
  if (r.force) options.budget = std::numeric_limits<std::uint64_t>::max();
  TilingCensus t;
  try {
    t = census(HexSpec{r.a, r.b, r.c}, options);
  } catch (const ResourceError& e) {
    throw ResourceError(std::string(e.what()) + "; pass --force to enumerate anyway");
  }
  if (r.tiling_class == "all") return t.total;
  if (r.tiling_class == "vsym") return *t.vsym;
  if (r.tiling_class == "hsym") return *t.hsym;
  if (r.tiling_class == "centered") return *t.centered;
  return *t.centered_vsym;
}

std::optional<ExactInt> by_formula(const CountRequest& r) {
  if (r.tiling_class == "all") return count_T(r.a, r.b, r.c);
  if (r.tiling_class == "vsym") return count_ST(r.a, r.b);
  if (r.tiling_class == "centered") return centered_count(r.a, r.b);
  if (r.tiling_class == "centered-vsym") return centered_sym_count(r.a, r.b);
  return std::nullopt;
}

std::optional<ExactInt> by_pfaffian(const CountRequest& r) {
  if (r.tiling_class != "centered-vsym") return std::nullopt;
  const SkewMatrix m = r.a % 2 == 1 ? build_M(r.a / 2, r.b / 2) : build_N(r.a / 2, r.b / 2);
  return require_integer(pf(m), "Pfaffian count");
}

Json outcome_json(const VerifyOutcome& v) {
  Json failures = Json::array();
  for (const VerifyFailure& f : v.failures) {
    failures.push_back(
        {{"check", f.check}, {"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
  }
  Json j;
  j["suite"] = v.suite;
  j["cases"] = v.cases;
  j["failures"] = failures;
  j["wall_seconds"] = v.wall_seconds;
  j["notes"] = v.notes;
  return j;
}

struct TableRow {
  long n, x, a, b;
  ExactInt count;
  ExactRational probability;
};

std::vector<TableRow> table_rows(int theorem, long max_n, long max_x) {
  std::vector<TableRow> rows;
  // Odd a = 2n+1, b = 2x (theorems 1 and 2), then even a = 2n, b = 2x+1
  // (theorems 1 and 3).
  if (theorem == 1 || theorem == 2) {
    for (long n = 0; n <= max_n; ++n)
      for (long x = 0; x <= max_x; ++x) {
        const long a = 2 * n + 1;
        const long b = 2 * x;
        if (theorem == 1) {
          rows.push_back({n, x, a, b, centered_count(a, b), prob_centered(a, b)});
        } else {
          rows.push_back({n, x, a, b, centered_sym_count(a, b), prob_centered_sym(a, b)});
        }
      }
  }
  if (theorem == 1 || theorem == 3) {
    for (long n = 1; n <= max_n; ++n)
      for (long x = 0; x <= max_x; ++x) {
        const long a = 2 * n;
        const long b = 2 * x + 1;
        if (theorem == 1) {
          rows.push_back({n, x, a, b, centered_count(a, b), prob_centered(a, b)});
        } else {
          rows.push_back({n, x, a, b, centered_sym_count(a, b), prob_centered_sym(a, b)});
        }
      }
  }
  return rows;
}

}  // namespace

CountResult cmd_count(const CountRequest& r) {
  if (r.a < 0 || r.b < 0 || r.c < 0) throw ArgumentError("side lengths must be nonnegative");
  const std::string& k = r.tiling_class;
  if (k == "vsym" || k == "hsym") {
    require_symmetric(r);
  } else if (k == "centered" || k == "centered-vsym") {
    require_centered(r);
  } else if (k != "all") {
    throw ArgumentError("unknown class '" + k + "'");
  }

  const std::string& m = r.method;
  if (m == "formula" || m == "auto") {
    if (auto v = by_formula(r)) return {"formula", *v};
    if (m == "formula") throw ArgumentError("no closed formula for class '" + k + "'");
  }
  if (m == "pfaffian" || m == "auto") {
    if (auto v = by_pfaffian(r)) return {"pfaffian", *v};
    if (m == "pfaffian") throw ArgumentError("no Pfaffian method for class '" + k + "'");
  }
  if (m == "enumerate" || m == "auto") return {"enumerate", enumerate(r)};
  throw ArgumentError("unknown method '" + m + "'");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts and verifies centered and symmetric rhombus tilings of hexagons."};
  app.require_subcommand(1);

  CountRequest count_req;
  auto* count = app.add_subcommand("count", "Count tilings of an (a,b,c) hexagon");
  count->add_option("--a", count_req.a, "First side length")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--b", count_req.b, "Vertical side length")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--c", count_req.c, "Third side length")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--class", count_req.tiling_class, "Tiling class")
      ->check(CLI::IsMember({"all", "vsym", "hsym", "centered", "centered-vsym"}));
  count->add_option("--method", count_req.method, "Counting method")
      ->check(CLI::IsMember({"formula", "pfaffian", "enumerate", "auto"}));
  count->add_flag("--force", count_req.force, "Enumerate even above the default budget");

  std::string suite = "all";
  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-n", verify_opts.max_n, "Largest n")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-x", verify_opts.max_x, "Largest x")->check(CLI::NonNegativeNumber);

  int theorem = 1;
  long table_n = 3;
  long table_x = 4;
  std::string format = "csv";
  auto* table = app.add_subcommand("table", "Tabulate exact counts and probabilities");
  table->add_option("--theorem", theorem, "1: centered, 2: centered symmetric (odd a), 3: (even a)")
      ->required()
      ->check(CLI::IsMember({1, 2, 3}));
  table->add_option("--max-n", table_n, "Largest n")->check(CLI::NonNegativeNumber);
  table->add_option("--max-x", table_x, "Largest x")->check(CLI::NonNegativeNumber);
  table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  double ratio = 1;
  std::vector<long> ns{20, 40, 80};
  auto* asympt = app.add_subcommand("asympt", "Compare R(n, ratio*n) with its arcsine limit");
  asympt->add_option("--ratio", ratio, "x/n ratio")->check(CLI::NonNegativeNumber);
  asympt->add_option("--n", ns, "Comma-separated n values")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) {
      const CountResult res = cmd_count(count_req);
      Json j;
      j["a"] = count_req.a;
      j["b"] = count_req.b;
      j["c"] = count_req.c;
      j["class"] = count_req.tiling_class;
      j["method"] = res.method;
      j["count"] = to_string(res.count);
      out << j.dump() << '\n';
      return kExitOk;
    }
    if (*verify) {
      const VerifyOutcome v = run_suite(suite, verify_opts);
      for (const std::string& note : v.notes) err << note << '\n';
      for (const VerifyFailure& f : v.failures) {
        err << "FAIL " << f.check << " [" << f.inputs << "] expected " << f.expected << ", got "
            << f.actual << '\n';
      }
      out << outcome_json(v).dump(2) << '\n';
      return v.ok() ? kExitOk : kExitVerifyFailed;
    }
    if (*table) {
      const auto rows = table_rows(theorem, table_n, table_x);
      if (format == "csv") {
        out << "n,x,a,b,count,probability\n";
        for (const TableRow& r : rows) {
          out << r.n << ',' << r.x << ',' << r.a << ',' << r.b << ',' << to_string(r.count) << ','
              << to_string(r.probability) << '\n';
        }
      } else {
        Json arr = Json::array();
        for (const TableRow& r : rows) {
          arr.push_back({{"n", r.n},
                         {"x", r.x},
                         {"a", r.a},
                         {"b", r.b},
                         {"count", to_string(r.count)},
                         {"probability", to_string(r.probability)}});
        }
        Json j;
        j["theorem"] = theorem;
        j["rows"] = arr;
        out << j.dump(2) << '\n';
      }
      return kExitOk;
    }
    if (*asympt) {
      if (ns.empty()) throw ArgumentError("--n needs at least one value");
      const AsymptReport rep = asympt_report(ratio, ns);
      Json j;
      j["ratio"] = rep.ratio;
      j["target"] = rep.target;
      j["n"] = rep.n_values;
      j["x"] = rep.x_values;
      j["measured"] = rep.measured;
      j["abs_errors"] = rep.abs_errors;
      j["max_abs_error"] = rep.max_abs_error;
      j["monotone_approach"] = rep.monotone_approach;
      out << j.dump(2) << '\n';
      return kExitOk;
    }
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const ArgumentError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"hexcensus"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hexcensus
