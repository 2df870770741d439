#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "geoconvex/counterexample.hpp"
#include "geoconvex/errors.hpp"
#include "geoconvex/inequalities.hpp"
#include "geoconvex/interpolation.hpp"
#include "geoconvex/transforms.hpp"
#include "geoconvex/volume.hpp"

namespace geoconvex::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json number(double v) {
  if (v == kInf) return "inf";
  if (v == -kInf) return "-inf";
  return v;
}

GridFunction load_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  GridFunction g = read_grid(in);
  g.validate_or_throw();
  return g;
}

std::ofstream open_out(const std::string& path, bool force) {
  if (!force && std::filesystem::exists(path)) throw UsageError(path + " exists; pass --force to overwrite");
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  return out;
}

double parse_p(const std::string& s) {
  if (s == "inf" || s == "+inf") return kInf;
  if (s == "-inf") return -kInf;
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("bad value for --p: " + s);
  }
  if (pos != s.size() || std::isnan(v)) throw UsageError("bad value for --p: " + s);
  return v;
}

json report_json(const VolumeReport& r) {
  return {{"route", to_string(r.route)}, {"value", number(r.value)}, {"est_error", number(r.est_error)}};
}

json inequality_json(const InequalityReport& r) {
  return {{"name", r.name},        {"lhs", number(r.lhs)},
          {"rhs", number(r.rhs)},  {"margin", number(r.margin)},
          {"est_error", number(r.est_error)}, {"witness", r.witness},
          {"pass", r.passed}};
}

struct TransformArgs {
  std::string kind;
  std::string in;
  std::string out;
  double out_half_width = 0.0;
  bool force = false;
};

struct InterpArgs {
  std::string kind;
  double lambda = 0.5;
  std::string f;
  std::string g;
  std::string out;
  bool force = false;
};

struct VolArgs {
  std::string route = "all";
  std::string in;
  std::string tail = "bound";
};

struct VerifyArgs {
  std::string suite = "all";
  int trials = 100;
  std::uint64_t seed = 7;
  std::string report;
  bool force = false;
};

struct CounterexampleArgs {
  int nmax = 100;
  int log_to = 0;
  std::string csv;
  bool force = false;
};

struct CpArgs {
  std::string p = "inf";
  int trials = 100;
  std::uint64_t seed = 7;
};

int do_transform(const TransformArgs& a, std::ostream& out) {
  static const std::map<std::string, TransformKind> kinds{
      {"legendre", TransformKind::Legendre}, {"polarity", TransformKind::Polarity}, {"gauge", TransformKind::Gauge}};
  const GridFunction f = load_grid(a.in);
  TransformOptions opts;
  if (a.out_half_width > 0.0) opts.output = GridSpec::symmetric(f.dim(), a.out_half_width, f.resolution());
  const GeoConvexFunction r = apply_transform(kinds.at(a.kind), GeoConvexFunction(f), opts);
  auto file = open_out(a.out, a.force);
  write_grid(file, std::get<GridFunction>(r));
  out << json{{"transform", a.kind}, {"in", a.in}, {"out", a.out}}.dump() << '\n';
  return 0;
}

int do_interp(const InterpArgs& a, std::ostream& out) {
  static const std::map<std::string, InterpolationKind> kinds{{"plus", InterpolationKind::PlusLambda},
                                                              {"infconv", InterpolationKind::InfConv},
                                                              {"boxdot", InterpolationKind::BoxDot},
                                                              {"boxtimes", InterpolationKind::BoxTimes}};
  const GridFunction f = load_grid(a.f);
  const GridFunction g = load_grid(a.g);
  const GridFunction h = interpolate(kinds.at(a.kind), f, g, a.lambda);
  auto file = open_out(a.out, a.force);
  write_grid(file, h);
  out << json{{"interp", a.kind}, {"lambda", a.lambda}, {"out", a.out}}.dump() << '\n';
  return 0;
}

int do_vol(const VolArgs& a, std::ostream& out) {
  const GeoConvexFunction f = load_grid(a.in);
  const VolumeOptions opts{a.tail == "exact" ? TailPolicy::Exact : TailPolicy::Bound, 1e-6};
  json reports = json::array();
  if (a.route == "quad" || a.route == "all") reports.push_back(report_json(vol_quadrature(f, opts)));
  if (a.route == "g" || a.route == "all") reports.push_back(report_json(vol_via_g(f, opts)));
  if (a.route == "levels" || a.route == "all") reports.push_back(report_json(vol_via_levels(f, opts)));
  out << (reports.size() == 1 ? reports[0] : json{{"reports", reports}}).dump() << '\n';
  return 0;
}

int do_verify(const VerifyArgs& a, std::ostream& out) {
  static const std::map<std::string, Suite> suites{{"holder", Suite::Holder}, {"pl", Suite::PrekopaLeindler},
                                                   {"ppl", Suite::NegOneConcavity}, {"factor2", Suite::Factor2},
                                                   {"order", Suite::Order}, {"all", Suite::All}};
  const SuiteResult r = run_suite(suites.at(a.suite), a.trials, a.seed);
  std::map<std::string, std::pair<int, int>> counts;
  for (const auto& rep : r.reports) {
    auto& c = counts[rep.name];
    ++c.first;
    if (!rep.passed) ++c.second;
  }
  json summary = json::object();
  for (const auto& [name, c] : counts) summary[name] = {{"checks", c.first}, {"failures", c.second}};
  json doc{{"suite", a.suite}, {"trials", a.trials}, {"seed", a.seed}, {"failures", r.failures},
           {"summary", summary}, {"pass", r.passed()}};
  if (!a.report.empty()) {
    json records = json::array();
    for (const auto& rep : r.reports) records.push_back(inequality_json(rep));
    auto file = open_out(a.report, a.force);
    file << records.dump(1) << '\n';
  }
  json failed = json::array();
  for (const auto& rep : r.reports) {
    if (!rep.passed) failed.push_back(inequality_json(rep));
  }
  if (!failed.empty()) doc["violations"] = failed;
  out << doc.dump() << '\n';
  return r.passed() ? 0 : 1;
}

int do_counterexample(const CounterexampleArgs& a, std::ostream& out) {
  if (a.nmax < 1) throw UsageError("--nmax must be at least 1");
  std::vector<int> ns;
  for (int n = 1; n <= a.nmax; ++n) ns.push_back(n);
  if (a.log_to > a.nmax) {
    for (int n : log_spaced(std::max(a.nmax, 1), a.log_to, 40)) {
      if (n > a.nmax) ns.push_back(n);
    }
  }
  const auto rows = appendix_table(ns);
  if (a.csv.empty()) {
    write_csv(out, rows);
  } else {
    auto file = open_out(a.csv, a.force);
    write_csv(file, rows);
  }
  return 0;
}

int do_cp(const CpArgs& a, std::ostream& out) {
  if (a.trials < 1) throw UsageError("--trials must be positive");
  Sampler rng(a.seed);
  const CpEstimate e = estimate_cp(parse_p(a.p), rng, a.trials);
  out << json{{"p", number(e.p)},           {"lower_bound", e.lower_bound}, {"witness", e.witness},
              {"lambda", e.witness_lambda}, {"trials", e.trials}}
             .dump()
      << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric convex functions: transforms, interpolations, volumes, inequality checks"};
  app.name("geoconvex");
  app.require_subcommand(1, 1);

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "Apply L, A or J to a grid function");
  transform->add_option("--kind", ta.kind)->required()->check(CLI::IsMember({"legendre", "polarity", "gauge"}));
  transform->add_option("--in", ta.in)->required();
  transform->add_option("--out", ta.out)->required();
  transform->add_option("--out-half-width", ta.out_half_width, "Half-width of the output grid");
  transform->add_flag("--force", ta.force);

  InterpArgs ia;
  auto* interp = app.add_subcommand("interp", "Interpolate two grid functions");
  interp->add_option("--kind", ia.kind)->required()->check(CLI::IsMember({"plus", "infconv", "boxdot", "boxtimes"}));
  interp->add_option("--lambda", ia.lambda)->required()->check(CLI::Range(0.0, 1.0));
  interp->add_option("--f", ia.f)->required();
  interp->add_option("--g", ia.g)->required();
  interp->add_option("--out", ia.out)->required();
  interp->add_flag("--force", ia.force);

  VolArgs va;
  auto* vol = app.add_subcommand("vol", "Volume of a grid function as JSON");
  vol->add_option("--route", va.route)->check(CLI::IsMember({"quad", "g", "levels", "all"}));
  vol->add_option("--in", va.in)->required();
  vol->add_option("--tail", va.tail, "bound: reject mass outside the grid; exact: integrate over the grid only")
      ->check(CLI::IsMember({"bound", "exact"}));

  VerifyArgs ve;
  auto* verify = app.add_subcommand("verify", "Run the inequality harness");
  verify->add_option("--suite", ve.suite)->check(CLI::IsMember({"holder", "pl", "ppl", "factor2", "order", "all"}));
  verify->add_option("--trials", ve.trials)->check(CLI::PositiveNumber);
  verify->add_option("--seed", ve.seed);
  verify->add_option("--report", ve.report, "Write every check record as JSON");
  verify->add_flag("--force", ve.force);

  CounterexampleArgs ca;
  auto* counter = app.add_subcommand("counterexample", "Emit the R(n), r(n), ratio table as CSV");
  counter->add_option("--nmax", ca.nmax);
  counter->add_option("--log-to", ca.log_to, "Append log-spaced n up to this value");
  counter->add_option("--csv", ca.csv);
  counter->add_flag("--force", ca.force);

  CpArgs cp;
  auto* cps = app.add_subcommand("cp-search", "Lower bound on c_p from a random corpus");
  cps->add_option("--p", cp.p, "Mean exponent; inf, -inf or a number");
  cps->add_option("--trials", cp.trials)->check(CLI::PositiveNumber);
  cps->add_option("--seed", cp.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (transform->parsed()) return do_transform(ta, out);
    if (interp->parsed()) return do_interp(ia, out);
    if (vol->parsed()) return do_vol(va, out);
    if (verify->parsed()) return do_verify(ve, out);
    if (counter->parsed()) return do_counterexample(ca, out);
    if (cps->parsed()) return do_cp(cp, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace geoconvex::cli
