#include "nowhere/cli.hpp"

#include "nowhere/antiderivative.hpp"
#include "nowhere/cells.hpp"
#include "nowhere/construction.hpp"
#include "nowhere/report_json.hpp"
#include "nowhere/suites.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace nowhere::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { csv, json };

struct RunConfig {
  std::string fn;
  int k = 1;
  int terms = kDefaultTerms;
  int depth = 40;
  long budget = 50;
  std::string x;
  std::string a = "-1";
  std::string b = "1";
  long count = 11;
  std::uint64_t seed = kDefaultSeed;
  std::string format;
  std::string out;
  std::string suite;
  long n_max = 50;
  std::string delta;
  std::string max_width;
};

Rat rational(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string("missing ") + flag);
  try {
    return Rat::parse(text);
  } catch (const ParseError&) {
    throw UsageError(std::string("malformed rational for ") + flag + ": " + text);
  }
}

Certified evaluate(const std::string& fn, const Rat& x, const RunConfig& cfg) {
  if (fn == "f1") return {eval_f1(x), Rat(0)};
  if (fn == "fk") return {eval_fk(x, cfg.k), Rat(0)};
  if (fn == "f") return eval_f(x, cfg.terms);
  if (fn == "g") return eval_g(x, cfg.terms);
  if (fn == "Fk") return {eval_Fk(x, cfg.k), Rat(0)};
  if (fn == "F") return eval_F(x, cfg.terms);
  if (fn == "G") return eval_G(x, cfg.terms);
  throw UsageError("unknown function: " + fn);
}

Format format_of(const RunConfig& cfg, Format fallback) {
  if (cfg.format.empty()) return fallback;
  if (cfg.format == "csv") return Format::csv;
  if (cfg.format == "json") return Format::json;
  throw UsageError("unknown format: " + cfg.format);
}

const char* flag(bool b) { return b ? "true" : "false"; }

std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                  Format format) {
  std::ostringstream s;
  if (format == Format::csv) {
    for (std::size_t i = 0; i < header.size(); ++i) s << (i ? "," : "") << header[i];
    s << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) s << (i ? "," : "") << row[i];
      s << '\n';
    }
    return s.str();
  }
  ordered_json records = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json record;
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (row[i] == "true" || row[i] == "false") record[header[i]] = row[i] == "true";
      else record[header[i]] = row[i];
    }
    records.push_back(std::move(record));
  }
  return records.dump(2) + "\n";
}

std::vector<std::string> sample_row(const Rat& x, const Certified& v) {
  return {x.str(), v.center.str(), v.radius.str(), flag(v.exact())};
}

std::string cmd_eval(const RunConfig& cfg) {
  const Rat x = rational(cfg.x, "--x");
  const Certified v = evaluate(cfg.fn, x, cfg);
  if (format_of(cfg, Format::json) == Format::csv) {
    return table({"x", "center", "radius", "exact"}, {sample_row(x, v)}, Format::csv);
  }
  ordered_json j{{"center", v.center.str()}, {"radius", v.radius.str()}};
  return j.dump() + "\n";
}

std::string cmd_sample(const RunConfig& cfg) {
  const Rat a = rational(cfg.a, "--a");
  const Rat b = rational(cfg.b, "--b");
  if (!(a < b)) throw UsageError("sample: need a < b");
  if (cfg.count < 2) throw UsageError("sample: count must be at least 2");
  require_unit_interval(a, "sample");
  require_unit_interval(b, "sample");
  const Rat step = (b - a) / Rat(cfg.count - 1);
  std::vector<std::vector<std::string>> rows;
  for (long i = 0; i < cfg.count; ++i) {
    const Rat x = i + 1 == cfg.count ? b : a + Rat(i) * step;
    rows.push_back(sample_row(x, evaluate(cfg.fn, x, cfg)));
  }
  return table({"x", "center", "radius", "exact"}, rows, format_of(cfg, Format::csv));
}

std::string cmd_intervals(const RunConfig& cfg) {
  if (cfg.k < 1) throw UsageError("intervals: k must be positive");
  const Window window{rational(cfg.a, "--a"), rational(cfg.b, "--b")};
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : enumerate_cells(cfg.k, IndexBudget{cfg.budget, Truncation::per_coordinate}, window)) {
    rows.push_back({c.address.str(), c.lo.str(), c.hi.str(), c.map.slope.str(), c.map.intercept.str()});
  }
  return table({"address", "lo", "hi", "slope", "intercept"}, rows, format_of(cfg, Format::csv));
}

std::string cmd_integrate(const RunConfig& cfg) {
  ordered_json j;
  if (cfg.fn.empty() || cfg.fn == "Fk" || cfg.fn == "fk") {
    const Rat x = rational(cfg.x, "--x");
    const Enclosure e = enclose_integral(cfg.k, x, cfg.budget);
    const Rat value = eval_Fk(x, cfg.k);
    j = {{"k", cfg.k},           {"x", x.str()},           {"budget", cfg.budget},
         {"value", value.str()}, {"lower", e.lower.str()}, {"upper", e.upper.str()},
         {"width", e.width().str()}, {"contains", e.contains(value)}};
  } else if (cfg.fn == "f") {
    const Enclosure e = darboux_gap(cfg.terms, cfg.budget);
    j = {{"K", cfg.terms},           {"budget", cfg.budget},      {"lower", e.lower.str()},
         {"upper", e.upper.str()}, {"width", e.width().str()}, {"contains_zero", e.contains(Rat(0))}};
  } else {
    throw UsageError("integrate: --fn must be Fk or f");
  }
  return j.dump(2) + "\n";
}

std::string cmd_verify(const RunConfig& cfg, const CLI::App& app, bool& all_passed) {
  SuiteConfig suite;
  suite.seed = cfg.seed;
  auto given = [&](const char* name) { return app.count(name) > 0; };
  if (given("--k")) suite.k = cfg.k;
  if (given("--K")) suite.terms = cfg.terms;
  if (given("--depth")) suite.depth = cfg.depth;
  if (given("--budget")) suite.budget = cfg.budget;
  if (given("--count")) suite.count = cfg.count;
  if (given("--n-max")) suite.n_max = cfg.n_max;
  if (given("--delta")) suite.delta = rational(cfg.delta, "--delta");
  if (given("--max-width")) suite.max_width = rational(cfg.max_width, "--max-width");
  SuiteReport report;
  try {
    report = run_suite(cfg.suite, suite);
  } catch (const UnknownSuite& e) {
    throw UsageError(e.what());
  }
  all_passed = report.all_passed();
  return to_json(report).dump(2) + "\n";
}

void emit(const std::string& data, const RunConfig& cfg, std::ostream& out) {
  if (cfg.out.empty()) {
    out << data;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw UsageError("cannot open --out file: " + cfg.out);
  file << data;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact evaluation and verification of a nowhere monotone derivative", "nowhere"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::vector<std::string> functions{"f1", "fk", "f", "g", "Fk", "F", "G"};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Write data to this file instead of stdout");
    sub->add_option("--format", cfg.format, "csv or json");
  };

  auto* eval = app.add_subcommand("eval", "Evaluate one function at one point");
  eval->add_option("--fn", cfg.fn, "f1, fk, f, g, Fk, F or G")->required()->check(CLI::IsMember(functions));
  eval->add_option("--x", cfg.x, "Point, p/q or decimal")->required();
  eval->add_option("--k", cfg.k, "Index for fk and Fk");
  eval->add_option("--K", cfg.terms, "Number of series terms");
  common(eval);

  auto* sample = app.add_subcommand("sample", "Tabulate a function on equally spaced points");
  sample->add_option("--fn", cfg.fn, "f1, fk, f, g, Fk, F or G")->required()->check(CLI::IsMember(functions));
  sample->add_option("--a", cfg.a, "Left end");
  sample->add_option("--b", cfg.b, "Right end");
  sample->add_option("--count", cfg.count, "Number of points");
  sample->add_option("--k", cfg.k, "Index for fk and Fk");
  sample->add_option("--K", cfg.terms, "Number of series terms");
  common(sample);

  auto* intervals = app.add_subcommand("intervals", "List level-k cells meeting [a, b]");
  intervals->add_option("--k", cfg.k, "Level");
  intervals->add_option("--budget", cfg.budget, "Per-coordinate index budget");
  intervals->add_option("--a", cfg.a, "Window left end");
  intervals->add_option("--b", cfg.b, "Window right end");
  common(intervals);

  auto* integrate = app.add_subcommand("integrate", "Cell enclosure of an integral");
  integrate->add_option("--fn", cfg.fn, "Fk (integral of f_k from -1 to x) or f (over [-1, 1])")
      ->check(CLI::IsMember({"Fk", "fk", "f"}));
  integrate->add_option("--k", cfg.k, "Level");
  integrate->add_option("--x", cfg.x, "Upper limit");
  integrate->add_option("--K", cfg.terms, "Number of series terms");
  integrate->add_option("--budget", cfg.budget, "Index budget");
  common(integrate);

  auto* verify = app.add_subcommand("verify", "Run a verification suite and print its report");
  verify->add_option("suite", cfg.suite, "Suite name")->required();
  verify->add_option("--seed", cfg.seed, "Random seed");
  verify->add_option("--k", cfg.k, "Level");
  verify->add_option("--K", cfg.terms, "Number of series terms");
  verify->add_option("--depth", cfg.depth, "Orbit depth limit");
  verify->add_option("--budget", cfg.budget, "Index budget");
  verify->add_option("--count", cfg.count, "Number of sampled cases");
  verify->add_option("--n-max", cfg.n_max, "Largest band index");
  verify->add_option("--delta", cfg.delta, "Neighbourhood radius");
  verify->add_option("--max-width", cfg.max_width, "Largest admissible enclosure width");
  verify->add_option("--out", cfg.out, "Write the report to this file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "nowhere: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    std::string data;
    bool passed = true;
    if (*eval) data = cmd_eval(cfg);
    else if (*sample) data = cmd_sample(cfg);
    else if (*intervals) data = cmd_intervals(cfg);
    else if (*integrate) data = cmd_integrate(cfg);
    else data = cmd_verify(cfg, *verify, passed);
    emit(data, cfg, out);
    if (!passed) {
      err << "nowhere: verification failed\n";
      return kExitFailed;
    }
    return kExitOk;
  } catch (const std::invalid_argument& e) {  // usage, parse and unknown-suite errors
    err << "nowhere: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "nowhere: " << e.what() << '\n';
  } catch (const WitnessError& e) {
    err << "nowhere: " << e.what() << '\n';
  }
  return kExitUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace nowhere::cli
