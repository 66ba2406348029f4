#include "nowhere/suites.hpp"

#include "nowhere/antiderivative.hpp"
#include "nowhere/cells.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace nowhere {

long SuiteReport::passed() const {
  return static_cast<long>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return c.passed(); }));
}

long SuiteReport::failed() const { return static_cast<long>(cases.size()) - passed(); }

RationalSampler::RationalSampler(std::uint64_t seed) : engine_(seed) {}

std::uint64_t RationalSampler::next() { return engine_(); }

long RationalSampler::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Rat RationalSampler::open_interval(const Rat& lo, const Rat& hi, long max_den) {
  if (!(lo < hi) || max_den < 2) throw std::invalid_argument("open_interval: empty range");
  // Guarantees that q = max_den admits a numerator.
  if ((hi - lo) * Rat(max_den) <= Rat(1)) throw std::invalid_argument("open_interval: range too narrow for max_den");
  for (;;) {
    const long q = uniform(2, max_den);
    const Rat rq(q);
    const long first = (lo * rq).floor().get_si() + 1;
    const long last = -((-(hi * rq)).floor().get_si()) - 1;  // ceil(hi q) - 1
    if (first <= last) return Rat(uniform(first, last), q);
  }
}

namespace {

constexpr long kMaxDen = 1000000;

template <typename T>
T pick(const std::optional<T>& value, T fallback) {
  return value ? *value : fallback;
}

SuiteReport start(std::string name, const SuiteConfig& config) {
  SuiteReport r;
  r.suite = std::move(name);
  r.seed = config.seed;
  return r;
}

SuiteReport structure_suite(const SuiteConfig& config) {
  SuiteReport r = start("structure", config);
  const int k = pick(config.k, 3);
  const long budget = pick(config.budget, 6L);
  r.parameters = {{"k", std::to_string(k)}, {"budget", std::to_string(budget)}};
  for (int level = 1; level <= k; ++level) r.cases.push_back(structure_check(level, budget));
  return r;
}

SuiteReport oscillation_suite(const SuiteConfig& config) {
  SuiteReport r = start("oscillation", config);
  const int k = pick(config.k, 6);
  const long budget = pick(config.budget, 50L);
  const Rat delta = pick(config.delta, Rat(1, 1000));
  r.parameters = {{"k", std::to_string(k)}, {"budget", std::to_string(budget)},
                  {"truncation", "hyperbolic"}, {"delta", delta.str()}};
  SearchOptions options;
  options.depth = std::max(pick(config.depth, 40), k);
  for (const auto& e : e_points(k, Window{}, IndexBudget{budget, Truncation::hyperbolic})) {
    r.cases.push_back(oscillation_witness(e.x, delta, options));
  }
  return r;
}

SuiteReport no_extrema_suite(const SuiteConfig& config) {
  SuiteReport r = start("no-extrema", config);
  const long count = pick(config.count, 200L);
  const int depth = pick(config.depth, 40);
  std::vector<Rat> deltas{Rat(1, 10), Rat(1, 100), Rat(1, 1000)};
  if (config.delta) deltas = {*config.delta};
  std::string listed;
  for (const auto& d : deltas) listed += (listed.empty() ? "" : ",") + d.str();
  r.parameters = {{"count", std::to_string(count)}, {"depth", std::to_string(depth)}, {"deltas", listed}};
  RationalSampler sampler(config.seed);
  for (long i = 0; i < count; ++i) {
    const Rat x0 = sampler.open_interval(Rat(-1), Rat(1), kMaxDen);
    for (const auto& d : deltas) r.cases.push_back(non_extremum_witness(x0, d, depth));
  }
  return r;
}

SuiteReport nowhere_monotone_suite(const SuiteConfig& config) {
  SuiteReport r = start("nowhere-monotone", config);
  const long count = pick(config.count, 100L);
  const int depth = pick(config.depth, 40);
  const Rat min_length(1, 1000);
  r.parameters = {{"count", std::to_string(count)}, {"depth", std::to_string(depth)},
                  {"min_length", min_length.str()}};
  RationalSampler sampler(config.seed);
  for (long i = 0; i < count; ++i) {
    // Lengths spread over several decades: scale 10^-3 .. 1.
    static constexpr long kDecades[] = {1, 10, 100, 1000};
    const Rat scale(1, kDecades[sampler.uniform(0, 3)]);
    Rat length = scale + sampler.open_interval(Rat(0), scale, kMaxDen);
    if (length > Rat(2) - min_length) length = scale;
    const Rat a = sampler.open_interval(Rat(-1), Rat(1) - length, kMaxDen);
    r.cases.push_back(non_monotone_witness(a, a + length, depth));
  }
  return r;
}

SuiteReport local_min_suite(const SuiteConfig& config) {
  SuiteReport r = start("local-min", config);
  const long count = pick(config.count, 100L);
  r.parameters = {{"count", std::to_string(count)}};
  RationalSampler sampler(config.seed);
  for (long i = 0; i < count; ++i) {
    r.cases.push_back(local_min_check(sampler.open_interval(Rat(0), Rat(1, 4), kMaxDen)));
  }
  return r;
}

SuiteReport quotient_bound_suite(const SuiteConfig& config) {
  SuiteReport r = start("quotient-bound", config);
  const int k_lo = config.k ? *config.k : 1;
  const int k_hi = config.k ? *config.k : 8;
  const long n_max = pick(config.n_max, 50L);
  const long random_per_band = pick(config.count, 2L);
  r.parameters = {{"k", config.k ? std::to_string(*config.k) : "1..8"},
                  {"n_max", std::to_string(n_max)},
                  {"random_per_band", std::to_string(random_per_band)}};
  RationalSampler sampler(config.seed);
  for (int k = k_lo; k <= k_hi; ++k) {
    for (long n = 2; n <= n_max; ++n) {
      const Rat lo = Rat(1) / Rat(n + 1) - Rat(1);
      const Rat hi = Rat(1) / Rat(n) - Rat(1);
      r.cases.push_back(quotient_bound_check(k, n, hi));
      r.cases.push_back(quotient_bound_check(k, n, (lo + hi) / Rat(2)));
      for (long i = 0; i < random_per_band; ++i) {
        r.cases.push_back(quotient_bound_check(k, n, sampler.open_interval(lo, hi, kMaxDen)));
      }
    }
  }
  return r;
}

SuiteReport integral_crosscheck_suite(const SuiteConfig& config) {
  SuiteReport r = start("integral-crosscheck", config);
  const int k_lo = config.k ? *config.k : 1;
  const int k_hi = config.k ? *config.k : 6;
  const long budget = pick(config.budget, 1L << 20);
  const long count = pick(config.count, 20L);
  const Rat max_width = pick(config.max_width, Rat::pow2(-12));
  r.parameters = {{"k", config.k ? std::to_string(*config.k) : "1..6"},
                  {"budget", std::to_string(budget)},
                  {"samples", std::to_string(count)},
                  {"max_width", max_width.str()}};
  RationalSampler sampler(config.seed);
  std::vector<Rat> xs{Rat(-1), Rat(0), Rat(1)};
  while (static_cast<long>(xs.size()) < count) xs.push_back(sampler.open_interval(Rat(-1), Rat(1), kMaxDen));
  xs.resize(static_cast<std::size_t>(std::max(count, 0L)));
  for (int k = k_lo; k <= k_hi; ++k) r.cases.push_back(integral_crosscheck(k, xs, budget, max_width));
  return r;
}

SuiteReport darboux_suite(const SuiteConfig& config) {
  SuiteReport r = start("darboux", config);
  const int terms = pick(config.terms, 10);
  const long budget = pick(config.budget, 60L);
  r.parameters = {{"K", std::to_string(terms)}, {"budget", std::to_string(budget)}};
  if (config.max_width) r.parameters["max_width"] = config.max_width->str();
  r.cases.push_back(darboux_check(terms, budget, config.max_width));
  return r;
}

using Runner = std::function<SuiteReport(const SuiteConfig&)>;

const std::vector<std::pair<std::string, Runner>>& runners() {
  static const std::vector<std::pair<std::string, Runner>> table{
      {"structure", structure_suite},
      {"oscillation", oscillation_suite},
      {"no-extrema", no_extrema_suite},
      {"nowhere-monotone", nowhere_monotone_suite},
      {"local-min", local_min_suite},
      {"quotient-bound", quotient_bound_suite},
      {"integral-crosscheck", integral_crosscheck_suite},
      {"darboux", darboux_suite},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, run] : runners()) out.push_back(name);
    out.emplace_back("all");
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  if (name == "all") {
    // Every suite with its own defaults; only the seed is shared.
    SuiteConfig shared;
    shared.seed = config.seed;
    SuiteReport all = start("all", config);
    for (const auto& [suite, run] : runners()) {
      SuiteReport part = run(shared);
      for (const auto& [key, value] : part.parameters) all.parameters[suite + "." + key] = value;
      for (auto& c : part.cases) {
        c.inputs["suite"] = suite;
        all.cases.push_back(std::move(c));
      }
    }
    return all;
  }
  for (const auto& [suite, run] : runners()) {
    if (suite == name) return run(config);
  }
  throw UnknownSuite("unknown suite: " + name);
}

}  // namespace nowhere
