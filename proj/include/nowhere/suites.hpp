#pragma once

/// @file suites.hpp
/// @brief Named verification suites over seeded or enumerated inputs, each
/// aggregating WitnessReports into one SuiteReport.

#include "nowhere/verifier.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace nowhere {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

class UnknownSuite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Suite knobs. Unset fields fall back to the suite's own default, and the
/// resolved values are recorded in SuiteReport::parameters.
struct SuiteConfig {
  std::uint64_t seed = kDefaultSeed;
  std::optional<int> k;
  std::optional<int> terms;
  std::optional<int> depth;
  std::optional<long> budget;
  std::optional<long> count;
  std::optional<long> n_max;
  std::optional<Rat> delta;
  std::optional<Rat> max_width;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  std::map<std::string, std::string> parameters;
  std::vector<WitnessReport> cases;

  long passed() const;
  long failed() const;
  bool all_passed() const { return failed() == 0; }
};

/// structure, oscillation, no-extrema, nowhere-monotone, local-min,
/// quotient-bound, integral-crosscheck, darboux, all.
const std::vector<std::string>& suite_names();

/// Throws UnknownSuite for a name outside suite_names().
SuiteReport run_suite(const std::string& name, const SuiteConfig& config = {});

/// Uniform rational in the open interval (lo, hi) with denominator at most
/// max_den, drawn from raw generator outputs so streams match across platforms.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  /// Random p/q with q in [2, max_den] and lo < p/q < hi; requires lo < hi.
  Rat open_interval(const Rat& lo, const Rat& hi, long max_den);

 private:
  std::mt19937_64 engine_;
};

}  // namespace nowhere
