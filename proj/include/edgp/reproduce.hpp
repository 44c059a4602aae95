#pragma once

// Seeded acceptance suites shared by the CLI and the acceptance test binary.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace edgp::reproduce {

inline constexpr std::uint64_t kDefaultSeed = 1979;

struct Options {
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
  std::optional<unsigned> n;       // variable bound where a suite samples formulas
  std::optional<unsigned> m;       // clause bound
  std::optional<unsigned> trials;  // trial count override
};

struct Check {
  std::string name;
  bool pass = false;
  std::string measured;
  std::string expected;
  bool informational = false;  // printed, never fails the suite
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  std::vector<Check> checks;
  std::vector<std::string> details;
  double seconds = 0;  // wall time, text output only

  bool passed() const;
};

/// Names accepted by run_suite, "all" excluded.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument on an unknown suite. "thm-3sat" is an alias
/// of "roundtrip".
SuiteReport run_suite(const std::string& name, const Options& options);
std::vector<SuiteReport> run_all(const Options& options);

/// Suite behind acceptance criterion 1..12.
std::string suite_for_criterion(int criterion);

std::string format_text(const SuiteReport& report);

/// Independent stream per trial: seed_seq(seed, index).
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index);

}  // namespace edgp::reproduce
