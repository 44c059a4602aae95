// Acceptance criteria 1..12. One PASS/FAIL line per criterion, then the
// suite's own check lines.

#include "edgp/reproduce.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

constexpr double kRoundtripBudgetSeconds = 60.0;

bool run(int criterion, const edgp::reproduce::Options& options) {
  const std::string suite = edgp::reproduce::suite_for_criterion(criterion);
  const auto report = edgp::reproduce::run_suite(suite, options);
  bool pass = report.passed();
  std::string note;
  if (criterion == 1 && report.seconds >= kRoundtripBudgetSeconds) {
    pass = false;
    note = " (over the 60 s budget)";
  }
  std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " [" << suite << "]" << note << "\n";
  std::cout << edgp::reproduce::format_text(report) << std::flush;
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  edgp::reproduce::Options options;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (i + 1 >= argc) {
      std::cerr << "usage: edgp_acceptance [--criterion N] [--seed S] [--jobs J]\n";
      return 2;
    }
    const char* value = argv[++i];
    if (arg == "--criterion") only = std::atoi(value);
    else if (arg == "--seed") options.seed = std::strtoull(value, nullptr, 10);
    else if (arg == "--jobs") options.jobs = static_cast<unsigned>(std::atoi(value));
    else {
      std::cerr << "unknown option " << arg << "\n";
      return 2;
    }
  }
  try {
    bool all = true;
    for (int c = 1; c <= 12; ++c)
      if (only == 0 || only == c) all = run(c, options) && all;
    return all ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
