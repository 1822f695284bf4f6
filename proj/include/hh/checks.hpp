#pragma once
// Orchestration of the verification suite: named checks over a potential
// pair, structured reports, JSON serialisation, and the command-line driver.

#include <cstdint>
#include <string>
#include <vector>

#include "hh/geometry.hpp"
#include "hh/petrov.hpp"

namespace hh {

enum class CheckStatus { Pass, Fail };

struct CheckEntry {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string residual;  // canonical string of the measured quantity
  std::string note;      // explanation and carried data
};

struct CheckOptions {
  std::uint64_t seed = 0;  // drives numeric sample points
  int points = 5;          // numeric sample count (classification)
};

struct CheckReport {
  std::vector<CheckEntry> entries;
  std::uint64_t seed = 0;
  int points = 5;

  bool allPassed() const;
  const CheckEntry* find(const std::string& name) const;
};

// The full check vocabulary, in report order.
const std::vector<std::string>& allCheckNames();
// Everything except the numeric classification (the default keeps the report
// fully exact).
std::vector<std::string> defaultCheckSelection();
// Parses "all", "default", or a comma-separated list; throws
// std::invalid_argument on unknown names.
std::vector<std::string> parseCheckSelection(const std::string& text);

// Runs the selected checks in canonical order.
CheckReport runChecks(const PotentialPair& p, const std::vector<std::string>& selection,
                      const CheckOptions& options = {});

// Deterministic numeric sample points with coordinate moduli in [0.5, 2],
// redrawn while any guarded denominator comes within 1e-3 of zero.
std::vector<NumericPoint> drawSamplePoints(const PotentialPair& p, std::uint64_t seed,
                                           int count);

// Serialisation.  The JSON layout is frozen by a golden-file test.
std::string reportToJson(const CheckReport& report, const PotentialPair& p, bool pretty);
std::string reportToText(const CheckReport& report);

// Rejects expressions that use reserved generators (the spectral parameter,
// the linearisation parameter, or the series variable); `allowCoordinates`
// additionally rejects the base coordinates (for family scale parameters).
void validateUserExpression(const RationalExpr& e, const std::string& what,
                            bool allowCoordinates);

// Command-line driver behind the installed binary.  Exit codes: 0 all
// executed checks passed, 1 a check or verification failed, 2 usage or input
// parse error.
int cliMain(int argc, char** argv);

}  // namespace hh
