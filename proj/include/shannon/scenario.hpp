#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shannon/analysis.hpp"

namespace shannon {

/// Largest horizon a scenario may request.
inline constexpr std::size_t kHorizonCap = 200000;

/// Invalid scenario text. Carries every validation error found.
class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

/// Requested work exceeds the engine's step limit.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Assertion {
  std::string fact;
  std::optional<std::string> probe;
  std::optional<std::size_t> slot;
  std::optional<std::size_t> frame;
  std::optional<std::size_t> upto;      // OrderValuationContainsS over frames 0..upto
  Status expect = Status::certified_yes;
  std::optional<std::string> value;
  std::optional<std::string> via;       // inference rule that must produce the fact

  bool operator==(const Assertion&) const = default;
};

/// Fact names accepted in assertions.
const std::vector<std::string>& assertion_facts();

struct Scenario {
  std::string name;
  std::size_t dimension = 0;
  ValueMode mode = ValueMode::lex;
  std::size_t lex_length = 0;
  std::vector<std::uint64_t> basis;
  std::vector<std::vector<Rational>> weights;
  std::size_t horizon = 500;
  std::size_t window = 50;
  std::size_t n_max = 10;
  std::vector<LinearForm> hints;
  std::vector<Probe> probes;
  std::vector<Assertion> assertions;
  bool undecided_ok = false;

  bool operator==(const Scenario&) const = default;

  std::vector<WeightValue> weight_values() const;
  const Probe* probe(const std::string& name) const;
};

/// Parses and validates; throws ScenarioError listing all problems.
Scenario parse_scenario(const std::string& text);
/// Canonical JSON text; parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& s);

enum class Outcome { pass, fail, undecided };
const char* to_string(Outcome o);

struct AssertionResult {
  Assertion assertion;
  std::string label;
  Verdict verdict;
  Outcome outcome = Outcome::undecided;
  std::string message;
};

struct TowerSummary {
  std::size_t dimension = 0;
  ValueMode mode = ValueMode::lex;
  TowerStatus status = TowerStatus::active;
  std::size_t frames = 0;
  std::optional<TieInfo> tie;
  std::vector<std::size_t> centers;     // first centers, for orientation
};

struct RunOptions {
  std::optional<std::size_t> horizon;
  bool undecided_ok = false;
};

struct RunReport {
  std::string scenario;
  std::size_t horizon = 0;
  TowerSummary tower;
  std::optional<Certificate> regime;
  ClassificationReport classification;
  std::vector<AssertionResult> assertions;
  std::vector<std::string> violations;
  bool undecided_ok = false;

  std::size_t count(Outcome o) const;
  /// 0 all pass, 1 some failure, 2 some undecided (unless allowed).
  int exit_code() const;
};

/// Throws ResourceCapError when the horizon exceeds kHorizonCap.
RunReport run_scenario(const Scenario& s, const RunOptions& options = {});

struct TraceRow {
  std::size_t frame = 0;
  std::optional<std::size_t> center;
  std::vector<WeightValue> weights;
  std::vector<LaurentMonomial> params;
  std::vector<Integer> probe_ords;
};

struct Trace {
  std::vector<std::string> probe_names;
  std::vector<TraceRow> rows;
  std::optional<TieInfo> tie;
};

/// Frames 0..steps (fewer when the tower terminates).
Trace trace(const Scenario& s, std::size_t steps);

}  // namespace shannon
