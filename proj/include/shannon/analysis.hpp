#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shannon/certificates.hpp"

namespace shannon {

enum class Status { certified_yes, certified_no, evidence, undecided };
const char* to_string(Status s);
std::optional<Status> parse_status(const std::string& text);

/// Three-valued answer. Certified statuses carry replayable certificates;
/// evidence carries the horizon data that suggested `value`.
struct Verdict {
  Status status = Status::undecided;
  std::string value;                       // e.g. "principal", "negative", "yes"
  std::vector<Certificate> certificates;
  std::vector<std::string> citations;
  std::string detail;

  bool certified() const {
    return status == Status::certified_yes || status == Status::certified_no;
  }
  bool yes() const { return status == Status::certified_yes; }
  bool no() const { return status == Status::certified_no; }
};

struct AnalysisOptions {
  std::size_t horizon = 500;
  std::size_t window = 50;
  std::size_t n_max = 10;
  std::vector<LinearForm> hints;
};

struct EpdReport {
  std::vector<Verdict> persisting;          // per slot: VariablePersists
  std::vector<Verdict> order_valuations;    // per frame j: OrderValuationContainsS
  Verdict all_refuted;                      // no V_j contains S, for every j
  std::string note;
};

struct Fact {
  std::string kind;
  std::string argument;                     // probe name, slot or frame; empty if none
  Verdict verdict;
};

struct InferenceEdge {
  std::string rule;
  std::string citation;
  std::vector<std::string> premises;        // fact labels
  std::string conclusion;
};

struct ClassificationReport {
  std::size_t horizon = 0;
  std::vector<Fact> facts;
  std::vector<InferenceEdge> edges;

  const Fact* find(const std::string& kind, const std::string& argument = "") const;
};

struct Probe {
  std::string name;
  LaurentMonomial monomial;

  bool operator==(const Probe&) const = default;
};

/// Facts about the Shannon extension S of one tower, each as a Verdict. The
/// tower is extended to the horizon on construction.
class ShannonAnalysis {
 public:
  ShannonAnalysis(Tower& tower, AnalysisOptions options);

  Tower& tower() { return tower_; }
  const AnalysisOptions& options() const { return options_; }
  /// Last frame index available within the horizon.
  std::size_t last_frame() const { return last_; }
  bool terminated() const { return tower_.status() != TowerStatus::active; }

  const std::optional<Certificate>& regime() const { return regime_; }
  const std::optional<Certificate>& recurrence() const { return recurrence_; }
  const std::optional<Certificate>& fates() const { return fates_; }
  /// True when every slot's fate is certified (then T membership is exact).
  bool fates_complete() const;

  Verdict tower_finite();
  Verdict tower_infinite();
  Verdict classify_maximal_ideal();
  Verdict archimedean_check();
  Verdict eventual_ord_sign(const LaurentMonomial& q);
  Verdict member_S(const LaurentMonomial& q);
  Verdict member_V(const LaurentMonomial& q);
  Verdict member_T(const LaurentMonomial& q);
  /// Candidate generator of an N-primary ideal with its verdict.
  std::pair<std::optional<LaurentMonomial>, Verdict> find_N_primary();
  Verdict variable_persists(std::size_t slot);
  Verdict order_valuation_contains_S(std::size_t j);
  EpdReport epd_report(std::size_t frames = 100);
  ClassificationReport classify_shannon(const std::vector<Probe>& probes = {});

 private:
  std::optional<Certificate> invariant_at_or_after(const LaurentMonomial& q);

  Tower& tower_;
  AnalysisOptions options_;
  std::size_t last_ = 0;
  std::optional<Certificate> regime_;
  std::optional<Certificate> recurrence_;
  std::optional<Certificate> fates_;
  std::optional<Certificate> independence_;
};

/// Pairs of certified facts that contradict each other, including per-probe
/// violations of S = V ∩ T. Empty when consistent.
std::vector<std::string> consistency_violations(const ClassificationReport& report);

}  // namespace shannon
