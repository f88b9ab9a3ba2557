#include "shannon/analysis.hpp"

#include <algorithm>
#include <sstream>

namespace shannon {

const char* to_string(Status s) {
  switch (s) {
    case Status::certified_yes: return "certified_yes";
    case Status::certified_no: return "certified_no";
    case Status::evidence: return "evidence";
    case Status::undecided: return "undecided";
  }
  return "?";
}

std::optional<Status> parse_status(const std::string& text) {
  for (Status s : {Status::certified_yes, Status::certified_no, Status::evidence,
                   Status::undecided}) {
    if (text == to_string(s)) return s;
  }
  return std::nullopt;
}

const Fact* ClassificationReport::find(const std::string& kind,
                                       const std::string& argument) const {
  for (const auto& f : facts) {
    if (f.kind == kind && f.argument == argument) return &f;
  }
  return nullptr;
}

namespace {

Verdict certified(bool yes, std::string value, Certificate cert, std::string detail = {}) {
  Verdict v;
  v.status = yes ? Status::certified_yes : Status::certified_no;
  v.value = std::move(value);
  v.citations.push_back(cert.citation);
  v.certificates.push_back(std::move(cert));
  v.detail = std::move(detail);
  return v;
}

Verdict uncertified(Status status, std::string value, std::string detail) {
  Verdict v;
  v.status = status;
  v.value = std::move(value);
  v.detail = std::move(detail);
  return v;
}

void cite(Verdict& v, Anchor a) {
  std::string c = citation(a);
  if (std::find(v.citations.begin(), v.citations.end(), c) == v.citations.end()) {
    v.citations.push_back(std::move(c));
  }
}

void absorb(Verdict& into, const Verdict& from) {
  for (const auto& c : from.certificates) into.certificates.push_back(c);
  for (const auto& c : from.citations) {
    if (std::find(into.citations.begin(), into.citations.end(), c) == into.citations.end()) {
      into.citations.push_back(c);
    }
  }
}

const char* sign_name(int s) {
  return s > 0 ? "positive" : (s < 0 ? "negative" : "zero");
}

std::string label(const Fact& f) {
  std::string out = f.kind;
  if (!f.argument.empty()) out += "(" + f.argument + ")";
  return out + "=" + to_string(f.verdict.status) +
         (f.verdict.value.empty() ? "" : ":" + f.verdict.value);
}

bool contains_slot(const std::vector<std::size_t>& v, std::size_t s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

ShannonAnalysis::ShannonAnalysis(Tower& tower, AnalysisOptions options)
    : tower_(tower), options_(std::move(options)) {
  tower_.extend_to(options_.horizon);
  last_ = std::min(options_.horizon, tower_.size() - 1);
  independence_ = certify_rational_independence(tower_);
  if (terminated()) return;
  regime_ = discover_regime(tower_, last_, options_.hints);
  if (regime_ && regime_->scope <= last_) {
    recurrence_ = certify_recurrence(tower_, *regime_);
    fates_ = certify_slot_fates(tower_, *regime_, recurrence_);
  } else {
    regime_.reset();
  }
}

bool ShannonAnalysis::fates_complete() const {
  if (!fates_) return false;
  return std::none_of(fates_->fates.begin(), fates_->fates.end(),
                      [](const SlotFateEntry& e) { return e.fate == SlotFate::unknown; });
}

Verdict ShannonAnalysis::tower_infinite() {
  if (terminated()) {
    auto c = certify_tie(tower_);
    Verdict v = certified(false, "finite", std::move(*c));
    return v;
  }
  if (independence_) {
    return certified(true, "infinite", *independence_);
  }
  if (regime_ && regime_->slots.size() == 1) {
    return certified(true, "infinite", *regime_, "a single feasible center never ties");
  }
  return uncertified(Status::evidence, "infinite",
                     "no tie within " + std::to_string(last_) + " steps");
}

Verdict ShannonAnalysis::tower_finite() {
  Verdict inf = tower_infinite();
  Verdict v = inf;
  if (inf.status == Status::certified_no) {
    v.status = Status::certified_yes;
  } else if (inf.status == Status::certified_yes) {
    v.status = Status::certified_no;
  } else {
    v.status = Status::evidence;
  }
  v.value = inf.status == Status::certified_no ? "finite" : "infinite";
  if (terminated()) {
    const auto& tie = *tower_.tie();
    std::string slots;
    for (std::size_t s : tie.slots) {
      slots += (slots.empty() ? "" : ",") + variable_name(tower_.dimension(), s);
    }
    v.detail = "argmin tie at frame " + std::to_string(tie.frame) + " between {" + slots + "}";
  }
  return v;
}

Verdict ShannonAnalysis::classify_maximal_ideal() {
  if (terminated()) {
    return uncertified(Status::undecided, "tower_finite", "tower terminated; S is not defined");
  }
  if (regime_ && regime_->slots.size() == 1) {
    const std::size_t s = regime_->slots.front();
    LaurentMonomial gen = tower_.parameter(regime_->scope, s);
    Verdict v = certified(true, "principal", *regime_,
                          "N = " + gen.to_string() + " S, center slot " +
                              variable_name(tower_.dimension(), s) + " from frame " +
                              std::to_string(regime_->scope));
    cite(v, Anchor::principal_criterion);
    return v;
  }
  if (tower_.mode() == ValueMode::algebraic && independence_) {
    Verdict v = certified(true, "idempotent", *independence_,
                          "archimedean weights never fix the center, so N = N^2");
    cite(v, Anchor::principal_or_idempotent);
    return v;
  }
  const auto history = tower_.center_history(last_);
  const std::size_t w = std::min(options_.window, history.size());
  bool constant_tail = w > 0 && std::all_of(history.end() - static_cast<std::ptrdiff_t>(w),
                                            history.end(),
                                            [&](std::size_t c) { return c == history.back(); });
  std::ostringstream os;
  os << "last " << w << " centers " << (constant_tail ? "constant" : "vary");
  return uncertified(Status::evidence, constant_tail ? "principal" : "idempotent", os.str());
}

Verdict ShannonAnalysis::archimedean_check() {
  if (terminated()) {
    return uncertified(Status::undecided, "tower_finite", "tower terminated");
  }
  if (regime_ && regime_->slots.size() == 1) {
    const std::size_t s = regime_->slots.front();
    const std::size_t r = s == 0 ? 1 : 0;
    LaurentMonomial x = tower_.parameter(regime_->scope, s);
    LaurentMonomial y = tower_.parameter(regime_->scope, r);
    Verdict v = certified(true, "non_archimedean", *regime_,
                          y.to_string() + " / (" + x.to_string() + ")^n lies in R_(" +
                              std::to_string(regime_->scope) + "+n) for every n");
    cite(v, Anchor::archimedean_criterion);
    return v;
  }
  if (tower_.mode() == ValueMode::algebraic && independence_) {
    Verdict v = certified(true, "archimedean", *independence_,
                          "S is dominated by a rank one valuation ring");
    cite(v, Anchor::dvr_domination);
    cite(v, Anchor::archimedean_criterion);
    return v;
  }
  auto [candidate, quality] = find_N_primary();
  if (!candidate) {
    return uncertified(Status::undecided, "", "no N-primary candidate");
  }
  const Integer ox = tower_.ord(last_, *candidate);
  for (std::size_t s = 0; s < tower_.dimension(); ++s) {
    LaurentMonomial y{unit_vector(tower_.dimension(), s)};
    if (tower_.ord(last_, y) >= ox * Integer(options_.n_max)) {
      return uncertified(Status::evidence, "non_archimedean",
                         "ord_" + std::to_string(last_) + "(" + y.to_string() + ") >= " +
                             std::to_string(options_.n_max) + " ord(" + candidate->to_string() +
                             ")");
    }
  }
  return uncertified(Status::evidence, "archimedean",
                     "no variable reaches n_max times ord(" + candidate->to_string() + ")");
}

std::optional<Certificate> ShannonAnalysis::invariant_at_or_after(const LaurentMonomial& q) {
  if (!regime_) return std::nullopt;
  for (std::size_t i = regime_->scope; i <= last_; ++i) {
    if (auto c = verify_exponent_invariant(tower_, q, i, *regime_)) return c;
  }
  return std::nullopt;
}

Verdict ShannonAnalysis::eventual_ord_sign(const LaurentMonomial& q) {
  if (q.dimension() != tower_.dimension()) throw ValueError("probe dimension mismatch");
  if (q.is_one()) {
    Verdict v = certified(true, "zero", *certify_ring_membership(tower_, q, 0),
                          "ord of 1 is 0 at every frame");
    cite(v, Anchor::sign_trichotomy);
    return v;
  }
  if (regime_ && regime_->slots.size() == 1) {
    const std::size_t s = regime_->slots.front();
    ExponentVector u = tower_.frame_exponent(regime_->scope, q);
    Integer sigma = total_degree(u) - u[s];
    Certificate c;
    c.kind = CertificateKind::center_drift;
    c.scope = regime_->scope;
    c.citation = citation(Anchor::sign_trichotomy);
    c.monomial = q;
    c.exponent = u;
    c.witness_slot = s;
    c.premises.push_back(*regime_);
    c.claim = "ord_i = " + total_degree(u).get_str() + " + (i - " +
              std::to_string(regime_->scope) + ") * " + sigma.get_str();
    const int sign = sgn(sigma) != 0 ? sgn(sigma) : sgn(total_degree(u));
    return certified(true, sign_name(sign), std::move(c));
  }
  for (std::size_t i = 0; i <= last_; ++i) {
    if (auto c = certify_ring_membership(tower_, q, i)) {
      if (!c->strict) continue;
      const bool positive = c->kind == CertificateKind::ring_membership;
      return certified(true, positive ? "positive" : "negative", std::move(*c),
                       positive ? "q in m_i stays in every later m_j"
                                : "1/q in m_i stays in every later m_j");
    }
  }
  if (auto inv = invariant_at_or_after(q)) {
    const int sign = sgn(total_degree(inv->exponent));
    return certified(true, sign_name(sign), std::move(*inv));
  }
  if (last_ == 0) return uncertified(Status::undecided, "", "no frames beyond R_0");
  const std::size_t w = std::max<std::size_t>(1, std::min(options_.window, last_ + 1));
  const int tail = sgn(tower_.ord(last_, q));
  for (std::size_t i = last_ + 1 - w; i <= last_; ++i) {
    if (sgn(tower_.ord(i, q)) != tail) {
      return uncertified(Status::undecided, "", "signs vary within the last window");
    }
  }
  return uncertified(Status::evidence, sign_name(tail),
                     "constant sign over frames " + std::to_string(last_ + 1 - w) + ".." +
                         std::to_string(last_));
}

Verdict ShannonAnalysis::member_S(const LaurentMonomial& q) {
  if (q.dimension() != tower_.dimension()) throw ValueError("probe dimension mismatch");
  for (std::size_t i = 0; i <= last_; ++i) {
    if (tower_.member(i, q)) {
      auto c = certify_ring_membership(tower_, q, i);
      return certified(true, "yes", std::move(*c), "first in R_" + std::to_string(i));
    }
  }
  if (regime_) {
    const std::size_t i0 = regime_->scope;
    ExponentVector u = tower_.frame_exponent(i0, q);
    for (std::size_t t = 0; t < u.size(); ++t) {
      if (sgn(u[t]) < 0 && !contains_slot(regime_->slots, t)) {
        Certificate c;
        c.kind = CertificateKind::fixed_coordinate;
        c.scope = i0;
        c.citation = citation(Anchor::ring_union);
        c.monomial = q;
        c.exponent = u;
        c.witness_slot = t;
        c.premises.push_back(*regime_);
        c.claim = "coordinate " + variable_name(u.size(), t) + " of the frame exponent stays " +
                  u[t].get_str();
        return certified(false, "no", std::move(c), "negative coordinate that never moves");
      }
    }
    if (regime_->slots.size() == 1) {
      const std::size_t s = regime_->slots.front();
      Integer sigma = total_degree(u) - u[s];
      Certificate c;
      c.kind = CertificateKind::center_drift;
      c.scope = i0;
      c.citation = citation(Anchor::ring_union);
      c.monomial = q;
      c.exponent = u;
      c.witness_slot = s;
      c.premises.push_back(*regime_);
      if (sgn(sigma) <= 0) {
        c.claim = "center coordinate changes by " + sigma.get_str() + " per step from " +
                  u[s].get_str();
        return certified(false, "no", std::move(c), "center coordinate never becomes nonnegative");
      }
      // u_s grows by sigma per step; the first frame where it is >= 0.
      Integer steps = (-u[s] + sigma - 1) / sigma;
      const std::size_t cap = 4 * options_.horizon + 1000;
      if (steps.fits_ulong_p() && steps.get_ui() + i0 <= cap) {
        const std::size_t at = i0 + steps.get_ui();
        if (auto m = certify_ring_membership(tower_, q, at)) {
          return certified(true, "yes", std::move(*m), "enters at R_" + std::to_string(at));
        }
      }
    }
    if (auto inv = invariant_at_or_after(q)) {
      if (!is_nonnegative(inv->exponent)) {
        return certified(false, "no", std::move(*inv), "invariant exponent is not nonnegative");
      }
    }
  }
  Verdict sign = eventual_ord_sign(q);
  if (sign.certified() && sign.value == "negative") {
    Verdict v = uncertified(Status::certified_no, "no", "eventually negative ord, so q is not in V");
    absorb(v, sign);
    cite(v, Anchor::boundary_valuation);
    return v;
  }
  return uncertified(Status::undecided, "", "not in R_" + std::to_string(last_));
}

Verdict ShannonAnalysis::member_V(const LaurentMonomial& q) {
  for (std::size_t i = 0; i <= last_; ++i) {
    if (tower_.member(i, q)) {
      auto c = certify_ring_membership(tower_, q, i);
      Verdict v = certified(true, "yes", std::move(*c), "q in S, which V contains");
      cite(v, Anchor::boundary_valuation);
      return v;
    }
  }
  Verdict sign = eventual_ord_sign(q);
  Verdict v;
  v.value = sign.value.empty() ? "" : (sign.value == "negative" ? "no" : "yes");
  v.detail = "eventual ord sign " + (sign.value.empty() ? std::string("unknown") : sign.value);
  switch (sign.status) {
    case Status::certified_yes:
    case Status::certified_no:
      v.status = sign.value == "negative" ? Status::certified_no : Status::certified_yes;
      break;
    default:
      v.status = sign.status;
  }
  absorb(v, sign);
  if (v.certified()) cite(v, Anchor::boundary_valuation);
  return v;
}

Verdict ShannonAnalysis::member_T(const LaurentMonomial& q) {
  if (q.dimension() != tower_.dimension()) throw ValueError("probe dimension mismatch");
  if (q.is_one()) {
    return certified(true, "yes", *certify_ring_membership(tower_, q, 0), "1 lies in every ring");
  }
  if (terminated()) return uncertified(Status::undecided, "", "tower terminated");
  if (fates_complete()) {
    // T is the intersection of the essential valuation rings; on monomials
    // only the persisting variables and the surviving order valuations see q.
    for (std::size_t t = 0; t < fates_->fates.size(); ++t) {
      const auto& e = fates_->fates[t];
      if (e.fate == SlotFate::never_centered && sgn(q.exponents[t]) < 0) {
        Verdict v = certified(false, "no", *fates_,
                              "exponent of persisting variable " +
                                  variable_name(q.dimension(), t) + " is negative");
        cite(v, Anchor::noetherian_hull);
        return v;
      }
      if (e.fate == SlotFate::last_centered && sgn(tower_.ord(e.last_step, q)) < 0) {
        Verdict v = certified(false, "no", *fates_,
                              "ord_" + std::to_string(e.last_step) +
                                  " is negative and that order valuation ring contains S");
        cite(v, Anchor::noetherian_hull);
        return v;
      }
    }
    Verdict v = certified(true, "yes", *fates_, "nonnegative on every essential valuation");
    cite(v, Anchor::noetherian_hull);
    return v;
  }

  Verdict s = member_S(q);
  if (s.yes()) {
    Verdict v = s;
    v.detail = "q in S";
    cite(v, Anchor::noetherian_hull);
    return v;
  }
  if (regime_) {
    ExponentVector u = tower_.frame_exponent(regime_->scope, q);
    for (std::size_t t = 0; t < u.size(); ++t) {
      if (sgn(u[t]) < 0 && !contains_slot(regime_->slots, t)) {
        Certificate c;
        c.kind = CertificateKind::fixed_coordinate;
        c.scope = regime_->scope;
        c.citation = citation(Anchor::noetherian_hull);
        c.monomial = q;
        c.exponent = u;
        c.witness_slot = t;
        c.premises.push_back(*regime_);
        c.claim = "the valuation along parameter " + variable_name(u.size(), t) + " of R_" +
                  std::to_string(regime_->scope) + " contains S and gives " + u[t].get_str();
        return certified(false, "no", std::move(c));
      }
    }
  }
  auto [candidate, quality] = find_N_primary();
  if (candidate) {
    for (std::size_t n = 1; n <= last_; ++n) {
      LaurentMonomial shifted = q * candidate->pow(Integer(static_cast<unsigned long>(n)));
      if (tower_.member(last_, shifted)) {
        if (quality.yes()) {
          auto c = certify_ring_membership(tower_, shifted, last_);
          Verdict v = certified(true, "yes", std::move(*c),
                                "q * (" + candidate->to_string() + ")^" + std::to_string(n) +
                                    " in S");
          absorb(v, quality);
          cite(v, Anchor::noetherian_hull);
          return v;
        }
        return uncertified(Status::evidence, "yes",
                           "q * (" + candidate->to_string() + ")^" + std::to_string(n) +
                               " in S; candidate not certified");
      }
    }
  }
  return uncertified(Status::undecided, "", "no decision at the horizon");
}

std::pair<std::optional<LaurentMonomial>, Verdict> ShannonAnalysis::find_N_primary() {
  if (terminated()) {
    return {std::nullopt, uncertified(Status::undecided, "", "tower terminated")};
  }
  if (recurrence_) {
    const std::size_t i0 = regime_->scope;
    auto j = tower_.center(i0);
    LaurentMonomial x = tower_.parameter(i0, *j);
    Verdict v = certified(true, x.to_string(), *recurrence_,
                          "every feasible center recurs, so no order valuation ring from R_" +
                              std::to_string(i0) + " on contains S");
    cite(v, Anchor::n_primary_center);
    return {x, v};
  }
  auto j = tower_.center(last_);
  if (!j) return {std::nullopt, uncertified(Status::undecided, "", "no center at the horizon")};
  LaurentMonomial x = tower_.parameter(last_, *j);
  // Evidence: recent order valuation rings are refuted by witnesses, and x
  // avoids the primes of the persisting variables.
  const std::size_t w = std::min(options_.window, last_);
  for (std::size_t k = last_ - w; k + 1 < last_; ++k) {
    if (!certify_order_refutation(tower_, k, last_)) {
      return {x, uncertified(Status::undecided, x.to_string(),
                             "no witness against V_" + std::to_string(k))};
    }
  }
  if (fates_) {
    for (std::size_t t = 0; t < fates_->fates.size(); ++t) {
      if (fates_->fates[t].fate == SlotFate::never_centered && sgn(x.exponents[t]) != 0) {
        return {x, uncertified(Status::undecided, x.to_string(),
                               "candidate meets a persisting variable")};
      }
    }
  }
  return {x, uncertified(Status::evidence, x.to_string(),
                         "recent order valuation rings refuted within the horizon")};
}

Verdict ShannonAnalysis::variable_persists(std::size_t slot) {
  if (slot >= tower_.dimension()) throw ValueError("slot out of range");
  const auto history = tower_.center_history(last_);
  for (std::size_t k = 0; k < history.size(); ++k) {
    if (history[k] == slot) {
      auto c = certify_center_event(tower_, k, slot);
      Verdict v = certified(false, "no", std::move(*c),
                            "centered at step " + std::to_string(k));
      return v;
    }
  }
  if (terminated()) return uncertified(Status::undecided, "", "tower terminated");
  if (fates_ && fates_->fates[slot].fate == SlotFate::never_centered) {
    Verdict v = certified(true, "yes", *fates_, "slot excluded from every center from frame " +
                                                    std::to_string(fates_->scope));
    cite(v, Anchor::frak_ideals);
    return v;
  }
  if (fates_ && fates_->fates[slot].fate == SlotFate::recurring) {
    Verdict v = certified(false, "no", *fates_, "slot recurs as a center");
    return v;
  }
  return uncertified(Status::evidence, "yes",
                     "never centered within " + std::to_string(last_) + " steps");
}

Verdict ShannonAnalysis::order_valuation_contains_S(std::size_t j) {
  if (terminated()) return uncertified(Status::undecided, "", "tower terminated");
  if (j >= last_) return uncertified(Status::undecided, "", "frame beyond the horizon");
  if (auto c = certify_order_refutation(tower_, j, last_)) {
    return certified(false, "no", std::move(*c));
  }
  if (fates_) {
    const std::size_t s = *tower_.center(j);
    const auto& e = fates_->fates[s];
    if (e.fate == SlotFate::last_centered && e.last_step == j) {
      Verdict v = certified(true, "yes", *fates_,
                            "center slot of step " + std::to_string(j) + " is never centered again");
      cite(v, Anchor::order_valuation_bound);
      return v;
    }
    if (e.fate == SlotFate::recurring) {
      Verdict v = certified(false, "no", *fates_, "center slot recurs, re-centering refutes V_j");
      cite(v, Anchor::order_valuation_bound);
      return v;
    }
  }
  return uncertified(Status::evidence, "yes", "no refuting parameter within the horizon");
}

EpdReport ShannonAnalysis::epd_report(std::size_t frames) {
  EpdReport r;
  for (std::size_t t = 0; t < tower_.dimension(); ++t) r.persisting.push_back(variable_persists(t));
  if (!terminated()) {
    const std::size_t n = std::min(frames, last_);
    for (std::size_t j = 0; j < n; ++j) r.order_valuations.push_back(order_valuation_contains_S(j));
  }
  if (fates_complete()) {
    bool any_kept = false;
    for (const auto& e : fates_->fates) any_kept = any_kept || e.fate == SlotFate::last_centered;
    r.all_refuted = certified(!any_kept, any_kept ? "no" : "yes", *fates_);
    cite(r.all_refuted, Anchor::order_valuation_bound);
  } else {
    bool all = std::all_of(r.order_valuations.begin(), r.order_valuations.end(),
                           [](const Verdict& v) { return v.no(); });
    r.all_refuted = uncertified(all ? Status::evidence : Status::undecided, all ? "yes" : "",
                                "witness search over the listed frames");
  }
  r.note =
      "lower bound: lists monomial height-one primes and order valuation rings only; "
      "non-monomial primes are not visible to the engine";
  return r;
}

ClassificationReport ShannonAnalysis::classify_shannon(const std::vector<Probe>& probes) {
  ClassificationReport rep;
  rep.horizon = options_.horizon;
  auto add = [&](std::string kind, std::string arg, Verdict v) -> const Fact& {
    rep.facts.push_back(Fact{std::move(kind), std::move(arg), std::move(v)});
    return rep.facts.back();
  };
  auto edge = [&](std::string rule, Anchor a, std::vector<std::string> premises,
                  std::string conclusion) {
    rep.edges.push_back(InferenceEdge{std::move(rule), citation(a), std::move(premises),
                                      std::move(conclusion)});
  };
  const std::size_t d = tower_.dimension();

  Verdict finite = tower_finite();
  add("TowerFinite", "", finite);
  if (terminated()) {
    edge("R2", Anchor::finite_sequence, {label(rep.facts.back())},
         "TowerFinite: no further classification");
    return rep;
  }

  Verdict mi = classify_maximal_ideal();
  Verdict principal = mi;
  Verdict idempotent = mi;
  if (mi.certified()) {
    const bool is_principal = mi.value == "principal";
    principal.status = is_principal ? Status::certified_yes : Status::certified_no;
    idempotent.status = is_principal ? Status::certified_no : Status::certified_yes;
    cite(principal, Anchor::principal_or_idempotent);
    cite(idempotent, Anchor::principal_or_idempotent);
  }
  const Fact np = add("NPrincipal", "", principal);
  const Fact ni = add("NIdempotent", "", idempotent);

  Verdict arch = archimedean_check();
  Verdict archimedean = arch;
  Verdict non_archimedean = arch;
  if (arch.certified()) {
    const bool is_arch = arch.value == "archimedean";
    archimedean.status = is_arch ? Status::certified_yes : Status::certified_no;
    non_archimedean.status = is_arch ? Status::certified_no : Status::certified_yes;
  }
  add("Archimedean", "", archimedean);
  const Fact na = add("NonArchimedean", "", non_archimedean);

  auto [candidate, primary] = find_N_primary();
  add("NPrimary", candidate ? candidate->to_string() : "", primary);

  EpdReport epd = epd_report(std::min<std::size_t>(20, last_));
  for (std::size_t t = 0; t < d; ++t) add("VariablePersists", variable_name(d, t), epd.persisting[t]);
  for (std::size_t j = 0; j < epd.order_valuations.size(); ++j) {
    add("OrderValuationContainsS", std::to_string(j), epd.order_valuations[j]);
  }
  add("EveryOrderValuationRefuted", "", epd.all_refuted);

  struct ProbeFacts {
    std::string name;
    LaurentMonomial q;
    Verdict in_s, in_v, in_t, sign;
  };
  std::vector<ProbeFacts> probe_facts;
  for (const auto& p : probes) {
    ProbeFacts pf{p.name, p.monomial, member_S(p.monomial), member_V(p.monomial),
                  member_T(p.monomial), eventual_ord_sign(p.monomial)};
    add("InS", p.name, pf.in_s);
    add("InV", p.name, pf.in_v);
    add("InT", p.name, pf.in_t);
    add("OrdSign", p.name, pf.sign);
    probe_facts.push_back(std::move(pf));
  }

  // R1: a Shannon extension of a two-dimensional regular local ring is a
  // valuation ring.
  Verdict is_valuation = uncertified(Status::undecided, "", "no rule applies");
  Verdict infinite = tower_infinite();
  if (d == 2) {
    if (infinite.yes()) {
      is_valuation = uncertified(Status::certified_yes, "yes", "dimension two, infinite sequence");
      absorb(is_valuation, infinite);
      cite(is_valuation, Anchor::dimension_two);
      edge("R1", Anchor::dimension_two, {"dimension=2", "TowerInfinite=certified_yes"},
           "IsValuation=certified_yes");
    } else {
      is_valuation = uncertified(Status::evidence, "yes", "dimension two; tower not yet certified");
    }
  }

  // R3 / R4 candidates: probes, variable ratios, monomials of regime forms.
  std::vector<Probe> candidates = probes;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      if (a == b) continue;
      ExponentVector e(d, Integer(0));
      e[a] = 1;
      e[b] = -1;
      LaurentMonomial q{e};
      candidates.push_back(Probe{q.to_string(), q});
    }
  }
  std::vector<LinearForm> forms = options_.hints;
  if (regime_) forms.insert(forms.end(), regime_->forms.begin(), regime_->forms.end());
  for (const auto& f : forms) {
    if (f.size() != d) continue;
    LaurentMonomial q{f};
    candidates.push_back(Probe{q.to_string(), q});
  }

  Verdict not_valuation = uncertified(Status::undecided, "", "no witness found");
  for (const auto& c : candidates) {
    Verdict a = member_S(c.monomial);
    if (!a.no()) continue;
    Verdict b = member_S(c.monomial.inverse());
    if (!b.no()) continue;
    not_valuation = uncertified(Status::certified_yes, "yes",
                                "neither " + c.monomial.to_string() + " nor its inverse lies in S");
    absorb(not_valuation, a);
    absorb(not_valuation, b);
    cite(not_valuation, Anchor::nonvaluation_witness);
    edge("R3", Anchor::nonvaluation_witness,
         {"InS(" + c.monomial.to_string() + ")=certified_no",
          "InS(" + c.monomial.inverse().to_string() + ")=certified_no"},
         "NotValuation=certified_yes");
    break;
  }
  // R4 runs even after R3 so both derivations are on record.
  if (idempotent.yes()) {
    for (const auto& c : candidates) {
      Verdict ins = member_S(c.monomial);
      if (!ins.no()) continue;
      Verdict int_ = member_T(c.monomial);
      if (!int_.yes()) continue;
      auto inv = invariant_at_or_after(c.monomial);
      if (!inv) continue;
      Verdict r4 = uncertified(Status::certified_yes, "yes",
                               c.monomial.to_string() +
                                   " lies in (N : N) but not in S, and N = N^2");
      absorb(r4, ins);
      absorb(r4, int_);
      r4.certificates.push_back(*inv);
      cite(r4, Anchor::colon_ring);
      cite(r4, Anchor::decomposition);
      if (not_valuation.yes()) {
        absorb(not_valuation, r4);
        not_valuation.detail += "; " + r4.detail;
      } else {
        not_valuation = std::move(r4);
      }
      edge("R4", Anchor::colon_ring,
           {label(ni), "InS(" + c.monomial.to_string() + ")=certified_no",
            "InT(" + c.monomial.to_string() + ")=certified_yes",
            "ord(" + c.monomial.to_string() + ") fixed at " +
                total_degree(inv->exponent).get_str()},
           "NotValuation=certified_yes");
      break;
    }
  }
  if (not_valuation.yes()) {
    Verdict dual = not_valuation;
    dual.status = Status::certified_no;
    dual.value = "no";
    is_valuation = dual;
  } else if (is_valuation.yes()) {
    not_valuation = is_valuation;
    not_valuation.status = Status::certified_no;
    not_valuation.value = "no";
  }
  add("IsValuation", "", is_valuation);
  const Fact nv = add("NotValuation", "", not_valuation);

  Verdict is_dvr = uncertified(Status::undecided, "", "no rule applies");
  if (idempotent.yes()) {
    is_dvr = uncertified(Status::certified_no, "no", "a DVR has a principal maximal ideal");
    cite(is_dvr, Anchor::principal_or_idempotent);
    edge("DVR-idempotent", Anchor::principal_or_idempotent, {label(ni)}, "IsDVR=certified_no");
  } else if (not_valuation.yes()) {
    is_dvr = uncertified(Status::certified_no, "no", "not a valuation ring");
    cite(is_dvr, Anchor::dvr_criterion);
    edge("DVR-nonvaluation", Anchor::dvr_criterion, {label(nv)}, "IsDVR=certified_no");
  } else if (principal.yes() && non_archimedean.yes()) {
    is_dvr = uncertified(Status::certified_no, "no", "not dominated by a rank one valuation ring");
    cite(is_dvr, Anchor::dvr_criterion);
    edge("R5", Anchor::dvr_criterion, {label(np), label(na)}, "IsDVR=certified_no");
  }
  add("IsDVR", "", is_dvr);
  return rep;
}

std::vector<std::string> consistency_violations(const ClassificationReport& report) {
  std::vector<std::string> out;
  auto yes = [&](const std::string& kind, const std::string& arg = "") {
    const Fact* f = report.find(kind, arg);
    return f && f->verdict.status == Status::certified_yes;
  };
  auto no = [&](const std::string& kind, const std::string& arg = "") {
    const Fact* f = report.find(kind, arg);
    return f && f->verdict.status == Status::certified_no;
  };
  auto exclusive = [&](const std::string& a, const std::string& b) {
    if (yes(a) && yes(b)) out.push_back(a + " and " + b + " both certified");
  };
  exclusive("NPrincipal", "NIdempotent");
  exclusive("Archimedean", "NonArchimedean");
  exclusive("IsValuation", "NotValuation");
  exclusive("IsDVR", "NIdempotent");
  exclusive("IsDVR", "NotValuation");
  for (const auto& f : report.facts) {
    if (f.kind != "InS") continue;
    const std::string& p = f.argument;
    if (yes("InS", p) && (no("InV", p) || no("InT", p))) {
      out.push_back("probe " + p + ": in S but certified outside V or T");
    }
    if (no("InS", p) && yes("InV", p) && yes("InT", p)) {
      out.push_back("probe " + p + ": in V and T but certified outside S");
    }
  }
  return out;
}

}  // namespace shannon
