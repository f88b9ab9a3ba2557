#include "shannon/certificates.hpp"

#include <algorithm>
#include <set>

namespace shannon {

const char* citation(Anchor a) {
  switch (a) {
    case Anchor::quadratic_transform: return "transform-formula";
    case Anchor::transform_laws: return "transform-laws";
    case Anchor::frak_ideals: return "frak-ideals";
    case Anchor::order_valuation_bound: return "order-valuation-bound";
    case Anchor::principal_criterion: return "principal-maximal-ideal";
    case Anchor::principal_or_idempotent: return "principal-or-idempotent";
    case Anchor::n_primary_center: return "n-primary-center";
    case Anchor::dvr_criterion: return "dvr-criterion";
    case Anchor::noetherian_hull: return "noetherian-hull";
    case Anchor::hull_units: return "hull-units";
    case Anchor::sign_trichotomy: return "ord-sign-trichotomy";
    case Anchor::boundary_valuation: return "boundary-valuation";
    case Anchor::decomposition: return "intersection-decomposition";
    case Anchor::archimedean_criterion: return "archimedean-criterion";
    case Anchor::colon_ring: return "colon-ring";
    case Anchor::dimension_two: return "dimension-two-valuation";
    case Anchor::dvr_domination: return "rank-one-domination";
    case Anchor::nonvaluation_witness: return "nonvaluation-witness";
    case Anchor::finite_sequence: return "finite-sequence";
    case Anchor::linear_independence: return "linear-independence";
    case Anchor::invariant_forms: return "invariant-forms";
    case Anchor::exponent_invariance: return "exponent-invariance";
    case Anchor::ring_union: return "ring-union";
  }
  return "?";
}

const std::vector<std::string>& known_citations() {
  static const std::vector<std::string> all = [] {
    std::vector<std::string> out;
    for (int a = 0; a <= static_cast<int>(Anchor::ring_union); ++a) {
      out.emplace_back(citation(static_cast<Anchor>(a)));
    }
    return out;
  }();
  return all;
}

const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::constant_center: return "constant_center";
    case CertificateKind::form_preservation: return "form_preservation";
    case CertificateKind::recurrence: return "recurrence";
    case CertificateKind::exponent_invariant: return "exponent_invariant";
    case CertificateKind::center_drift: return "center_drift";
    case CertificateKind::fixed_coordinate: return "fixed_coordinate";
    case CertificateKind::ring_membership: return "ring_membership";
    case CertificateKind::inverse_membership: return "inverse_membership";
    case CertificateKind::order_refutation: return "order_refutation";
    case CertificateKind::rational_independence: return "rational_independence";
    case CertificateKind::slot_fates: return "slot_fates";
    case CertificateKind::center_event: return "center_event";
    case CertificateKind::tie_termination: return "tie_termination";
  }
  return "?";
}

const char* to_string(SlotFate f) {
  switch (f) {
    case SlotFate::never_centered: return "never_centered";
    case SlotFate::last_centered: return "last_centered";
    case SlotFate::recurring: return "recurring";
    case SlotFate::unknown: return "unknown";
  }
  return "?";
}

// ------------------------------------------------------------------ forms

LinearForm transported_form(const LinearForm& form, std::size_t slot) {
  // After a step centered at s, w'_k = w_k - w_s for k != s, so
  // L . w' = sum_{k != s} L_k w_k + (L_s - sum_{k != s} L_k) w_s.
  LinearForm out = form;
  Integer rest = 0;
  for (std::size_t k = 0; k < form.size(); ++k) {
    if (k != slot) rest += form[k];
  }
  out.at(slot) = form[slot] - rest;
  return out;
}

WeightValue evaluate_form(const LinearForm& form, const std::vector<WeightValue>& weights) {
  return linear_combine(form, weights);
}

std::vector<LinearForm> default_forms(std::size_t d) {
  std::vector<LinearForm> out;
  for (std::size_t s = 0; s < d; ++s) {
    LinearForm f(d, Integer(-1));
    f[s] = 1;
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

RationalVector to_rational(const LinearForm& f) {
  return RationalVector(f.begin(), f.end());
}

RationalVector unit(std::size_t d, std::size_t k) {
  RationalVector v(d, Rational(0));
  v[k] = 1;
  return v;
}

// forms, then coordinate forms.
std::vector<RationalVector> base_generators(std::size_t d, const std::vector<LinearForm>& forms) {
  std::vector<RationalVector> g;
  for (const auto& f : forms) g.push_back(to_rational(f));
  for (std::size_t k = 0; k < d; ++k) g.push_back(unit(d, k));
  return g;
}

// base generators, then gaps w_k - w_slot (k != slot) that hold when slot is the argmin.
std::vector<RationalVector> closure_generators(std::size_t d, const std::vector<LinearForm>& forms,
                                               std::size_t slot) {
  auto g = base_generators(d, forms);
  for (std::size_t k = 0; k < d; ++k) {
    if (k == slot) continue;
    RationalVector gap(d, Rational(0));
    gap[k] = 1;
    gap[slot] = -1;
    g.push_back(std::move(gap));
  }
  return g;
}

RationalVector exclusion_target(std::size_t d, std::size_t slot, std::size_t below) {
  RationalVector t(d, Rational(0));
  t[slot] = 1;
  t[below] = -1;
  return t;
}

bool valid_form(const LinearForm& f, std::size_t d) {
  return f.size() == d &&
         std::any_of(f.begin(), f.end(), [](const Integer& c) { return sgn(c) != 0; });
}

bool block_order_holds(Tower& tower, std::size_t scope, const LinearForm& form,
                       std::size_t slot) {
  if (tower.mode() != ValueMode::lex) return false;
  const auto& w = tower.frame(scope).weights;
  Integer sigma = 0;
  for (std::size_t k = 0; k < form.size(); ++k) {
    if (k != slot) sigma += form[k];
  }
  if (sgn(sigma) <= 0) return false;
  WeightValue value = evaluate_form(form, w);
  return value.is_positive() && is_infinitesimal(w[slot], value);
}

std::string slot_name(const Tower& tower, std::size_t s) {
  return variable_name(tower.dimension(), s);
}

}  // namespace

FeasibleCenters feasible_centers(std::size_t d, const std::vector<LinearForm>& forms) {
  return feasible_centers(d, forms, nullptr);
}

FeasibleCenters feasible_centers(std::size_t d, const std::vector<LinearForm>& forms,
                                 const Certificate* constant_center) {
  FeasibleCenters out;
  if (constant_center) {
    out.slots = constant_center->slots;
    return out;
  }
  const auto gens = base_generators(d, forms);
  for (std::size_t s = 0; s < d; ++s) {
    bool excluded = false;
    if (!forms.empty()) {
      for (std::size_t k = 0; k < d && !excluded; ++k) {
        if (k == s) continue;
        // Any positive combination has a positive coordinate or form part, so
        // w_s - w_k is then strictly positive.
        if (auto lambda = cone_combination(gens, exclusion_target(d, s, k))) {
          out.exclusions.push_back(SlotExclusion{s, k, *lambda});
          excluded = true;
        }
      }
    }
    if (!excluded) out.slots.push_back(s);
  }
  return out;
}

std::optional<Certificate> certify_constant_center(Tower& tower, std::size_t i) {
  if (!tower.extend_to(i)) return std::nullopt;
  const auto& w = tower.frame(i).weights;
  auto mins = argmin_slots(w);
  if (mins.size() != 1) return std::nullopt;
  const std::size_t j = mins.front();
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k != j && !is_infinitesimal(w[j], w[k])) return std::nullopt;
  }
  Certificate c;
  c.kind = CertificateKind::constant_center;
  c.scope = i;
  c.citation = citation(Anchor::principal_criterion);
  c.slots = {j};
  c.claim = "center is slot " + slot_name(tower, j) + " at every frame >= " + std::to_string(i);
  return c;
}

CertifyResult check_form_preservation(Tower& tower, std::size_t i0,
                                      const std::vector<LinearForm>& forms,
                                      const Certificate* constant_center) {
  CertifyResult result;
  const std::size_t d = tower.dimension();
  if (!tower.extend_to(i0)) {
    result.failure = "frame " + std::to_string(i0) + " does not exist";
    return result;
  }
  const auto& w = tower.frame(i0).weights;
  for (std::size_t f = 0; f < forms.size(); ++f) {
    if (!valid_form(forms[f], d)) {
      result.failure = "form " + std::to_string(f) + " has wrong length or is zero";
      return result;
    }
    if (!evaluate_form(forms[f], w).is_positive()) {
      result.failure = "form " + std::to_string(f) + " is not positive at frame " +
                       std::to_string(i0);
      return result;
    }
  }
  if (constant_center && constant_center->scope > i0) {
    result.failure = "constant-center premise starts after frame " + std::to_string(i0);
    return result;
  }

  FeasibleCenters feasible = feasible_centers(d, forms, constant_center);
  Certificate c;
  c.kind = CertificateKind::form_preservation;
  c.scope = i0;
  c.citation = citation(Anchor::invariant_forms);
  c.forms = forms;
  c.slots = feasible.slots;
  c.exclusions = feasible.exclusions;
  for (std::size_t s : feasible.slots) {
    const auto gens = closure_generators(d, forms, s);
    for (std::size_t f = 0; f < forms.size(); ++f) {
      LinearForm moved = transported_form(forms[f], s);
      if (auto lambda = cone_combination(gens, to_rational(moved))) {
        c.closures.push_back(SlotClosure{f, s, ClosureKind::cone, *lambda});
      } else if (feasible.slots.size() == 1 && block_order_holds(tower, i0, forms[f], s)) {
        c.closures.push_back(SlotClosure{f, s, ClosureKind::block_order, {}});
      } else {
        result.failure = "form " + std::to_string(f) + " not preserved by a step centered at " +
                         slot_name(tower, s);
        result.offending_slot = s;
        return result;
      }
    }
  }
  if (constant_center) c.premises.push_back(*constant_center);
  std::string names;
  for (std::size_t s : c.slots) names += (names.empty() ? "" : ",") + slot_name(tower, s);
  c.claim = std::to_string(forms.size()) + " form(s) positive and centers in {" + names +
            "} at every frame >= " + std::to_string(i0);
  result.certificate = std::move(c);
  return result;
}

CertifyResult prune_forms(Tower& tower, std::size_t i0, const std::vector<LinearForm>& candidates,
                          const Certificate* constant_center) {
  const std::size_t d = tower.dimension();
  std::vector<LinearForm> forms;
  if (tower.extend_to(i0)) {
    const auto& w = tower.frame(i0).weights;
    for (const auto& f : candidates) {
      if (!valid_form(f, d) || std::find(forms.begin(), forms.end(), f) != forms.end()) continue;
      if (evaluate_form(f, w).is_positive()) forms.push_back(f);
    }
  }
  // Greatest fixpoint: drop forms whose closure fails until the rest certify.
  // Dropping a form can widen the feasible set, hence the outer loop.
  for (;;) {
    CertifyResult r = check_form_preservation(tower, i0, forms, constant_center);
    if (r || forms.empty()) return r;
    if (!r.offending_slot) return r;
    const std::size_t s = *r.offending_slot;
    const auto feasible = feasible_centers(d, forms, constant_center);
    bool dropped = false;
    for (std::size_t f = 0; f < forms.size(); ++f) {
      const auto gens = closure_generators(d, forms, s);
      bool ok = cone_combination(gens, to_rational(transported_form(forms[f], s))).has_value() ||
                (feasible.slots.size() == 1 && block_order_holds(tower, i0, forms[f], s));
      if (!ok) {
        forms.erase(forms.begin() + static_cast<std::ptrdiff_t>(f));
        dropped = true;
        break;
      }
    }
    if (!dropped) return r;
  }
}

std::optional<Certificate> discover_regime(Tower& tower, std::size_t horizon,
                                           const std::vector<LinearForm>& hints) {
  const std::size_t d = tower.dimension();
  tower.extend_to(horizon);
  const std::size_t last = std::min(horizon, tower.size() - 1);

  std::vector<LinearForm> candidates = hints;
  for (auto& f : default_forms(d)) candidates.push_back(std::move(f));

  if (tower.mode() == ValueMode::lex) {
    for (std::size_t i = 0; i <= last; ++i) {
      if (auto cc = certify_constant_center(tower, i)) {
        // Keep verified hints alongside the constant center when they close.
        std::vector<LinearForm> valid_hints;
        for (const auto& h : hints) {
          if (valid_form(h, d)) valid_hints.push_back(h);
        }
        if (!valid_hints.empty()) {
          CertifyResult r = prune_forms(tower, i, valid_hints, &*cc);
          if (r && !r.certificate->forms.empty()) return r.certificate;
        }
        return cc;
      }
    }
  }

  std::optional<Certificate> best;
  const std::size_t search = std::min<std::size_t>(last, 24);
  for (std::size_t i0 = 0; i0 <= search; ++i0) {
    CertifyResult r = prune_forms(tower, i0, candidates);
    if (!r || r.certificate->forms.empty()) continue;
    if (!best || r.certificate->slots.size() < best->slots.size()) best = r.certificate;
    if (best->slots.size() == 1) break;
  }
  if (best && best->slots.size() < d) return best;

  // Vacuous regime: every slot feasible, nothing to prove.
  Certificate c;
  c.kind = CertificateKind::form_preservation;
  c.scope = 0;
  c.citation = citation(Anchor::invariant_forms);
  for (std::size_t s = 0; s < d; ++s) c.slots.push_back(s);
  c.claim = "no invariant forms; every slot feasible";
  return c;
}

std::optional<Certificate> verify_exponent_invariant(Tower& tower, const LaurentMonomial& q,
                                                     std::size_t i0, const Certificate& regime) {
  if (i0 < regime.scope || !tower.extend_to(i0)) return std::nullopt;
  ExponentVector u = tower.frame_exponent(i0, q);
  const Integer total = total_degree(u);
  for (std::size_t j : regime.slots) {
    if (u[j] != total) return std::nullopt;
  }
  Certificate c;
  c.kind = CertificateKind::exponent_invariant;
  c.scope = i0;
  c.citation = citation(Anchor::exponent_invariance);
  c.monomial = q;
  c.exponent = u;
  c.premises.push_back(regime);
  c.claim = "frame exponent of " + q.to_string() + " is " + to_string(u) +
            " and ord is " + total.get_str() + " at every frame >= " + std::to_string(i0);
  return c;
}

std::optional<Certificate> certify_rational_independence(const Tower& tower) {
  if (rational_rank(tower.initial_weights()) != tower.dimension()) return std::nullopt;
  Certificate c;
  c.kind = CertificateKind::rational_independence;
  c.scope = 0;
  c.citation = citation(Anchor::linear_independence);
  c.claim = "weights are linearly independent over Q, so no two parameters ever tie";
  return c;
}

std::optional<Certificate> certify_recurrence(Tower& tower, const Certificate& regime) {
  Certificate c;
  c.kind = CertificateKind::recurrence;
  c.scope = regime.scope;
  c.citation = citation(Anchor::principal_or_idempotent);
  c.slots = regime.slots;
  c.premises.push_back(regime);
  if (regime.slots.size() == 1) {
    c.claim = "the single feasible slot is the center at every frame >= " +
              std::to_string(regime.scope);
    return c;
  }
  if (regime.slots.size() == 2 && tower.mode() == ValueMode::algebraic) {
    auto indep = certify_rational_independence(tower);
    if (!indep) return std::nullopt;
    // If one of two feasible slots stopped recurring, the other would be the
    // center forever and its weight would be subtracted from the first one
    // indefinitely; archimedean weights rule that out.
    c.premises.push_back(*indep);
    c.claim = "both feasible slots are centers infinitely often";
    return c;
  }
  return std::nullopt;
}

Certificate certify_slot_fates(Tower& tower, const Certificate& regime,
                               const std::optional<Certificate>& recurrence) {
  const std::size_t d = tower.dimension();
  Certificate c;
  c.kind = CertificateKind::slot_fates;
  c.scope = regime.scope;
  c.citation = citation(Anchor::frak_ideals);
  c.premises.push_back(regime);
  if (recurrence) c.premises.push_back(*recurrence);
  const auto history = tower.center_history(regime.scope);
  c.fates.assign(d, SlotFateEntry{});
  for (std::size_t t = 0; t < d; ++t) {
    const bool feasible =
        std::find(regime.slots.begin(), regime.slots.end(), t) != regime.slots.end();
    if (feasible) {
      c.fates[t].fate = recurrence ? SlotFate::recurring : SlotFate::unknown;
      continue;
    }
    c.fates[t].fate = SlotFate::never_centered;
    for (std::size_t k = 0; k < history.size(); ++k) {
      if (history[k] == t) c.fates[t] = SlotFateEntry{SlotFate::last_centered, k};
    }
  }
  c.claim = "slot fates from frame " + std::to_string(regime.scope);
  return c;
}

std::optional<Certificate> certify_ring_membership(Tower& tower, const LaurentMonomial& q,
                                                   std::size_t i) {
  if (!tower.extend_to(i)) return std::nullopt;
  ExponentVector u = tower.frame_exponent(i, q);
  Certificate c;
  c.scope = i;
  c.monomial = q;
  c.citation = citation(Anchor::ring_union);
  if (is_nonnegative(u)) {
    c.kind = CertificateKind::ring_membership;
    c.strict = sgn(total_degree(u)) > 0;
    c.claim = q.to_string() + (c.strict ? " in m_" : " in R_") + std::to_string(i);
  } else if (is_nonnegative(-u) && sgn(total_degree(u)) < 0) {
    c.kind = CertificateKind::inverse_membership;
    c.strict = true;
    c.claim = "1/(" + q.to_string() + ") in m_" + std::to_string(i);
  } else {
    return std::nullopt;
  }
  c.exponent = std::move(u);
  return c;
}

std::optional<Certificate> certify_order_refutation(Tower& tower, std::size_t scope,
                                                    std::size_t limit) {
  if (!tower.extend_to(scope + 1)) return std::nullopt;
  const std::size_t d = tower.dimension();
  for (std::size_t n = scope + 1; n <= limit && tower.extend_to(n); ++n) {
    for (std::size_t r = 0; r < d; ++r) {
      LaurentMonomial p = tower.parameter(n, r);
      if (sgn(tower.ord(scope, p)) < 0) {
        Certificate c;
        c.kind = CertificateKind::order_refutation;
        c.scope = scope;
        c.citation = citation(Anchor::order_valuation_bound);
        c.witness_frame = n;
        c.witness_slot = r;
        c.monomial = p;
        c.claim = p.to_string() + " lies in R_" + std::to_string(n) + " with ord_" +
                  std::to_string(scope) + " = " + tower.ord(scope, p).get_str();
        return c;
      }
    }
  }
  return std::nullopt;
}

std::optional<Certificate> certify_center_event(Tower& tower, std::size_t step, std::size_t slot) {
  auto j = tower.center(step);
  if (!j || *j != slot) return std::nullopt;
  Certificate c;
  c.kind = CertificateKind::center_event;
  c.scope = step;
  c.witness_slot = slot;
  c.citation = citation(Anchor::frak_ideals);
  c.claim = "step " + std::to_string(step) + " is centered at " + slot_name(tower, slot);
  return c;
}

std::optional<Certificate> certify_tie(Tower& tower) {
  if (tower.status() != TowerStatus::terminated_tie) return std::nullopt;
  const auto& tie = *tower.tie();
  if (argmin_slots(tower.built_frame(tie.frame).weights) != tie.slots) return std::nullopt;
  Certificate c;
  c.kind = CertificateKind::tie_termination;
  c.scope = tie.frame;
  c.slots = tie.slots;
  c.citation = citation(Anchor::finite_sequence);
  c.claim = "argmin tie at frame " + std::to_string(tie.frame) + ": no monomial center";
  return c;
}

// ------------------------------------------------------------------ replay

namespace {

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

bool contains(const std::vector<std::size_t>& v, std::size_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

const Certificate* regime_premise(const Certificate& c) {
  for (const auto& p : c.premises) {
    if (p.kind == CertificateKind::constant_center ||
        p.kind == CertificateKind::form_preservation) {
      return &p;
    }
  }
  return nullptr;
}

bool replay_form_preservation(Tower& tower, const Certificate& c, std::string* why) {
  const std::size_t d = tower.dimension();
  if (!tower.extend_to(c.scope)) return fail(why, "scope frame missing");
  const auto& w = tower.frame(c.scope).weights;
  for (const auto& f : c.forms) {
    if (!valid_form(f, d)) return fail(why, "malformed form");
    if (!evaluate_form(f, w).is_positive()) return fail(why, "form not positive at scope");
  }
  const Certificate* cc = nullptr;
  for (const auto& p : c.premises) {
    if (p.kind == CertificateKind::constant_center) cc = &p;
  }
  if (cc && cc->scope > c.scope) return fail(why, "premise starts late");

  std::vector<std::size_t> feasible;
  if (cc) {
    feasible = cc->slots;
  } else {
    std::set<std::size_t> excluded;
    const auto gens = base_generators(d, c.forms);
    for (const auto& e : c.exclusions) {
      if (e.slot >= d || e.below >= d || e.slot == e.below) return fail(why, "bad exclusion");
      if (!check_combination(gens, exclusion_target(d, e.slot, e.below), e.lambda)) {
        return fail(why, "exclusion of slot " + std::to_string(e.slot) + " does not replay");
      }
      excluded.insert(e.slot);
    }
    for (std::size_t s = 0; s < d; ++s) {
      if (!excluded.count(s)) feasible.push_back(s);
    }
  }
  if (feasible != c.slots) return fail(why, "feasible set differs from replay");

  for (std::size_t s : feasible) {
    const auto gens = closure_generators(d, c.forms, s);
    for (std::size_t f = 0; f < c.forms.size(); ++f) {
      auto it = std::find_if(c.closures.begin(), c.closures.end(),
                             [&](const SlotClosure& cl) { return cl.form == f && cl.slot == s; });
      if (it == c.closures.end()) return fail(why, "missing closure proof");
      const bool ok = it->kind == ClosureKind::cone
                          ? check_combination(gens, to_rational(transported_form(c.forms[f], s)),
                                              it->lambda)
                          : feasible.size() == 1 && block_order_holds(tower, c.scope, c.forms[f], s);
      if (!ok) return fail(why, "closure of form " + std::to_string(f) + " does not replay");
    }
  }
  return true;
}

}  // namespace

bool replay(Tower& tower, const Certificate& c, std::string* why) {
  const std::size_t d = tower.dimension();
  for (const auto& p : c.premises) {
    if (!replay(tower, p, why)) return false;
  }
  if (std::find(known_citations().begin(), known_citations().end(), c.citation) ==
      known_citations().end()) {
    return fail(why, "unknown citation " + c.citation);
  }
  switch (c.kind) {
    case CertificateKind::constant_center: {
      auto fresh = certify_constant_center(tower, c.scope);
      if (!fresh || fresh->slots != c.slots) return fail(why, "constant center does not replay");
      return true;
    }
    case CertificateKind::form_preservation:
      return replay_form_preservation(tower, c, why);
    case CertificateKind::recurrence: {
      const Certificate* regime = regime_premise(c);
      if (!regime || regime->slots != c.slots) return fail(why, "recurrence lacks regime");
      if (c.slots.size() == 1) return true;
      bool indep = std::any_of(c.premises.begin(), c.premises.end(), [](const Certificate& p) {
        return p.kind == CertificateKind::rational_independence;
      });
      if (c.slots.size() == 2 && tower.mode() == ValueMode::algebraic && indep) return true;
      return fail(why, "recurrence conditions not met");
    }
    case CertificateKind::exponent_invariant: {
      const Certificate* regime = regime_premise(c);
      if (!regime || !c.monomial) return fail(why, "invariant lacks regime or monomial");
      auto fresh = verify_exponent_invariant(tower, *c.monomial, c.scope, *regime);
      if (!fresh || fresh->exponent != c.exponent) return fail(why, "invariant does not replay");
      return true;
    }
    case CertificateKind::center_drift:
    case CertificateKind::fixed_coordinate: {
      const Certificate* regime = regime_premise(c);
      if (!regime || !c.monomial || c.scope < regime->scope) return fail(why, "missing regime");
      if (!tower.extend_to(c.scope) || tower.frame_exponent(c.scope, *c.monomial) != c.exponent) {
        return fail(why, "frame exponent differs");
      }
      if (c.kind == CertificateKind::center_drift) {
        if (regime->slots.size() != 1 || c.witness_slot != regime->slots.front()) {
          return fail(why, "drift needs a single feasible slot");
        }
      } else if (c.witness_slot >= d || contains(regime->slots, c.witness_slot)) {
        return fail(why, "fixed coordinate must be outside the feasible set");
      }
      return true;
    }
    case CertificateKind::ring_membership:
    case CertificateKind::inverse_membership: {
      if (!c.monomial) return fail(why, "missing monomial");
      auto fresh = certify_ring_membership(tower, *c.monomial, c.scope);
      if (!fresh || fresh->kind != c.kind || fresh->strict != c.strict ||
          fresh->exponent != c.exponent) {
        return fail(why, "membership does not replay");
      }
      return true;
    }
    case CertificateKind::order_refutation: {
      if (c.witness_frame <= c.scope || c.witness_slot >= d) return fail(why, "bad witness");
      if (!tower.extend_to(c.witness_frame)) return fail(why, "witness frame missing");
      LaurentMonomial p = tower.parameter(c.witness_frame, c.witness_slot);
      if (c.monomial && !(p == *c.monomial)) return fail(why, "witness monomial differs");
      if (sgn(tower.ord(c.scope, p)) >= 0) return fail(why, "witness has ord >= 0");
      return true;
    }
    case CertificateKind::rational_independence:
      if (!certify_rational_independence(tower)) return fail(why, "weights are dependent");
      return true;
    case CertificateKind::slot_fates: {
      const Certificate* regime = regime_premise(c);
      if (!regime) return fail(why, "fates lack regime");
      std::optional<Certificate> rec;
      for (const auto& p : c.premises) {
        if (p.kind == CertificateKind::recurrence) rec = p;
      }
      Certificate fresh = certify_slot_fates(tower, *regime, rec);
      if (fresh.fates.size() != c.fates.size()) return fail(why, "fates differ");
      for (std::size_t t = 0; t < c.fates.size(); ++t) {
        if (fresh.fates[t].fate != c.fates[t].fate ||
            fresh.fates[t].last_step != c.fates[t].last_step) {
          return fail(why, "fate of slot " + std::to_string(t) + " differs");
        }
      }
      return true;
    }
    case CertificateKind::center_event:
      if (!certify_center_event(tower, c.scope, c.witness_slot)) {
        return fail(why, "center event does not replay");
      }
      return true;
    case CertificateKind::tie_termination: {
      auto fresh = certify_tie(tower);
      if (!fresh || fresh->scope != c.scope || fresh->slots != c.slots) {
        return fail(why, "tie does not replay");
      }
      return true;
    }
  }
  return fail(why, "unknown certificate kind");
}

}  // namespace shannon
