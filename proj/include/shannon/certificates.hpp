#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shannon/cone.hpp"
#include "shannon/tower.hpp"

namespace shannon {

/// Integer coefficients L of the linear form L . w on weight space.
using LinearForm = std::vector<Integer>;

/// Results a certificate or inference edge may instantiate. The strings are
/// the citation anchors written into reports.
enum class Anchor {
  quadratic_transform,
  transform_laws,
  frak_ideals,
  order_valuation_bound,
  principal_criterion,
  principal_or_idempotent,
  n_primary_center,
  dvr_criterion,
  noetherian_hull,
  hull_units,
  sign_trichotomy,
  boundary_valuation,
  decomposition,
  archimedean_criterion,
  colon_ring,
  dimension_two,
  dvr_domination,
  nonvaluation_witness,
  finite_sequence,
  linear_independence,
  invariant_forms,
  exponent_invariance,
  ring_union,
};

const char* citation(Anchor a);
/// Every anchor string; reports must cite only these.
const std::vector<std::string>& known_citations();

enum class CertificateKind {
  constant_center,      // argmin slot is infinitesimal against every other weight
  form_preservation,    // linear forms stay positive; feasible center slots
  recurrence,           // every feasible slot is a center infinitely often
  exponent_invariant,   // frame exponent of q is fixed from scope on
  center_drift,         // constant center: ord_i(q) is affine in i
  fixed_coordinate,     // slot never centered from scope on: coordinate fixed
  ring_membership,      // q in R_scope (q in m_scope when strict)
  inverse_membership,   // 1/q in m_scope
  order_refutation,     // a parameter of a later frame has ord_scope < 0
  rational_independence,// weights Q-linearly independent: no tie ever
  slot_fates,           // how often each slot is centered, from scope on
  center_event,         // slot witness_slot is the center of step scope
  tie_termination,      // argmin tie at frame scope: the sequence is finite
};

const char* to_string(CertificateKind k);

/// Nonnegative proof that w_slot > w_below from forms and coordinate positivity.
struct SlotExclusion {
  std::size_t slot = 0;
  std::size_t below = 0;
  RationalVector lambda;  // over (forms..., coordinates...)
};

enum class ClosureKind { cone, block_order };

/// Proof that form `form` stays positive across a step centered at `slot`.
struct SlotClosure {
  std::size_t form = 0;
  std::size_t slot = 0;
  ClosureKind kind = ClosureKind::cone;
  RationalVector lambda;  // over (forms..., coordinates..., gaps w_k - w_slot for k != slot)
};

/// Fate of one slot from the certificate scope on.
enum class SlotFate { never_centered, last_centered, recurring, unknown };
const char* to_string(SlotFate f);

struct SlotFateEntry {
  SlotFate fate = SlotFate::unknown;
  std::size_t last_step = 0;  // meaningful for last_centered
};

/// A replayable claim holding at every frame >= scope.
struct Certificate {
  CertificateKind kind = CertificateKind::constant_center;
  std::size_t scope = 0;
  std::string citation;
  std::string claim;

  std::vector<std::size_t> slots;        // center slot(s) / feasible set
  std::vector<LinearForm> forms;
  std::vector<SlotExclusion> exclusions;
  std::vector<SlotClosure> closures;
  std::optional<LaurentMonomial> monomial;
  ExponentVector exponent;               // frame exponent at scope
  std::size_t witness_frame = 0;
  std::size_t witness_slot = 0;
  std::vector<SlotFateEntry> fates;
  bool strict = false;                   // ring_membership: q lies in m_scope

  std::vector<Certificate> premises;

  /// Feasible center slots for kinds that carry a regime.
  const std::vector<std::size_t>& feasible() const { return slots; }
};

/// Outcome of a certification attempt.
struct CertifyResult {
  std::optional<Certificate> certificate;
  std::string failure;
  std::optional<std::size_t> offending_slot;
  explicit operator bool() const { return certificate.has_value(); }
};

/// Slots that can be the argmin at frames >= i0 given forms positive there.
struct FeasibleCenters {
  std::vector<std::size_t> slots;
  std::vector<SlotExclusion> exclusions;
};

/// Coordinates of L transported through a step centered at `slot`.
LinearForm transported_form(const LinearForm& form, std::size_t slot);
WeightValue evaluate_form(const LinearForm& form, const std::vector<WeightValue>& weights);

/// The forms w_s - sum_{k != s} w_k, one per slot.
std::vector<LinearForm> default_forms(std::size_t d);

FeasibleCenters feasible_centers(std::size_t d, const std::vector<LinearForm>& forms);
/// Restricts by a constant-center certificate when given.
FeasibleCenters feasible_centers(std::size_t d, const std::vector<LinearForm>& forms,
                                 const Certificate* constant_center);

std::optional<Certificate> certify_constant_center(Tower& tower, std::size_t i);

/// Checks every form is positive at i0 and closed under every feasible step.
CertifyResult check_form_preservation(Tower& tower, std::size_t i0,
                                      const std::vector<LinearForm>& forms,
                                      const Certificate* constant_center = nullptr);

/// Greatest subset of `candidates` (those positive at i0) that certifies.
CertifyResult prune_forms(Tower& tower, std::size_t i0, const std::vector<LinearForm>& candidates,
                          const Certificate* constant_center = nullptr);

/// Constant-center certificate or form regime, as the single premise used by
/// pattern certificates. Searches frames <= horizon.
std::optional<Certificate> discover_regime(Tower& tower, std::size_t horizon,
                                           const std::vector<LinearForm>& hints);

std::optional<Certificate> verify_exponent_invariant(Tower& tower, const LaurentMonomial& q,
                                                     std::size_t i0, const Certificate& regime);

std::optional<Certificate> certify_rational_independence(const Tower& tower);

/// Every feasible slot recurs: single feasible slot, or two feasible slots
/// under archimedean weights on a certified-infinite tower.
std::optional<Certificate> certify_recurrence(Tower& tower, const Certificate& regime);

/// Per-slot fates from the regime scope on: slots outside the feasible set
/// keep their history before the scope; feasible slots recur when certified.
Certificate certify_slot_fates(Tower& tower, const Certificate& regime,
                               const std::optional<Certificate>& recurrence);

std::optional<Certificate> certify_ring_membership(Tower& tower, const LaurentMonomial& q,
                                                   std::size_t i);
/// Searches frames scope+1 .. limit for a parameter with ord_scope < 0.
std::optional<Certificate> certify_order_refutation(Tower& tower, std::size_t scope,
                                                    std::size_t limit);

std::optional<Certificate> certify_center_event(Tower& tower, std::size_t step, std::size_t slot);

std::optional<Certificate> certify_tie(Tower& tower);

/// Independent re-check of a certificate and its premises from raw data.
bool replay(Tower& tower, const Certificate& cert, std::string* why = nullptr);

}  // namespace shannon
