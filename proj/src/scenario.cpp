#include "shannon/scenario.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace shannon {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& errors) {
  std::string out;
  for (const auto& e : errors) out += (out.empty() ? "" : "; ") + e;
  return out;
}

}  // namespace

ScenarioError::ScenarioError(std::vector<std::string> errors)
    : std::runtime_error(join(errors)), errors_(std::move(errors)) {}

const std::vector<std::string>& assertion_facts() {
  static const std::vector<std::string> facts = {
      "NPrincipal",  "NIdempotent", "Archimedean",   "NonArchimedean",
      "InS",         "NotInS",      "InV",           "NotInV",
      "InT",         "NPrimary",    "VariablePersists", "OrderValuationContainsS",
      "IsValuation", "NotValuation", "IsDVR",        "TowerFinite",
      "OrdSign",     "EveryOrderValuationRefuted"};
  return facts;
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "PASS";
    case Outcome::fail: return "FAIL";
    case Outcome::undecided: return "UNDECIDED";
  }
  return "?";
}

std::vector<WeightValue> Scenario::weight_values() const {
  std::vector<WeightValue> out;
  for (const auto& w : weights) {
    if (mode == ValueMode::lex) {
      out.emplace_back(LexTuple(w));
    } else {
      out.emplace_back(AlgebraicReal(basis, w));
    }
  }
  return out;
}

const Probe* Scenario::probe(const std::string& name) const {
  for (const auto& p : probes) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

namespace {

bool needs_probe(const std::string& fact) {
  static const std::set<std::string> with_probe = {"InS", "NotInS", "InV", "NotInV", "InT",
                                                   "OrdSign"};
  return with_probe.count(fact) > 0;
}

// Reads a nonnegative count field, recording an error on bad input.
std::optional<std::size_t> read_count(const json& j, const char* key,
                                      std::vector<std::string>& errors) {
  if (!j.contains(key)) return std::nullopt;
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    errors.push_back(std::string("'") + key + "' must be a nonnegative integer");
    return std::nullopt;
  }
  return static_cast<std::size_t>(v.get<long long>());
}

std::optional<Rational> read_rational(const json& v) {
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Integer>> read_integers(const json& v, std::size_t expected) {
  if (!v.is_array() || v.size() != expected) return std::nullopt;
  std::vector<Integer> out;
  for (const auto& e : v) {
    if (e.is_number_integer()) {
      out.emplace_back(std::to_string(e.get<long long>()));
    } else if (e.is_string()) {
      try {
        out.emplace_back(e.get<std::string>());
      } catch (const std::exception&) {
        return std::nullopt;
      }
    } else {
      return std::nullopt;
    }
  }
  return out;
}

json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return json(q.get_num().get_si());
  return json(rational_to_string(q));
}

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError({std::string("malformed scenario document: ") + e.what()});
  }
  if (!doc.is_object()) throw ScenarioError({"scenario document must be an object"});

  std::vector<std::string> errors;
  Scenario s;

  if (doc.value("format", std::string()) != "shannon-scenario") {
    errors.push_back("'format' must be \"shannon-scenario\"");
  }
  if (!doc.contains("version") || doc["version"] != 1) errors.push_back("'version' must be 1");
  if (doc.contains("name") && doc["name"].is_string()) s.name = doc["name"].get<std::string>();

  auto dim = read_count(doc, "dimension", errors);
  if (!dim) {
    if (!doc.contains("dimension")) errors.push_back("missing 'dimension'");
  } else if (*dim < 2) {
    errors.push_back("'dimension' must be at least 2");
  } else {
    s.dimension = *dim;
  }

  const std::string mode = doc.value("mode", std::string());
  std::size_t width = 0;
  if (mode == "lex") {
    s.mode = ValueMode::lex;
    auto m = read_count(doc, "lex_length", errors);
    if (!m || *m == 0) {
      errors.push_back("lex mode needs a positive 'lex_length'");
    } else {
      s.lex_length = *m;
      width = *m;
    }
  } else if (mode == "algebraic") {
    s.mode = ValueMode::algebraic;
    if (!doc.contains("basis") || !doc["basis"].is_array() || doc["basis"].empty()) {
      errors.push_back("algebraic mode needs a nonempty 'basis'");
    } else {
      bool ok = true;
      for (const auto& b : doc["basis"]) {
        if (!b.is_number_unsigned() || b.get<std::uint64_t>() == 0) {
          ok = false;
        } else {
          s.basis.push_back(b.get<std::uint64_t>());
        }
      }
      try {
        if (ok) validate_basis(s.basis);
      } catch (const ValueError& e) {
        ok = false;
        errors.push_back(std::string("bad basis: ") + e.what());
      }
      if (!ok) {
        if (errors.empty() || errors.back().rfind("bad basis", 0) != 0) {
          errors.push_back("basis entries must be distinct increasing squarefree positive integers");
        }
        s.basis.clear();
      } else {
        width = s.basis.size();
      }
    }
  } else {
    errors.push_back("unknown mode '" + mode + "' (expected lex or algebraic)");
  }

  if (!doc.contains("weights") || !doc["weights"].is_array()) {
    errors.push_back("missing 'weights' list");
  } else {
    const json& ws = doc["weights"];
    if (s.dimension && ws.size() != s.dimension) {
      errors.push_back("expected " + std::to_string(s.dimension) + " weights, got " +
                       std::to_string(ws.size()));
    }
    for (std::size_t k = 0; k < ws.size(); ++k) {
      const json& w = ws[k];
      if (!w.is_array() || (width && w.size() != width)) {
        errors.push_back("weight " + std::to_string(k) + " must list " + std::to_string(width) +
                         " coefficients");
        continue;
      }
      std::vector<Rational> coeffs;
      bool ok = true;
      for (const auto& c : w) {
        auto q = read_rational(c);
        if (!q) {
          errors.push_back("weight " + std::to_string(k) + ": bad coefficient " + c.dump());
          ok = false;
          break;
        }
        coeffs.push_back(*q);
      }
      if (ok) s.weights.push_back(std::move(coeffs));
    }
    if (width && s.weights.size() == ws.size()) {
      for (std::size_t k = 0; k < s.weights.size(); ++k) {
        WeightValue v = s.mode == ValueMode::lex ? WeightValue(LexTuple(s.weights[k]))
                                                 : WeightValue(AlgebraicReal(s.basis, s.weights[k]));
        if (!v.is_positive()) {
          errors.push_back("weight " + std::to_string(k) + " is not positive: " + v.to_string());
        }
      }
    }
  }

  if (auto h = read_count(doc, "horizon", errors)) s.horizon = *h;
  if (auto w = read_count(doc, "window", errors)) s.window = *w;
  if (auto n = read_count(doc, "n_max", errors)) s.n_max = *n;
  if (doc.contains("undecided_ok")) {
    if (!doc["undecided_ok"].is_boolean()) {
      errors.push_back("'undecided_ok' must be a boolean");
    } else {
      s.undecided_ok = doc["undecided_ok"].get<bool>();
    }
  }

  if (doc.contains("hints")) {
    const json& hs = doc["hints"];
    if (!hs.is_array()) errors.push_back("'hints' must be a list");
    for (std::size_t k = 0; hs.is_array() && k < hs.size(); ++k) {
      auto f = read_integers(hs[k], s.dimension);
      if (!f) {
        errors.push_back("hint " + std::to_string(k) + " must list " +
                         std::to_string(s.dimension) + " integers");
      } else {
        s.hints.push_back(std::move(*f));
      }
    }
  }

  if (doc.contains("probes")) {
    const json& ps = doc["probes"];
    if (!ps.is_array()) errors.push_back("'probes' must be a list");
    for (std::size_t k = 0; ps.is_array() && k < ps.size(); ++k) {
      const json& p = ps[k];
      if (!p.is_object()) {
        errors.push_back("probe " + std::to_string(k) + " must be an object");
        continue;
      }
      Probe probe;
      probe.name = p.value("name", "q" + std::to_string(k));
      auto e = p.contains("exponents") ? read_integers(p["exponents"], s.dimension) : std::nullopt;
      if (!e) {
        errors.push_back("probe '" + probe.name + "': malformed monomial (need " +
                         std::to_string(s.dimension) + " integer exponents)");
        continue;
      }
      probe.monomial.exponents = std::move(*e);
      if (s.probe(probe.name)) errors.push_back("duplicate probe name '" + probe.name + "'");
      s.probes.push_back(std::move(probe));
    }
  }

  if (doc.contains("assertions")) {
    const json& as = doc["assertions"];
    if (!as.is_array()) errors.push_back("'assertions' must be a list");
    const auto& known = assertion_facts();
    for (std::size_t k = 0; as.is_array() && k < as.size(); ++k) {
      const json& a = as[k];
      const std::string where = "assertion " + std::to_string(k);
      if (!a.is_object()) {
        errors.push_back(where + " must be an object");
        continue;
      }
      Assertion out;
      out.fact = a.value("fact", std::string());
      if (std::find(known.begin(), known.end(), out.fact) == known.end()) {
        errors.push_back(where + ": unknown fact '" + out.fact + "'");
        continue;
      }
      auto expect = parse_status(a.value("expect", std::string()));
      if (!expect) {
        errors.push_back(where + ": 'expect' must be certified_yes, certified_no, evidence or undecided");
        continue;
      }
      out.expect = *expect;
      if (a.contains("probe")) {
        out.probe = a["probe"].is_string() ? a["probe"].get<std::string>() : std::string();
        if (!s.probe(*out.probe)) errors.push_back(where + ": dangling probe '" + *out.probe + "'");
      } else if (needs_probe(out.fact)) {
        errors.push_back(where + ": fact " + out.fact + " needs a probe");
      }
      std::vector<std::string> local;
      out.slot = read_count(a, "slot", local);
      out.frame = read_count(a, "frame", local);
      out.upto = read_count(a, "upto", local);
      for (auto& e : local) errors.push_back(where + ": " + e);
      if (out.fact == "VariablePersists" && (!out.slot || (s.dimension && *out.slot >= s.dimension))) {
        errors.push_back(where + ": VariablePersists needs a slot below the dimension");
      }
      if (out.fact == "OrderValuationContainsS" && !out.frame && !out.upto) {
        errors.push_back(where + ": OrderValuationContainsS needs 'frame' or 'upto'");
      }
      if (a.contains("value")) out.value = a["value"].is_string() ? a["value"].get<std::string>() : a["value"].dump();
      if (a.contains("via")) out.via = a["via"].is_string() ? a["via"].get<std::string>() : a["via"].dump();
      s.assertions.push_back(std::move(out));
    }
  }

  if (!errors.empty()) throw ScenarioError(std::move(errors));
  return s;
}

std::string serialize_scenario(const Scenario& s) {
  json doc;
  doc["format"] = "shannon-scenario";
  doc["version"] = 1;
  doc["name"] = s.name;
  doc["dimension"] = s.dimension;
  doc["mode"] = to_string(s.mode);
  if (s.mode == ValueMode::lex) {
    doc["lex_length"] = s.lex_length;
  } else {
    doc["basis"] = s.basis;
  }
  json ws = json::array();
  for (const auto& w : s.weights) {
    json row = json::array();
    for (const auto& c : w) row.push_back(rational_json(c));
    ws.push_back(row);
  }
  doc["weights"] = ws;
  doc["horizon"] = s.horizon;
  doc["window"] = s.window;
  doc["n_max"] = s.n_max;
  doc["undecided_ok"] = s.undecided_ok;
  json hs = json::array();
  for (const auto& h : s.hints) {
    json row = json::array();
    for (const auto& c : h) row.push_back(integer_json(c));
    hs.push_back(row);
  }
  doc["hints"] = hs;
  json ps = json::array();
  for (const auto& p : s.probes) {
    json e = json::array();
    for (const auto& c : p.monomial.exponents) e.push_back(integer_json(c));
    ps.push_back({{"name", p.name}, {"exponents", e}});
  }
  doc["probes"] = ps;
  json as = json::array();
  for (const auto& a : s.assertions) {
    json j;
    j["fact"] = a.fact;
    j["expect"] = to_string(a.expect);
    if (a.probe) j["probe"] = *a.probe;
    if (a.slot) j["slot"] = *a.slot;
    if (a.frame) j["frame"] = *a.frame;
    if (a.upto) j["upto"] = *a.upto;
    if (a.value) j["value"] = *a.value;
    if (a.via) j["via"] = *a.via;
    as.push_back(j);
  }
  doc["assertions"] = as;
  return doc.dump(2) + "\n";
}

// ------------------------------------------------------------------- run

std::size_t RunReport::count(Outcome o) const {
  return static_cast<std::size_t>(std::count_if(
      assertions.begin(), assertions.end(), [&](const AssertionResult& r) { return r.outcome == o; }));
}

int RunReport::exit_code() const {
  if (count(Outcome::fail) > 0) return 1;
  if (count(Outcome::undecided) > 0 && !undecided_ok) return 2;
  return 0;
}

namespace {

Verdict negated(Verdict v) {
  if (v.status == Status::certified_yes) {
    v.status = Status::certified_no;
  } else if (v.status == Status::certified_no) {
    v.status = Status::certified_yes;
  }
  if (v.value == "yes") {
    v.value = "no";
  } else if (v.value == "no") {
    v.value = "yes";
  }
  return v;
}

Verdict missing(const std::string& what) {
  Verdict v;
  v.status = Status::undecided;
  v.detail = what + " not computed";
  return v;
}

std::string assertion_label(const Assertion& a, std::size_t d) {
  std::string out = a.fact;
  if (a.probe) out += "(" + *a.probe + ")";
  if (a.slot) out += "(" + variable_name(d, *a.slot) + ")";
  if (a.frame) out += "(" + std::to_string(*a.frame) + ")";
  if (a.upto) out += "(0.." + std::to_string(*a.upto) + ")";
  return out;
}

Verdict evaluate(const Assertion& a, const Scenario& s, ShannonAnalysis& analysis,
                 const ClassificationReport& rep) {
  auto fact = [&](const std::string& kind, const std::string& arg = "") {
    const Fact* f = rep.find(kind, arg);
    return f ? f->verdict : missing(kind);
  };
  const std::string probe = a.probe.value_or("");
  if (a.fact == "NotInS") return negated(fact("InS", probe));
  if (a.fact == "NotInV") return negated(fact("InV", probe));
  if (needs_probe(a.fact)) return fact(a.fact, probe);
  if (a.fact == "VariablePersists") {
    return analysis.terminated() ? missing(a.fact) : analysis.variable_persists(*a.slot);
  }
  if (a.fact == "NPrimary") {
    for (const auto& f : rep.facts) {
      if (f.kind == "NPrimary") return f.verdict;
    }
    return missing(a.fact);
  }
  if (a.fact == "OrderValuationContainsS") {
    if (a.frame) return analysis.order_valuation_contains_S(*a.frame);
    // Over a range: certified no only if every frame is refuted.
    Verdict all;
    all.status = Status::certified_no;
    all.value = "no";
    for (std::size_t j = 0; j <= *a.upto; ++j) {
      Verdict v = analysis.order_valuation_contains_S(j);
      if (v.status != Status::certified_no) {
        v.detail = "frame " + std::to_string(j) + ": " + v.detail;
        return v;
      }
      for (const auto& c : v.citations) {
        if (std::find(all.citations.begin(), all.citations.end(), c) == all.citations.end()) {
          all.citations.push_back(c);
        }
      }
      if (j < 3) all.certificates.push_back(v.certificates.front());
    }
    all.detail = "every frame 0.." + std::to_string(*a.upto) + " refuted by a witness";
    return all;
  }
  (void)s;
  return fact(a.fact);
}

bool produced_via(const ClassificationReport& rep, const std::string& rule, const std::string& fact) {
  return std::any_of(rep.edges.begin(), rep.edges.end(), [&](const InferenceEdge& e) {
    return e.rule == rule && e.conclusion.rfind(fact, 0) == 0;
  });
}

}  // namespace

RunReport run_scenario(const Scenario& s, const RunOptions& options) {
  const std::size_t horizon = options.horizon.value_or(s.horizon);
  if (horizon > kHorizonCap) {
    throw ResourceCapError("resource cap exceeded: horizon " + std::to_string(horizon) +
                           " is above the limit of " + std::to_string(kHorizonCap) + " steps");
  }
  Tower tower(s.dimension, s.weight_values());
  AnalysisOptions ao;
  ao.horizon = horizon;
  ao.window = s.window;
  ao.n_max = s.n_max;
  ao.hints = s.hints;
  ShannonAnalysis analysis(tower, ao);

  RunReport r;
  r.scenario = s.name;
  r.horizon = horizon;
  r.undecided_ok = options.undecided_ok || s.undecided_ok;
  r.regime = analysis.regime();
  r.classification = analysis.classify_shannon(s.probes);
  r.violations = consistency_violations(r.classification);

  r.tower.dimension = s.dimension;
  r.tower.mode = s.mode;
  r.tower.status = tower.status();
  r.tower.frames = analysis.last_frame() + 1;
  r.tower.tie = tower.tie();
  r.tower.centers = tower.center_history(std::min<std::size_t>(analysis.last_frame(), 24));

  for (const auto& a : s.assertions) {
    AssertionResult res;
    res.assertion = a;
    res.label = assertion_label(a, s.dimension);
    res.verdict = evaluate(a, s, analysis, r.classification);
    const Status got = res.verdict.status;
    bool value_ok = !a.value || *a.value == res.verdict.value;
    bool via_ok = !a.via || produced_via(r.classification, *a.via, a.fact);
    if (got == a.expect && value_ok && via_ok) {
      res.outcome = Outcome::pass;
    } else if (got == a.expect) {
      res.outcome = Outcome::fail;
      res.message = !value_ok ? "value " + res.verdict.value + " != expected " + *a.value
                              : "not produced via " + *a.via;
    } else if ((a.expect == Status::certified_yes || a.expect == Status::certified_no) &&
               (got == Status::evidence || got == Status::undecided)) {
      res.outcome = Outcome::undecided;
      res.message = std::string("expected ") + to_string(a.expect) + ", got " + to_string(got);
    } else {
      res.outcome = Outcome::fail;
      res.message = std::string("expected ") + to_string(a.expect) + ", got " + to_string(got);
    }
    r.assertions.push_back(std::move(res));
  }
  return r;
}

Trace trace(const Scenario& s, std::size_t steps) {
  if (steps > kHorizonCap) {
    throw ResourceCapError("resource cap exceeded: " + std::to_string(steps) + " trace steps");
  }
  Tower tower(s.dimension, s.weight_values());
  Trace t;
  for (const auto& p : s.probes) t.probe_names.push_back(p.name);
  tower.extend_to(steps);
  const std::size_t last = std::min(steps, tower.size() - 1);
  for (std::size_t i = 0; i <= last; ++i) {
    TraceRow row;
    row.frame = i;
    const Frame& f = tower.frame(i);
    row.center = f.center;  // empty on the last row: that step was not taken
    row.weights = f.weights;
    for (std::size_t k = 0; k < s.dimension; ++k) row.params.push_back(tower.parameter(i, k));
    for (const auto& p : s.probes) row.probe_ords.push_back(tower.ord(i, p.monomial));
    t.rows.push_back(std::move(row));
  }
  if (tower.status() != TowerStatus::active && tower.tie()->frame <= steps) t.tie = tower.tie();
  return t;
}

}  // namespace shannon
