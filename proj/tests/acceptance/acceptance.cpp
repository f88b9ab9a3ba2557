// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "shannon/analysis.hpp"
#include "shannon/scenario.hpp"

using namespace shannon;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

// Frames checked for integrity across the whole run (criterion 7).
std::size_t g_frames_audited = 0;
std::vector<std::string> g_integrity_failures;

void audit(const Tower& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::string err = t.integrity_error(i);
    ++g_frames_audited;
    if (!err.empty() && g_integrity_failures.size() < 5) {
      g_integrity_failures.push_back("frame " + std::to_string(i) + ": " + err);
    }
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Scenario load(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name + ".json");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

LaurentMonomial mono(std::initializer_list<long> e) { return {make_exponents(e)}; }

bool fact_is(const ClassificationReport& r, const std::string& kind, const std::string& arg,
             Status status) {
  const Fact* f = r.find(kind, arg);
  return f && f->verdict.status == status;
}

bool has_edge(const ClassificationReport& r, const std::string& rule, const std::string& conclusion) {
  return std::any_of(r.edges.begin(), r.edges.end(), [&](const InferenceEdge& e) {
    return e.rule == rule && e.conclusion == conclusion;
  });
}

AnalysisOptions options_of(const Scenario& s, std::size_t horizon) {
  AnalysisOptions o;
  o.horizon = horizon;
  o.window = s.window;
  o.n_max = s.n_max;
  o.hints = s.hints;
  return o;
}

std::vector<WeightValue> random_weights(std::mt19937_64& rng, std::size_t d, int n) {
  return n % 2 ? oracle::random_lex_weights(rng, d, 2)
               : oracle::random_algebraic_weights(rng, d, {1, 2, 3});
}

MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t frame, std::size_t d, long hi) {
  std::uniform_int_distribution<std::size_t> count(1, 4);
  std::vector<ExponentVector> gens;
  for (std::size_t n = count(rng); n > 0; --n) gens.push_back(oracle::random_exponents(rng, d, 0, hi));
  return MonomialIdeal(frame, gens);
}

// ------------------------------------------------------------------ criteria

Result nonarchimedean_fixture() {
  Result r;
  auto start = std::chrono::steady_clock::now();
  Scenario s = load("nonarchimedean_lex");
  RunReport run = run_scenario(s);
  const auto& c = run.classification;
  r.require(run.exit_code() == 0, "scenario exit code " + std::to_string(run.exit_code()));
  r.require(fact_is(c, "NPrincipal", "", Status::certified_yes), "N principal");
  const Fact* prim = c.find("NPrimary", "x");
  r.require(prim && prim->verdict.yes(), "N = xS");
  r.require(fact_is(c, "NonArchimedean", "", Status::certified_yes), "non-archimedean");
  r.require(fact_is(c, "InS", "z_over_y", Status::certified_no), "z/y not in S");
  r.require(fact_is(c, "InS", "y_over_z", Status::certified_no), "y/z not in S");
  r.require(fact_is(c, "NotValuation", "", Status::certified_yes), "not a valuation ring");
  r.require(fact_is(c, "InT", "inv_y", Status::certified_no), "1/y not in T");
  r.require(fact_is(c, "InT", "inv_z", Status::certified_no), "1/z not in T");
  r.require(fact_is(c, "InT", "inv_x", Status::certified_yes), "1/x in T");
  r.require(fact_is(c, "VariablePersists", "x", Status::certified_no), "x dies");
  r.require(fact_is(c, "VariablePersists", "y", Status::certified_yes), "y persists");
  r.require(fact_is(c, "VariablePersists", "z", Status::certified_yes), "z persists");

  Tower t(s.dimension, s.weight_values());
  ShannonAnalysis a(t, options_of(s, s.horizon));
  for (std::size_t j = 0; j <= 100; ++j) {
    r.require(a.order_valuation_contains_S(j).no(), "V_" + std::to_string(j) + " not refuted");
  }
  audit(t);
  const double secs = seconds_since(start);
  r.require(secs < 5.0, "runtime " + std::to_string(secs) + " s");
  r.detail = "exit 0, V_0..V_100 refuted, " + std::to_string(secs).substr(0, 5) + " s";
  return r;
}

Result archimedean_fixture() {
  Result r;
  auto start = std::chrono::steady_clock::now();
  Scenario s = load("archimedean_sqrt");
  RunReport run = run_scenario(s);
  const auto& c = run.classification;
  r.require(run.exit_code() == 0, "scenario exit code " + std::to_string(run.exit_code()));

  Tower t(s.dimension, s.weight_values());
  const LaurentMonomial theta = mono({-1, -1, 1});
  t.extend_to(201);
  auto frames = oracle::simulate(s.weight_values(), 200);
  r.require(!frames.ambiguous && frames.centers == t.center_history(200), "center history");
  for (std::size_t i = 0; i <= 200; ++i) {
    r.require(t.ord(i, theta) == -1, "ord_" + std::to_string(i) + " of theta");
    auto u = oracle::solve(frames.params[i], theta.exponents);
    Rational sum = 0;
    for (const auto& x : *u) sum += x;
    r.require(sum == -1, "oracle ord_" + std::to_string(i) + " of theta");
  }
  for (std::size_t k = 0; k < 200; ++k) r.require(t.center_history(200)[k] != 2, "center z");

  ShannonAnalysis a(t, options_of(s, s.horizon));
  const auto& regime = a.regime();
  r.require(regime && !regime->forms.empty() && replay(t, *regime) &&
                std::find(regime->slots.begin(), regime->slots.end(), 2) == regime->slots.end(),
            "center z excluded by a replayed invariant form");
  r.require(fact_is(c, "NIdempotent", "", Status::certified_yes), "N idempotent");
  r.require(fact_is(c, "Archimedean", "", Status::certified_yes), "archimedean");
  r.require(fact_is(c, "InS", "theta", Status::certified_no), "theta not in S");
  r.require(fact_is(c, "InT", "theta", Status::certified_yes), "theta in T");
  r.require(fact_is(c, "NotValuation", "", Status::certified_yes) &&
                has_edge(c, "R4", "NotValuation=certified_yes"),
            "not a valuation ring via R4");

  // First direction change: engine and power-table oracle.
  r.require(!t.direction_change(0, 1) && t.direction_change(0, 2), "engine direction change");
  auto first_change = [&](std::size_t n) {
    for (std::size_t k = 0; k < 3; ++k) {
      auto o = oracle::ord_oracle(frames.params[n], frames.params[0][k], 10);
      if (!o || *o < 2) return false;
    }
    return true;
  };
  r.require(!first_change(1) && first_change(2), "oracle direction change");
  audit(t);
  const double secs = seconds_since(start);
  r.require(secs < 5.0, "runtime " + std::to_string(secs) + " s");
  r.detail = "ord(theta) = -1 on frames 0..200, R4 edge present, " +
             std::to_string(secs).substr(0, 5) + " s";
  return r;
}

Result transform_laws() {
  Result r;
  std::mt19937_64 rng(1001);
  int transitivity = 0, product = 0;
  for (int n = 0; transitivity < 600; ++n) {
    const std::size_t d = 2 + n % 2;
    auto w = random_weights(rng, d, n);
    Tower t(d, w);
    auto frames = oracle::simulate(w, 6);
    if (frames.ambiguous || frames.centers.size() < 6) continue;
    std::uniform_int_distribution<std::size_t> from(0, 5);
    const std::size_t a = from(rng);
    std::uniform_int_distribution<std::size_t> to(a + 1, 6);
    const std::size_t k = to(rng);
    MonomialIdeal seed = random_ideal(rng, a, d, 5);
    auto trail = t.transform_trail(seed, k - a);
    r.require(trail.ideals.back().generators() ==
                  oracle::jump_oracle(frames, a, k, seed.generators()),
              "transitivity from " + std::to_string(a) + " to " + std::to_string(k));
    audit(t);
    ++transitivity;
  }
  for (int n = 0; product < 600; ++n) {
    const std::size_t d = 2 + n % 2;
    Tower t(d, random_weights(rng, d, n));
    std::uniform_int_distribution<std::size_t> frame(0, 5);
    const std::size_t i = frame(rng);
    if (!t.extend_to(i + 1)) continue;
    MonomialIdeal a = random_ideal(rng, i, d, 5);
    MonomialIdeal b = random_ideal(rng, i, d, 5);
    r.require(t.transform_step(a.product(b)) == t.transform_step(a).product(t.transform_step(b)),
              "product law at frame " + std::to_string(i));
    audit(t);
    ++product;
  }
  r.detail = std::to_string(transitivity + product) + " cases (" + std::to_string(transitivity) +
             " transitivity, " + std::to_string(product) + " product)";
  return r;
}

Result oracle_agreement() {
  Result r;
  std::mt19937_64 rng(2002);
  int ords = 0, transforms = 0;
  for (int n = 0; ords < 600; ++n) {
    const std::size_t d = 2 + n % 2;
    auto w = random_weights(rng, d, n);
    Tower t(d, w);
    auto frames = oracle::simulate(w, 4);
    if (frames.ambiguous || frames.centers.size() < 4) continue;
    std::uniform_int_distribution<std::size_t> frame(0, 4);
    const std::size_t i = frame(rng);
    auto v = oracle::random_exponents(rng, d, -2, 2);
    auto o = oracle::ord_oracle(frames.params[i], v, 6);
    if (!o) continue;
    r.require(t.ord(i, {v}) == *o, "ord at frame " + std::to_string(i) + " of " + to_string(v));
    audit(t);
    ++ords;
  }
  for (int n = 0; transforms < 1000; ++n) {
    const std::size_t d = 2 + n % 2;
    auto w = random_weights(rng, d, n);
    Tower t(d, w);
    auto frames = oracle::simulate(w, 4);
    if (frames.ambiguous || frames.centers.size() < 4) continue;
    std::uniform_int_distribution<std::size_t> frame(0, 3);
    const std::size_t i = frame(rng);
    MonomialIdeal ideal = random_ideal(rng, i, d, 3);
    r.require(t.transform_step(ideal).generators() ==
                  oracle::transform_oracle(frames.params[i], frames.params[i + 1],
                                           frames.centers[i], ideal.generators()),
              "transform at frame " + std::to_string(i));
    audit(t);
    ++transforms;
  }
  r.detail = std::to_string(ords) + " ord and " + std::to_string(transforms) +
             " transform comparisons";
  return r;
}

Result frak_ideals() {
  Result r;
  std::mt19937_64 rng(3003);
  int towers = 0, checks = 0;
  for (int n = 0; towers < 300; ++n) {
    const std::size_t d = 2 + n % 3;
    auto w = n % 2 ? oracle::random_lex_weights(rng, d, 2)
                   : oracle::random_algebraic_weights(rng, d, {1, 2, 3});
    Tower t(d, w);
    std::uniform_int_distribution<std::size_t> dd(1, 12);
    const std::size_t depth = dd(rng);
    auto frames = oracle::simulate(w, depth + 1);
    if (frames.ambiguous || frames.centers.size() < depth + 1) continue;
    // Frames R_0 .. R_depth; I_k for 1 <= k <= depth.
    for (std::size_t s = 0; s < d; ++s) {
      LaurentMonomial x{unit_vector(d, s)};
      bool all = true;
      ExponentVector product(d, Integer(0));
      for (std::size_t k = 0; k <= depth; ++k) {
        for (std::size_t row = 0; row < d; ++row) product[row] += frames.params[k][frames.centers[k]][row];
        const bool engine = t.frak_member(k, x);
        const bool brute = oracle::in_ring(frames.params[k + 1], x.exponents - product);
        r.require(engine == brute, "frak membership disagrees with the oracle");
        ++checks;
        if (k == 0) {
          r.require(engine, "x_t lies in m_0");
          continue;
        }
        bool centered = false;
        for (std::size_t m = 0; m < k; ++m) centered = centered || frames.centers[m] == s;
        r.require(engine == !centered, "per-frame criterion");
        all = all && engine;
      }
      bool centered = false;
      for (std::size_t m = 0; m < depth; ++m) centered = centered || frames.centers[m] == s;
      r.require(all == !centered, "aggregate criterion");
    }
    audit(t);
    ++towers;
  }
  r.detail = std::to_string(towers) + " towers, " + std::to_string(checks) + " memberships";
  return r;
}

Result step_identity() {
  Result r;
  std::mt19937_64 rng(4004);
  long triples = 0;
  for (int n = 0; triples < 12000; ++n) {
    const std::size_t d = 2 + n % 3;
    Tower t(d, n % 2 ? oracle::random_lex_weights(rng, d, 3)
                     : oracle::random_algebraic_weights(rng, d, {1, 2, 3, 5}));
    for (std::size_t i = 0; i < 30 && t.extend_to(i + 1); ++i) {
      const std::size_t j = *t.center(i);
      for (int p = 0; p < 4; ++p) {
        LaurentMonomial q{oracle::random_exponents(rng, d, -6, 6)};
        const ExponentVector u = t.frame_exponent(i, q);
        r.require(t.ord(i + 1, q) == 2 * t.ord(i, q) - u[j], "step identity");
        ++triples;
      }
    }
    audit(t);
  }
  r.detail = std::to_string(triples) + " triples";
  return r;
}

Result frame_integrity() {
  Result r;
  // Deeper towers on top of everything audited by the other criteria.
  std::mt19937_64 rng(5005);
  for (int n = 0; n < 40; ++n) {
    const std::size_t d = 2 + n % 4;
    Tower t(d, n % 2 ? oracle::random_lex_weights(rng, d, 3)
                     : oracle::random_algebraic_weights(rng, d, {1, 2, 3, 5, 6}));
    t.extend_to(300);
    audit(t);
  }
  for (const auto& f : g_integrity_failures) r.require(false, f);
  r.require(g_frames_audited > 0, "nothing audited");
  r.detail = std::to_string(g_frames_audited) + " frames audited";
  return r;
}

Result sign_sweep() {
  Result r;
  std::mt19937_64 rng(6006);
  const std::size_t horizon = 500;
  std::size_t latest = 0;
  int towers = 0, probes = 0;
  for (int n = 0; n < 100; ++n) {
    const std::size_t d = 2 + n % 2;
    Tower t(d, oracle::random_independent_weights(rng, d));
    if (!t.extend_to(horizon)) {
      r.require(false, "independent weights tied");
      continue;
    }
    for (int p = 0; p < 50; ++p) {
      LaurentMonomial q{oracle::random_exponents(rng, d, -3, 3)};
      std::vector<int> signs;
      if (p == 0) {
        signs = oracle::sign_probe_oracle(t, q.exponents, horizon);
      } else {
        for (std::size_t i = 0; i <= horizon; ++i) signs.push_back(sgn(t.ord(i, q)));
      }
      std::size_t last_change = 0;
      for (std::size_t i = 1; i < signs.size(); ++i) {
        if (signs[i] != signs[i - 1]) last_change = i;
      }
      latest = std::max(latest, last_change);
      // Eventually constant: no sign change in the second half of the horizon.
      r.require(last_change <= horizon / 2, "sign still changing at frame " +
                                                std::to_string(last_change) + " for " +
                                                q.to_string());
      ++probes;
    }
    audit(t);
    ++towers;
  }
  r.detail = std::to_string(towers) + " towers x 50 probes; latest sign change at frame " +
             std::to_string(latest);
  return r;
}

Result dimension_two() {
  Result r;
  Scenario s = load("dim2_sqrt2");
  RunReport run = run_scenario(s);
  r.require(run.exit_code() == 0, "dim2_sqrt2 exit code");
  r.require(fact_is(run.classification, "IsValuation", "", Status::certified_yes),
            "(1, sqrt 2) valuation");
  r.require(has_edge(run.classification, "R1", "IsValuation=certified_yes"), "R1 edge");

  Tower t(2, {WeightValue(LexTuple({Rational(2)})), WeightValue(LexTuple({Rational(3)}))});
  t.extend_to(10);
  r.require(t.status() == TowerStatus::terminated_tie && t.tie() && t.tie()->frame == 2,
            "(2, 3) ties at frame 2");
  AnalysisOptions o;
  o.horizon = 50;
  ShannonAnalysis a(t, o);
  auto report = a.classify_shannon();
  r.require(fact_is(report, "TowerFinite", "", Status::certified_yes), "TowerFinite");
  r.require(has_edge(report, "R2", "TowerFinite: no further classification"), "R2 edge");
  audit(t);
  r.detail = "(1, sqrt 2) valuation via R1; (2, 3) tie at frame 2";
  return r;
}

Result consistency() {
  Result r;
  std::size_t probes = 0;
  for (const char* name :
       {"nonarchimedean_lex", "archimedean_sqrt", "dim2_sqrt2", "dim2_tie", "delayed_principal"}) {
    RunReport run = run_scenario(load(name));
    for (const auto& v : run.violations) r.require(false, std::string(name) + ": " + v);
    probes += load(name).probes.size();
  }
  std::mt19937_64 rng(7007);
  int towers = 0;
  for (int n = 0; towers < 24; ++n) {
    const std::size_t d = 2 + n % 2;
    std::vector<WeightValue> w;
    switch (n % 3) {
      case 0: w = oracle::random_lex_weights(rng, d, 2); break;
      case 1: w = oracle::random_independent_weights(rng, d); break;
      default: w = oracle::random_algebraic_weights(rng, d, {1, 2, 3});
    }
    Tower t(d, w);
    AnalysisOptions o;
    o.horizon = 120;
    ShannonAnalysis a(t, o);
    if (a.terminated()) continue;
    std::vector<Probe> sample;
    for (int p = 0; p < 500; ++p) {
      LaurentMonomial q{oracle::random_exponents(rng, d, -3, 3)};
      Verdict s = a.member_S(q), v = a.member_V(q), tt = a.member_T(q);
      const bool bad = (s.yes() && (v.no() || tt.no())) || (s.no() && v.yes() && tt.yes());
      r.require(!bad, "S = V ∩ T contradicted at " + q.to_string());
      if (p < 10) sample.push_back(Probe{"p" + std::to_string(p), q});
      ++probes;
    }
    for (const auto& v : consistency_violations(a.classify_shannon(sample))) {
      r.require(false, "report violation: " + v);
    }
    audit(t);
    ++towers;
  }
  r.detail = std::to_string(probes) + " probes over 5 fixtures and " + std::to_string(towers) +
             " random towers";
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Result()> run;
  };
  // Frame integrity is reported after the others so it covers their towers.
  const std::vector<std::pair<int, Criterion>> criteria = {
      {1, {"non-archimedean lex fixture", nonarchimedean_fixture}},
      {2, {"archimedean fixture", archimedean_fixture}},
      {3, {"transform laws", transform_laws}},
      {4, {"engine/oracle agreement", oracle_agreement}},
      {5, {"frak ideals and centers", frak_ideals}},
      {6, {"step identity", step_identity}},
      {8, {"eventual sign sweep", sign_sweep}},
      {9, {"dimension two classification", dimension_two}},
      {10, {"consistency S = V ∩ T", consistency}},
      {7, {"frame integrity", frame_integrity}},
  };
  std::vector<std::string> lines(11);
  int failed = 0;
  for (const auto& [id, c] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Result res;
    try {
      res = c.run();
    } catch (const std::exception& e) {
      res.pass = false;
      res.failures.push_back(std::string("exception: ") + e.what());
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", seconds_since(start));
    std::string line = std::string(res.pass ? "PASS" : "FAIL") + " criterion " +
                       std::to_string(id) + " " + c.name + ": " + res.detail + " [" + secs + "]";
    for (const auto& f : res.failures) line += "\n    " + f;
    lines[id] = line;
    if (!res.pass) ++failed;
  }
  for (int id = 1; id <= 10; ++id) std::cout << lines[id] << "\n";
  std::cout << (failed ? "FAILED " + std::to_string(failed) + " of 10" : "all 10 criteria passed")
            << "\n";
  return failed ? 1 : 0;
}
