#include <doctest.h>

#include <algorithm>
#include <functional>

#include <json.hpp>

#include "helpers.hpp"
#include "shannon/report.hpp"

using namespace testing;
using nlohmann::json;

namespace {

const char* kBase = R"({
  "format": "shannon-scenario", "version": 1, "name": "t",
  "dimension": 2, "mode": "lex", "lex_length": 2,
  "weights": [[1, 0], [0, 1]]
})";

std::vector<std::string> errors_of(const json& doc) {
  try {
    parse_scenario(doc.dump());
  } catch (const ScenarioError& e) {
    return e.errors();
  }
  return {};
}

bool mentions(const std::vector<std::string>& errors, const std::string& needle) {
  return std::any_of(errors.begin(), errors.end(),
                     [&](const std::string& e) { return e.find(needle) != std::string::npos; });
}

void collect_citations(const json& j, std::vector<std::string>& out) {
  if (j.is_object()) {
    if (j.contains("citation") && j["citation"].is_string()) out.push_back(j["citation"]);
    for (const auto& [k, v] : j.items()) collect_citations(v, out);
  } else if (j.is_array()) {
    for (const auto& v : j) collect_citations(v, out);
  }
}

}  // namespace

TEST_CASE("fixtures parse") {
  Scenario s = fixture("nonarchimedean_lex");
  CHECK(s.dimension == 3);
  CHECK(s.mode == ValueMode::lex);
  CHECK(s.lex_length == 2);
  CHECK(s.weights == std::vector<std::vector<Rational>>{{0, 1}, {1, 0}, {1, 1}});
  Scenario a = fixture("archimedean_sqrt");
  CHECK(a.mode == ValueMode::algebraic);
  CHECK(a.basis == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(a.weights == std::vector<std::vector<Rational>>{{1, 0, 0}, {0, 1, 0}, {2, 0, 1}});
  CHECK(a.hints == std::vector<LinearForm>{{-1, -1, 1}});
}

TEST_CASE("validation errors are collected") {
  json base = json::parse(kBase);
  CHECK(errors_of(base).empty());

  json zero = base;
  zero["weights"] = {{0, 0}, {1, 0}};
  CHECK(mentions(errors_of(zero), "not positive"));

  json mode = base;
  mode["mode"] = "padic";
  CHECK(mentions(errors_of(mode), "unknown mode"));

  json probe = base;
  probe["probes"] = {{{"name", "q"}, {"exponents", {1, 2, 3}}}};
  CHECK(mentions(errors_of(probe), "malformed monomial"));

  json dangling = base;
  dangling["assertions"] = {{{"fact", "InS"}, {"probe", "nope"}, {"expect", "certified_yes"}}};
  CHECK(mentions(errors_of(dangling), "dangling probe"));

  json unknown = base;
  unknown["assertions"] = {{{"fact", "IsNice"}, {"expect", "certified_yes"}}};
  CHECK(mentions(errors_of(unknown), "unknown fact"));

  json many = base;
  many["mode"] = "padic";
  many["dimension"] = 1;
  many["version"] = 7;
  CHECK(errors_of(many).size() >= 3);

  json basis = base;
  basis["mode"] = "algebraic";
  basis["basis"] = {1, 4};
  basis["weights"] = {{1, 0}, {0, 1}};
  CHECK_FALSE(errors_of(basis).empty());

  CHECK_THROWS_AS(parse_scenario("{not json"), ScenarioError);
}

TEST_CASE("round trip") {
  for (const char* name :
       {"nonarchimedean_lex", "archimedean_sqrt", "dim2_sqrt2", "dim2_tie", "delayed_principal"}) {
    Scenario s = fixture(name);
    std::string text = serialize_scenario(s);
    Scenario again = parse_scenario(text);
    CHECK(again == s);
    CHECK(serialize_scenario(again) == text);
  }
}

TEST_CASE("fixtures pass and reports are deterministic") {
  for (const char* name :
       {"nonarchimedean_lex", "archimedean_sqrt", "dim2_sqrt2", "dim2_tie", "delayed_principal"}) {
    Scenario s = fixture(name);
    RunReport r = run_scenario(s);
    CHECK_MESSAGE(r.exit_code() == 0, name, "\n", render_text(r));
    CHECK(r.violations.empty());
    std::string first = render_machine(r);
    std::string second = render_machine(run_scenario(s));
    CHECK(std::hash<std::string>{}(first) == std::hash<std::string>{}(second));
    CHECK(first == second);
  }
}

TEST_CASE("every citation in a report is a known anchor") {
  const auto& known = known_citations();
  for (const char* name : {"nonarchimedean_lex", "archimedean_sqrt", "dim2_sqrt2", "dim2_tie"}) {
    json doc = json::parse(render_machine(run_scenario(fixture(name))));
    std::vector<std::string> cites;
    collect_citations(doc, cites);
    for (const auto& f : doc["facts"]) {
      if (f["status"] == "certified_yes" || f["status"] == "certified_no") {
        CHECK_FALSE(f["citations"].empty());
        for (const auto& c : f["citations"]) cites.push_back(c);
      }
    }
    CHECK_FALSE(cites.empty());
    for (const auto& c : cites) {
      CHECK_MESSAGE(std::find(known.begin(), known.end(), c) != known.end(), c);
    }
  }
}

TEST_CASE("exit codes") {
  Scenario s = fixture("nonarchimedean_lex");
  s.assertions = {Assertion{"IsValuation", {}, {}, {}, {}, Status::certified_yes, {}, {}}};
  CHECK(run_scenario(s).exit_code() == 1);

  Scenario delayed = fixture("delayed_principal");
  RunOptions zero;
  zero.horizon = 0;
  CHECK(run_scenario(delayed, zero).exit_code() == 2);
  zero.undecided_ok = true;
  CHECK(run_scenario(delayed, zero).exit_code() == 0);

  RunOptions huge;
  huge.horizon = kHorizonCap + 1;
  CHECK_THROWS_AS(run_scenario(s, huge), ResourceCapError);
}

TEST_CASE("trace") {
  Scenario s = fixture("nonarchimedean_lex");
  Trace t = trace(s, 3);
  REQUIRE(t.rows.size() == 4);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(t.rows[i].center == std::optional<std::size_t>(0));
    CHECK(t.rows[i].params[1] == mono({-static_cast<long>(i), 1, 0}));
    CHECK(t.rows[i].params[2] == mono({-static_cast<long>(i), 0, 1}));
  }
  Trace a = trace(fixture("archimedean_sqrt"), 5);
  std::vector<std::size_t> centers;
  for (const auto& row : a.rows) {
    if (row.center) centers.push_back(*row.center);
  }
  CHECK(centers == std::vector<std::size_t>{0, 1, 1, 0, 0});
  Trace tie = trace(fixture("dim2_tie"), 10);
  REQUIRE(tie.tie);
  CHECK(tie.tie->frame == 2);
  CHECK(tie.rows.size() == 3);
  CHECK(render_trace_text(tie, 2).find("tie at frame 2") != std::string::npos);
  CHECK(render_trace_machine(a, 3) == render_trace_machine(trace(fixture("archimedean_sqrt"), 5), 3));
}
