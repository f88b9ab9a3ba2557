#include "shannon/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace shannon {

using nlohmann::json;

namespace {

json exponents_json(const ExponentVector& v) {
  json out = json::array();
  for (const auto& e : v) {
    if (e.fits_slong_p()) {
      out.push_back(e.get_si());
    } else {
      out.push_back(e.get_str());
    }
  }
  return out;
}

json rationals_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(rational_to_string(q));
  return out;
}

json cert_json(const Certificate& c) {
  json j;
  j["kind"] = to_string(c.kind);
  j["scope"] = c.scope;
  j["citation"] = c.citation;
  j["claim"] = c.claim;
  if (!c.slots.empty()) j["slots"] = c.slots;
  if (!c.forms.empty()) {
    json forms = json::array();
    for (const auto& f : c.forms) forms.push_back(exponents_json(f));
    j["forms"] = forms;
  }
  if (!c.exclusions.empty()) {
    json ex = json::array();
    for (const auto& e : c.exclusions) {
      ex.push_back({{"slot", e.slot}, {"below", e.below}, {"lambda", rationals_json(e.lambda)}});
    }
    j["exclusions"] = ex;
  }
  if (!c.closures.empty()) {
    json cl = json::array();
    for (const auto& e : c.closures) {
      cl.push_back({{"form", e.form},
                    {"slot", e.slot},
                    {"kind", e.kind == ClosureKind::cone ? "cone" : "block_order"},
                    {"lambda", rationals_json(e.lambda)}});
    }
    j["closures"] = cl;
  }
  if (c.monomial) j["monomial"] = exponents_json(c.monomial->exponents);
  if (!c.exponent.empty()) j["exponent"] = exponents_json(c.exponent);
  if (c.kind == CertificateKind::order_refutation) j["witness_frame"] = c.witness_frame;
  if (c.kind == CertificateKind::order_refutation || c.kind == CertificateKind::center_drift ||
      c.kind == CertificateKind::fixed_coordinate || c.kind == CertificateKind::center_event) {
    j["witness_slot"] = c.witness_slot;
  }
  if (!c.fates.empty()) {
    json fates = json::array();
    for (const auto& f : c.fates) {
      json e = {{"fate", to_string(f.fate)}};
      if (f.fate == SlotFate::last_centered) e["last_step"] = f.last_step;
      fates.push_back(e);
    }
    j["fates"] = fates;
  }
  if (c.kind == CertificateKind::ring_membership) j["strict"] = c.strict;
  if (!c.premises.empty()) {
    json ps = json::array();
    for (const auto& p : c.premises) ps.push_back(cert_json(p));
    j["premises"] = ps;
  }
  return j;
}

json verdict_json(const Verdict& v) {
  json j;
  j["status"] = to_string(v.status);
  j["value"] = v.value;
  j["detail"] = v.detail;
  j["citations"] = v.citations;
  json certs = json::array();
  for (const auto& c : v.certificates) certs.push_back(cert_json(c));
  j["certificates"] = certs;
  return j;
}

std::string slot_list(const std::vector<std::size_t>& slots, std::size_t d) {
  std::string out;
  for (std::size_t s : slots) out += (out.empty() ? "" : ",") + variable_name(d, s);
  return out;
}

}  // namespace

std::string certificate_json(const Certificate& cert) { return cert_json(cert).dump(); }

std::string render_machine(const RunReport& r) {
  json doc;
  doc["format"] = "shannon-report";
  doc["version"] = 1;
  doc["scenario"] = r.scenario;
  doc["horizon"] = r.horizon;

  json tower;
  tower["dimension"] = r.tower.dimension;
  tower["mode"] = to_string(r.tower.mode);
  tower["status"] = to_string(r.tower.status);
  tower["frames"] = r.tower.frames;
  tower["centers"] = r.tower.centers;
  if (r.tower.tie) {
    tower["tie"] = {{"frame", r.tower.tie->frame}, {"slots", r.tower.tie->slots}};
  } else {
    tower["tie"] = nullptr;
  }
  doc["tower"] = tower;
  doc["regime"] = r.regime ? cert_json(*r.regime) : json(nullptr);

  json facts = json::array();
  for (const auto& f : r.classification.facts) {
    json j = verdict_json(f.verdict);
    j["kind"] = f.kind;
    j["argument"] = f.argument;
    facts.push_back(j);
  }
  doc["facts"] = facts;

  json edges = json::array();
  for (const auto& e : r.classification.edges) {
    edges.push_back({{"rule", e.rule},
                     {"citation", e.citation},
                     {"premises", e.premises},
                     {"conclusion", e.conclusion}});
  }
  doc["inferences"] = edges;

  json asserts = json::array();
  for (const auto& a : r.assertions) {
    json j;
    j["label"] = a.label;
    j["expect"] = to_string(a.assertion.expect);
    j["outcome"] = to_string(a.outcome);
    j["message"] = a.message;
    j["verdict"] = verdict_json(a.verdict);
    asserts.push_back(j);
  }
  doc["assertions"] = asserts;
  doc["consistency"] = {{"violations", r.violations}};
  doc["summary"] = {{"passed", r.count(Outcome::pass)},
                    {"failed", r.count(Outcome::fail)},
                    {"undecided", r.count(Outcome::undecided)},
                    {"exit_code", r.exit_code()}};
  return doc.dump(2) + "\n";
}

std::string render_text(const RunReport& r) {
  std::ostringstream os;
  const std::size_t d = r.tower.dimension;
  os << "scenario " << (r.scenario.empty() ? "(unnamed)" : r.scenario) << "\n";
  os << "tower: d=" << d << " mode=" << to_string(r.tower.mode) << " status="
     << to_string(r.tower.status) << " frames=" << r.tower.frames << " horizon=" << r.horizon
     << "\n";
  if (r.tower.tie) {
    os << "  tie at frame " << r.tower.tie->frame << " between {"
       << slot_list(r.tower.tie->slots, d) << "}\n";
  }
  if (!r.tower.centers.empty()) {
    os << "  centers:";
    for (std::size_t c : r.tower.centers) os << " " << variable_name(d, c);
    os << (r.tower.frames > r.tower.centers.size() + 1 ? " ..." : "") << "\n";
  }
  if (r.regime) os << "  regime: " << r.regime->claim << "\n";

  os << "\nfacts\n";
  for (const auto& f : r.classification.facts) {
    std::string name = f.kind + (f.argument.empty() ? "" : "(" + f.argument + ")");
    os << "  " << std::left << std::setw(34) << name << std::setw(15)
       << to_string(f.verdict.status) << f.verdict.value;
    if (!f.verdict.citations.empty()) {
      os << "  [";
      for (std::size_t k = 0; k < f.verdict.citations.size(); ++k) {
        os << (k ? ", " : "") << f.verdict.citations[k];
      }
      os << "]";
    }
    if (!f.verdict.detail.empty()) os << "  " << f.verdict.detail;
    os << "\n";
  }
  if (!r.classification.edges.empty()) {
    os << "\ninferences\n";
    for (const auto& e : r.classification.edges) {
      os << "  " << e.rule << " [" << e.citation << "]: ";
      for (std::size_t k = 0; k < e.premises.size(); ++k) os << (k ? ", " : "") << e.premises[k];
      os << " => " << e.conclusion << "\n";
    }
  }
  if (!r.assertions.empty()) {
    os << "\nassertions\n";
    for (const auto& a : r.assertions) {
      os << "  " << std::left << std::setw(10) << to_string(a.outcome) << a.label
         << " expect " << to_string(a.assertion.expect) << " got "
         << to_string(a.verdict.status);
      if (!a.verdict.value.empty()) os << " (" << a.verdict.value << ")";
      if (!a.message.empty()) os << ": " << a.message;
      os << "\n";
    }
  }
  os << "\nconsistency: "
     << (r.violations.empty() ? "no violations" : std::to_string(r.violations.size()) + " violation(s)")
     << "\n";
  for (const auto& v : r.violations) os << "  " << v << "\n";
  os << "summary: " << r.count(Outcome::pass) << " passed, " << r.count(Outcome::fail)
     << " failed, " << r.count(Outcome::undecided) << " undecided; exit " << r.exit_code() << "\n";
  return os.str();
}

std::string render_trace_machine(const Trace& t, std::size_t d) {
  json doc;
  doc["format"] = "shannon-trace";
  doc["version"] = 1;
  doc["probes"] = t.probe_names;
  json rows = json::array();
  for (const auto& row : t.rows) {
    json j;
    j["frame"] = row.frame;
    j["center"] = row.center ? json(variable_name(d, *row.center)) : json(nullptr);
    json ws = json::array();
    for (const auto& w : row.weights) ws.push_back(w.to_string());
    j["weights"] = ws;
    json ps = json::array();
    for (const auto& p : row.params) ps.push_back(exponents_json(p.exponents));
    j["params"] = ps;
    json ords = json::array();
    for (const auto& o : row.probe_ords) ords.push_back(o.get_str());
    j["probe_ords"] = ords;
    rows.push_back(j);
  }
  doc["rows"] = rows;
  doc["tie"] = t.tie ? json{{"frame", t.tie->frame}, {"slots", t.tie->slots}} : json(nullptr);
  return doc.dump(2) + "\n";
}

std::string render_trace_text(const Trace& t, std::size_t d) {
  // Cells first, so every column is as wide as its longest entry.
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header = {"frame", "center"};
  for (std::size_t k = 0; k < d; ++k) header.push_back("p_" + variable_name(d, k));
  for (const auto& n : t.probe_names) header.push_back("ord " + n);
  table.push_back(header);
  std::vector<std::string> weights = {"weights"};
  for (const auto& row : t.rows) {
    std::vector<std::string> cells = {std::to_string(row.frame),
                                      row.center ? variable_name(d, *row.center) : "-"};
    for (const auto& p : row.params) cells.push_back(p.to_string());
    for (const auto& o : row.probe_ords) cells.push_back(o.get_str());
    table.push_back(cells);
    std::string w;
    for (std::size_t k = 0; k < row.weights.size(); ++k) {
      w += (k ? "  " : "") + row.weights[k].to_string();
    }
    weights.push_back(w);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& cells : table) {
    for (std::size_t c = 0; c < cells.size(); ++c) width[c] = std::max(width[c], cells[c].size());
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < table.size(); ++r) {
    for (std::size_t c = 0; c < table[r].size(); ++c) {
      os << std::left << std::setw(static_cast<int>(width[c] + 2)) << table[r][c];
    }
    os << weights[r] << "\n";
  }
  if (t.tie) {
    os << "tie at frame " << t.tie->frame << " between {" << slot_list(t.tie->slots, d)
       << "}: sequence ends\n";
  }
  return os.str();
}

}  // namespace shannon
