#include "shannon/monomial.hpp"

#include <algorithm>
#include <sstream>

namespace shannon {

namespace {

void require_same_length(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) {
    throw ValueError("exponent length mismatch: " + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()));
  }
}

}  // namespace

ExponentVector make_exponents(std::initializer_list<long> entries) {
  ExponentVector v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

ExponentVector unit_vector(std::size_t d, std::size_t slot) {
  ExponentVector v(d, Integer(0));
  v.at(slot) = 1;
  return v;
}

std::string to_string(const ExponentVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].get_str();
  }
  os << ")";
  return os.str();
}

Integer total_degree(const ExponentVector& v) {
  Integer s = 0;
  for (const auto& e : v) s += e;
  return s;
}

bool is_nonnegative(const ExponentVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& e) { return sgn(e) >= 0; });
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

ExponentVector operator-(const ExponentVector& a) {
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

ExponentVector scaled(const ExponentVector& a, const Integer& k) {
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * k;
  return out;
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool LaurentMonomial::is_one() const {
  return std::all_of(exponents.begin(), exponents.end(),
                     [](const Integer& e) { return sgn(e) == 0; });
}

std::string variable_name(std::size_t d, std::size_t slot) {
  if (d <= 3) return std::string(1, "xyz"[slot]);
  return "x" + std::to_string(slot + 1);
}

std::string LaurentMonomial::to_string() const {
  std::ostringstream num;
  std::ostringstream den;
  int num_terms = 0;
  int den_terms = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const auto& e = exponents[i];
    if (sgn(e) == 0) continue;
    auto& os = sgn(e) > 0 ? num : den;
    auto& count = sgn(e) > 0 ? num_terms : den_terms;
    Integer mag = abs(e);
    if (count++) os << "*";
    os << variable_name(exponents.size(), i);
    if (mag != 1) os << "^" << mag.get_str();
  }
  std::string out = num_terms ? num.str() : "1";
  if (den_terms) {
    out += "/";
    out += den_terms > 1 ? "(" + den.str() + ")" : den.str();
  }
  return out;
}

std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens) {
  for (const auto& g : gens) {
    if (!is_nonnegative(g)) {
      throw ValueError("minimalize: negative exponent in " + to_string(g));
    }
    if (g.size() != gens.front().size()) throw ValueError("minimalize: length mismatch");
  }
  // Sorting by total degree first means a divisor always precedes its
  // multiples, so a single forward pass keeps exactly the minimal elements.
  std::sort(gens.begin(), gens.end(), [](const ExponentVector& a, const ExponentVector& b) {
    auto da = total_degree(a);
    auto db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExponentVector> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const ExponentVector& k) { return divides(k, g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

MonomialIdeal::MonomialIdeal(std::size_t frame, std::vector<ExponentVector> generators)
    : frame_(frame) {
  if (generators.empty()) throw ValueError("monomial ideal needs at least one generator");
  generators_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(std::size_t frame, std::size_t d) {
  return MonomialIdeal(frame, {ExponentVector(d, Integer(0))});
}

MonomialIdeal MonomialIdeal::maximal(std::size_t frame, std::size_t d) {
  std::vector<ExponentVector> gens;
  for (std::size_t s = 0; s < d; ++s) gens.push_back(unit_vector(d, s));
  return MonomialIdeal(frame, std::move(gens));
}

bool MonomialIdeal::is_unit() const {
  return generators_.size() == 1 && total_degree(generators_.front()) == 0;
}

bool MonomialIdeal::contains(const ExponentVector& u) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const ExponentVector& g) { return divides(g, u); });
}

Integer MonomialIdeal::order() const {
  Integer best = total_degree(generators_.front());
  for (const auto& g : generators_) best = std::min(best, total_degree(g));
  return best;
}

MonomialIdeal MonomialIdeal::product(const MonomialIdeal& o) const {
  if (o.frame_ != frame_) throw ValueError("product of ideals from different frames");
  std::vector<ExponentVector> gens;
  for (const auto& a : generators_) {
    for (const auto& b : o.generators_) gens.push_back(a + b);
  }
  return MonomialIdeal(frame_, std::move(gens));
}

std::string MonomialIdeal::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) os << ",";
    os << shannon::to_string(generators_[i]);
  }
  os << ">@" << frame_;
  return os.str();
}

bool ideal_member(const ExponentVector& u, const MonomialIdeal& ideal) {
  if (u.size() != ideal.dimension()) throw ValueError("ideal_member: length mismatch");
  return ideal.contains(u);
}

}  // namespace shannon
