#include "shannon/tower.hpp"

#include <sstream>

namespace shannon {

const char* to_string(TowerStatus s) {
  return s == TowerStatus::active ? "active" : "terminated_tie";
}

// --------------------------------------------------------------- IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExponentVector IntMatrix::column(std::size_t c) const {
  ExponentVector v(n_);
  for (std::size_t r = 0; r < n_; ++r) v[r] = at(r, c);
  return v;
}

ExponentVector IntMatrix::row(std::size_t r) const {
  ExponentVector v(n_);
  for (std::size_t c = 0; c < n_; ++c) v[c] = at(r, c);
  return v;
}

ExponentVector IntMatrix::apply(const ExponentVector& v) const {
  if (v.size() != n_) throw ValueError("matrix/vector size mismatch");
  ExponentVector out(n_, Integer(0));
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (sgn(v[c]) != 0) out[r] += at(r, c) * v[c];
    }
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t k = 0; k < n_; ++k) {
      if (sgn(at(r, k)) == 0) continue;
      for (std::size_t c = 0; c < n_; ++c) out.at(r, c) += at(r, k) * o.at(k, c);
    }
  }
  return out;
}

Integer IntMatrix::determinant() const {
  // Bareiss elimination; every intermediate division is exact.
  IntMatrix m = *this;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (sgn(m.at(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n_ && sgn(m.at(p, k)) == 0) ++p;
      if (p == n_) return 0;
      for (std::size_t c = 0; c < n_; ++c) std::swap(m.at(k, c), m.at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      for (std::size_t j = k + 1; j < n_; ++j) {
        Integer t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = t;
      }
    }
    prev = m.at(k, k);
  }
  return n_ == 0 ? Integer(1) : Integer(sign * m.at(n_ - 1, n_ - 1));
}

// ------------------------------------------------------------------- Tower

std::vector<std::size_t> argmin_slots(const std::vector<WeightValue>& weights) {
  std::vector<std::size_t> best{0};
  for (std::size_t k = 1; k < weights.size(); ++k) {
    switch (compare(weights[k], weights[best.front()])) {
      case Ordering::less: best = {k}; break;
      case Ordering::equal: best.push_back(k); break;
      case Ordering::greater: break;
    }
  }
  return best;
}

Tower::Tower(std::size_t d, std::vector<WeightValue> weights) : d_(d) {
  if (d < 2) throw ValueError("tower dimension must be at least 2, got " + std::to_string(d));
  if (weights.size() != d) {
    throw ValueError("expected " + std::to_string(d) + " weights, got " +
                     std::to_string(weights.size()));
  }
  for (std::size_t k = 0; k < d; ++k) {
    if (!weights[k].same_shape(weights.front())) {
      throw ValueError("weights mix modes or shapes");
    }
    if (!weights[k].is_positive()) {
      throw ValueError("weight of " + variable_name(d, k) + " is not positive: " +
                       weights[k].to_string());
    }
  }
  Frame f;
  f.index = 0;
  f.params = IntMatrix::identity(d);
  f.inverse = IntMatrix::identity(d);
  f.weights = std::move(weights);
  frames_.push_back(std::move(f));
}

bool Tower::step() {
  if (status_ != TowerStatus::active) {
    throw TowerError("cannot step a terminated tower");
  }
  Frame& cur = frames_.back();
  auto mins = argmin_slots(cur.weights);
  if (mins.size() > 1) {
    status_ = TowerStatus::terminated_tie;
    tie_ = TieInfo{cur.index, mins};
    return false;
  }
  const std::size_t j = mins.front();
  cur.center = j;

  Frame next;
  next.index = cur.index + 1;
  next.params = cur.params;
  for (std::size_t k = 0; k < d_; ++k) {
    if (k == j) continue;
    for (std::size_t r = 0; r < d_; ++r) next.params.at(r, k) -= cur.params.at(r, j);
  }
  next.inverse = cur.inverse;
  for (std::size_t c = 0; c < d_; ++c) {
    Integer s = 0;
    for (std::size_t r = 0; r < d_; ++r) s += cur.inverse.at(r, c);
    next.inverse.at(j, c) = s;
  }
  next.weights = cur.weights;
  for (std::size_t k = 0; k < d_; ++k) {
    if (k != j) next.weights[k] = cur.weights[k] - cur.weights[j];
  }

  ExponentVector prev_product =
      center_product_.empty() ? ExponentVector(d_, Integer(0)) : center_product_.back();
  center_product_.push_back(prev_product + cur.params.column(j));

  if (next.params * next.inverse != IntMatrix::identity(d_)) {
    throw TowerError("frame " + std::to_string(next.index) + ": inverse lost");
  }
  for (const auto& w : next.weights) {
    if (!w.is_positive()) {
      throw TowerError("frame " + std::to_string(next.index) + ": nonpositive weight");
    }
  }
  frames_.push_back(std::move(next));
  return true;
}

bool Tower::extend_to(std::size_t i) {
  while (frames_.size() <= i) {
    if (status_ != TowerStatus::active || !step()) return false;
  }
  return true;
}

const Frame& Tower::frame(std::size_t i) {
  if (!extend_to(i)) {
    throw TowerError("frame " + std::to_string(i) + " does not exist: tower terminated at frame " +
                     std::to_string(frames_.size() - 1));
  }
  return frames_[i];
}

const Frame& Tower::built_frame(std::size_t i) const {
  if (i >= frames_.size()) throw TowerError("frame " + std::to_string(i) + " not built");
  return frames_[i];
}

std::optional<std::size_t> Tower::center(std::size_t i) {
  frame(i);
  extend_to(i + 1);
  return frames_[i].center;
}

std::vector<std::size_t> Tower::center_history(std::size_t n) {
  extend_to(n);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n && i < frames_.size(); ++i) {
    if (!frames_[i].center) break;
    out.push_back(*frames_[i].center);
  }
  return out;
}

void Tower::require_dimension(const LaurentMonomial& q) const {
  if (q.dimension() != d_) {
    throw ValueError("monomial has " + std::to_string(q.dimension()) + " exponents, tower has " +
                     std::to_string(d_) + " variables");
  }
}

ExponentVector Tower::frame_exponent(std::size_t i, const LaurentMonomial& q) {
  require_dimension(q);
  return frame(i).inverse.apply(q.exponents);
}

Integer Tower::ord(std::size_t i, const LaurentMonomial& q) {
  return total_degree(frame_exponent(i, q));
}

bool Tower::member(std::size_t i, const LaurentMonomial& q) {
  return is_nonnegative(frame_exponent(i, q));
}

LaurentMonomial Tower::parameter(std::size_t i, std::size_t slot) {
  return {frame(i).params.column(slot)};
}

MonomialIdeal Tower::transform_step(const MonomialIdeal& ideal) {
  if (ideal.dimension() != d_) throw ValueError("ideal dimension mismatch");
  const std::size_t i = ideal.frame();
  auto j = center(i);
  if (!j) throw TowerError("frame " + std::to_string(i + 1) + " does not exist");
  const Integer e = ideal.order();
  std::vector<ExponentVector> gens;
  for (const auto& g : ideal.generators()) {
    ExponentVector moved = g;
    moved[*j] = total_degree(g) - e;
    gens.push_back(std::move(moved));
  }
  return MonomialIdeal(i + 1, std::move(gens));
}

TransformTrail Tower::transform_trail(const MonomialIdeal& seed, std::size_t steps) {
  TransformTrail trail{seed, {}, {}};
  MonomialIdeal cur = seed;
  for (std::size_t k = 0; k < steps; ++k) {
    trail.orders.push_back(cur.order());
    cur = transform_step(cur);
    trail.ideals.push_back(cur);
  }
  return trail;
}

bool Tower::frak_member(std::size_t k, const LaurentMonomial& q) {
  require_dimension(q);
  if (!is_nonnegative(q.exponents)) return false;
  const Frame& next = frame(k + 1);
  return is_nonnegative(next.inverse.apply(q.exponents - center_product_.at(k)));
}

bool Tower::direction_change(std::size_t i, std::size_t n) {
  if (i >= n) {
    throw ValueError("direction_change needs i < n (got " + std::to_string(i) + ", " +
                     std::to_string(n) + ")");
  }
  frame(n);
  for (std::size_t s = 0; s < d_; ++s) {
    if (ord(n, parameter(i, s)) < 2) return false;
  }
  return true;
}

std::string Tower::integrity_error(std::size_t i) const {
  const Frame& f = built_frame(i);
  std::ostringstream os;
  if (f.params.determinant() != 1) os << "det(C_" << i << ") != 1; ";
  if (f.params * f.inverse != IntMatrix::identity(d_)) os << "C*Cinv != I; ";
  if (f.inverse * f.params != IntMatrix::identity(d_)) os << "Cinv*C != I; ";
  const auto& w0 = frames_.front().weights;
  for (std::size_t j = 0; j < d_; ++j) {
    if (!f.weights[j].is_positive()) os << "weight " << j << " not positive; ";
    if (linear_combine(f.params.column(j), w0) != f.weights[j]) {
      os << "weight " << j << " disagrees with u(p_" << j << "); ";
    }
  }
  return os.str();
}

}  // namespace shannon
