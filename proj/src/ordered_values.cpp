#include "shannon/ordered_values.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace shannon {

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::less: return "less";
    case Ordering::equal: return "equal";
    case Ordering::greater: return "greater";
  }
  return "?";
}

const char* to_string(Sign s) {
  switch (s) {
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
  }
  return "?";
}

const char* to_string(ValueMode m) {
  return m == ValueMode::lex ? "lex" : "algebraic";
}

namespace {

Sign sign_of(int s) {
  return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

}  // namespace

// ---------------------------------------------------------------- LexTuple

LexTuple::LexTuple(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
}

void LexTuple::require_same_length(const LexTuple& o) const {
  if (o.coeffs_.size() != coeffs_.size()) {
    throw ValueError("lex tuple length mismatch: " + std::to_string(coeffs_.size()) +
                     " vs " + std::to_string(o.coeffs_.size()));
  }
}

std::size_t LexTuple::leading_index() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return i;
  }
  return coeffs_.size();
}

Sign LexTuple::sign() const {
  auto i = leading_index();
  return i == coeffs_.size() ? Sign::zero : sign_of(sgn(coeffs_[i]));
}

LexTuple LexTuple::operator+(const LexTuple& o) const {
  require_same_length(o);
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeffs_[i] + o.coeffs_[i];
  return LexTuple(std::move(out));
}

LexTuple LexTuple::operator-(const LexTuple& o) const {
  require_same_length(o);
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeffs_[i] - o.coeffs_[i];
  return LexTuple(std::move(out));
}

LexTuple LexTuple::scaled(const Integer& k) const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeffs_[i] * Rational(k);
  return LexTuple(std::move(out));
}

// ----------------------------------------------------------- AlgebraicReal

bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

void validate_basis(const std::vector<std::uint64_t>& basis) {
  if (basis.empty()) throw ValueError("algebraic basis is empty");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!is_squarefree(basis[i])) {
      throw ValueError("basis entry " + std::to_string(basis[i]) + " is not squarefree");
    }
    if (i > 0 && basis[i] <= basis[i - 1]) {
      throw ValueError("basis must be strictly increasing");
    }
  }
}

AlgebraicReal::AlgebraicReal(std::vector<std::uint64_t> basis, std::vector<Rational> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  if (basis_.size() != coeffs_.size()) {
    throw ValueError("algebraic value: basis and coefficient lengths differ");
  }
  for (auto& c : coeffs_) c.canonicalize();
}

void AlgebraicReal::require_same_basis(const AlgebraicReal& o) const {
  if (o.basis_ != basis_) throw ValueError("algebraic basis mismatch");
}

Sign AlgebraicReal::sign() const {
  // Clear denominators: sign(sum q_i sqrt n_i) = sign(sum a_i sqrt n_i), a_i in Z.
  Integer lcm = 1;
  bool all_zero = true;
  for (const auto& q : coeffs_) {
    if (sgn(q) != 0) all_zero = false;
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  if (all_zero) return Sign::zero;

  std::vector<Integer> a(coeffs_.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = coeffs_[i].get_num() * (lcm / coeffs_[i].get_den());
  }

  // sqrt(n) lies in [s, s+1] / 2^p with s = floor(sqrt(n * 4^p)); exact when
  // n is a perfect square (only n = 1 for squarefree n).
  for (unsigned long bits = 64;; bits *= 2) {
    Integer lo = 0;
    Integer hi = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (sgn(a[i]) == 0) continue;
      Integer scaled = Integer(static_cast<unsigned long>(basis_[i]));
      mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
      Integer s;
      mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
      bool exact = s * s == scaled;
      Integer s_hi = exact ? s : s + 1;
      if (sgn(a[i]) > 0) {
        lo += a[i] * s;
        hi += a[i] * s_hi;
      } else {
        lo += a[i] * s_hi;
        hi += a[i] * s;
      }
    }
    if (sgn(lo) > 0) return Sign::positive;
    if (sgn(hi) < 0) return Sign::negative;
    // A nonzero coefficient vector never has value zero, so refinement ends.
  }
}

double AlgebraicReal::approx() const {
  // Deep frames carry huge coefficients that nearly cancel; size the working
  // precision to the coefficients so the double result stays meaningful.
  mp_bitcnt_t bits = 128;
  for (const auto& c : coeffs_) {
    bits = std::max<mp_bitcnt_t>(bits, 128 + 2 * (mpz_sizeinbase(c.get_num_mpz_t(), 2) +
                                                  mpz_sizeinbase(c.get_den_mpz_t(), 2)));
  }
  mpf_class out(0, bits);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    mpf_class root(basis_[i], bits);
    mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
    out += mpf_class(coeffs_[i], bits) * root;
  }
  return out.get_d();
}

AlgebraicReal AlgebraicReal::operator+(const AlgebraicReal& o) const {
  require_same_basis(o);
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeffs_[i] + o.coeffs_[i];
  return AlgebraicReal(basis_, std::move(out));
}

AlgebraicReal AlgebraicReal::operator-(const AlgebraicReal& o) const {
  require_same_basis(o);
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeffs_[i] - o.coeffs_[i];
  return AlgebraicReal(basis_, std::move(out));
}

AlgebraicReal AlgebraicReal::scaled(const Integer& k) const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeffs_[i] * Rational(k);
  return AlgebraicReal(basis_, std::move(out));
}

// ------------------------------------------------------------- WeightValue

ValueMode WeightValue::mode() const {
  return std::holds_alternative<LexTuple>(value_) ? ValueMode::lex : ValueMode::algebraic;
}

const LexTuple& WeightValue::lex() const {
  if (mode() != ValueMode::lex) throw ValueError("value is not in lex mode");
  return std::get<LexTuple>(value_);
}

const AlgebraicReal& WeightValue::algebraic() const {
  if (mode() != ValueMode::algebraic) throw ValueError("value is not in algebraic mode");
  return std::get<AlgebraicReal>(value_);
}

WeightValue WeightValue::zero_like(const WeightValue& shape) {
  if (shape.mode() == ValueMode::lex) {
    return LexTuple(std::vector<Rational>(shape.lex().length()));
  }
  const auto& a = shape.algebraic();
  return AlgebraicReal(a.basis(), std::vector<Rational>(a.basis().size()));
}

bool WeightValue::same_shape(const WeightValue& o) const {
  if (mode() != o.mode()) return false;
  if (mode() == ValueMode::lex) return lex().length() == o.lex().length();
  return algebraic().basis() == o.algebraic().basis();
}

Sign WeightValue::sign() const {
  return std::visit([](const auto& v) { return v.sign(); }, value_);
}

WeightValue WeightValue::operator+(const WeightValue& o) const {
  if (mode() != o.mode()) throw ValueError("value mode mismatch");
  if (mode() == ValueMode::lex) return lex() + o.lex();
  return algebraic() + o.algebraic();
}

WeightValue WeightValue::operator-(const WeightValue& o) const {
  if (mode() != o.mode()) throw ValueError("value mode mismatch");
  if (mode() == ValueMode::lex) return lex() - o.lex();
  return algebraic() - o.algebraic();
}

WeightValue WeightValue::scaled(const Integer& k) const {
  if (mode() == ValueMode::lex) return lex().scaled(k);
  return algebraic().scaled(k);
}

std::string WeightValue::to_string() const {
  std::ostringstream os;
  if (mode() == ValueMode::lex) {
    os << "(";
    const auto& c = lex().coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ",";
      os << rational_to_string(c[i]);
    }
    os << ")";
    return os.str();
  }
  const auto& a = algebraic();
  bool first = true;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const auto& q = a.coeffs()[i];
    if (sgn(q) == 0) continue;
    if (!first) os << (sgn(q) > 0 ? "+" : "");
    first = false;
    if (a.basis()[i] == 1) {
      os << rational_to_string(q);
    } else {
      if (q == 1) {
      } else if (q == -1) {
        os << "-";
      } else {
        os << rational_to_string(q) << "*";
      }
      os << "sqrt(" << a.basis()[i] << ")";
    }
  }
  if (first) os << "0";
  return os.str();
}

double WeightValue::approx() const {
  if (mode() == ValueMode::lex) {
    const auto& t = lex();
    auto i = t.leading_index();
    return i == t.length() ? 0.0 : t.coeffs()[i].get_d();
  }
  return algebraic().approx();
}

Ordering compare(const WeightValue& a, const WeightValue& b) {
  if (!a.same_shape(b)) throw ValueError("compare: values of different mode or shape");
  switch ((a - b).sign()) {
    case Sign::negative: return Ordering::less;
    case Sign::zero: return Ordering::equal;
    case Sign::positive: return Ordering::greater;
  }
  return Ordering::equal;
}

WeightValue linear_combine(const std::vector<Integer>& coeffs,
                           const std::vector<WeightValue>& values) {
  if (coeffs.size() != values.size()) {
    throw ValueError("linear_combine: coefficient and value counts differ");
  }
  if (values.empty()) throw ValueError("linear_combine: empty input");
  WeightValue out = WeightValue::zero_like(values.front());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i].same_shape(values.front())) {
      throw ValueError("linear_combine: values of different mode or shape");
    }
    if (sgn(coeffs[i]) == 0) continue;
    out = out + values[i].scaled(coeffs[i]);
  }
  return out;
}

bool is_infinitesimal(const WeightValue& a, const WeightValue& b) {
  if (!a.same_shape(b)) throw ValueError("is_infinitesimal: shape mismatch");
  if (!a.is_positive() || !b.is_positive()) {
    throw ValueError("is_infinitesimal: arguments must be positive");
  }
  if (a.mode() == ValueMode::algebraic) return false;
  return a.lex().leading_index() > b.lex().leading_index();
}

std::size_t rational_rank(const std::vector<WeightValue>& values) {
  if (values.empty()) return 0;
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : values) {
    rows.push_back(v.mode() == ValueMode::lex ? v.lex().coeffs() : v.algebraic().coeffs());
  }
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][c]) == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || sgn(q.get_den()) == 0) {
    throw ValueError("malformed rational: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace shannon
