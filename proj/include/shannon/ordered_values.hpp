#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace shannon {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when values of different shape or mode are combined.
class ValueError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Ordering { less, equal, greater };
enum class Sign { negative = -1, zero = 0, positive = 1 };

const char* to_string(Ordering o);
const char* to_string(Sign s);

/// Element of Q^m ordered lexicographically (index 0 most significant).
class LexTuple {
 public:
  LexTuple() = default;
  explicit LexTuple(std::vector<Rational> coeffs);

  std::size_t length() const { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Sign sign() const;
  /// Index of the first nonzero coefficient, or length() for zero.
  std::size_t leading_index() const;

  LexTuple operator+(const LexTuple& o) const;
  LexTuple operator-(const LexTuple& o) const;
  LexTuple scaled(const Integer& k) const;

  bool operator==(const LexTuple& o) const { return coeffs_ == o.coeffs_; }

 private:
  void require_same_length(const LexTuple& o) const;
  std::vector<Rational> coeffs_;
};

/// Q-linear combination sum q_i * sqrt(n_i) over a fixed basis of distinct
/// squarefree positive integers. Zero iff every coefficient is zero.
class AlgebraicReal {
 public:
  AlgebraicReal() = default;
  AlgebraicReal(std::vector<std::uint64_t> basis, std::vector<Rational> coeffs);

  const std::vector<std::uint64_t>& basis() const { return basis_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Exact sign by interval refinement of the square roots, starting at 64
  /// fractional bits and doubling until the enclosure excludes zero.
  Sign sign() const;
  double approx() const;

  AlgebraicReal operator+(const AlgebraicReal& o) const;
  AlgebraicReal operator-(const AlgebraicReal& o) const;
  AlgebraicReal scaled(const Integer& k) const;

  bool operator==(const AlgebraicReal& o) const {
    return basis_ == o.basis_ && coeffs_ == o.coeffs_;
  }

 private:
  void require_same_basis(const AlgebraicReal& o) const;
  std::vector<std::uint64_t> basis_;
  std::vector<Rational> coeffs_;
};

/// Throws ValueError unless every entry is a distinct squarefree positive
/// integer and the list is strictly increasing.
void validate_basis(const std::vector<std::uint64_t>& basis);
bool is_squarefree(std::uint64_t n);

enum class ValueMode { lex, algebraic };
const char* to_string(ValueMode m);

/// A value of the driving valuation: one of the two supported ordered groups.
class WeightValue {
 public:
  WeightValue() = default;
  WeightValue(LexTuple v) : value_(std::move(v)) {}           // NOLINT
  WeightValue(AlgebraicReal v) : value_(std::move(v)) {}      // NOLINT

  static WeightValue zero_like(const WeightValue& shape);

  ValueMode mode() const;
  const LexTuple& lex() const;
  const AlgebraicReal& algebraic() const;

  Sign sign() const;
  bool is_positive() const { return sign() == Sign::positive; }

  WeightValue operator+(const WeightValue& o) const;
  WeightValue operator-(const WeightValue& o) const;
  WeightValue scaled(const Integer& k) const;

  bool same_shape(const WeightValue& o) const;
  bool operator==(const WeightValue& o) const { return value_ == o.value_; }

  std::string to_string() const;
  /// Rough double rendering for traces; lex mode returns the leading entry.
  double approx() const;

 private:
  std::variant<LexTuple, AlgebraicReal> value_;
};

Ordering compare(const WeightValue& a, const WeightValue& b);

/// Exact sum coeffs_i * values_i. Empty input is rejected (no shape to copy).
WeightValue linear_combine(const std::vector<Integer>& coeffs,
                           const std::vector<WeightValue>& values);

/// True iff n*a < b for every positive integer n. Requires a, b > 0.
bool is_infinitesimal(const WeightValue& a, const WeightValue& b);

/// Rank over Q of the coefficient vectors of the given values.
std::size_t rational_rank(const std::vector<WeightValue>& values);

Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& q);

}  // namespace shannon
