#pragma once

#include <string>
#include <vector>

#include "shannon/ordered_values.hpp"

namespace shannon {

using ExponentVector = std::vector<Integer>;

ExponentVector make_exponents(std::initializer_list<long> entries);
ExponentVector unit_vector(std::size_t d, std::size_t slot);
std::string to_string(const ExponentVector& v);

Integer total_degree(const ExponentVector& v);
bool is_nonnegative(const ExponentVector& v);
ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);
ExponentVector operator-(const ExponentVector& a);
ExponentVector scaled(const ExponentVector& a, const Integer& k);

/// a <= b componentwise.
bool divides(const ExponentVector& a, const ExponentVector& b);

/// x^v over the original variables x_1..x_d; negative entries allowed.
struct LaurentMonomial {
  ExponentVector exponents;

  std::size_t dimension() const { return exponents.size(); }
  bool is_one() const;
  LaurentMonomial inverse() const { return {-exponents}; }
  LaurentMonomial operator*(const LaurentMonomial& o) const {
    return {exponents + o.exponents};
  }
  LaurentMonomial pow(const Integer& k) const { return {scaled(exponents, k)}; }
  bool operator==(const LaurentMonomial& o) const { return exponents == o.exponents; }

  /// Readable form over variables named x, y, z (d <= 3) or x1..xd.
  std::string to_string() const;
};

std::string variable_name(std::size_t d, std::size_t slot);

/// Minimal antichain generating the same monomial ideal; sorted, so equal
/// ideals get identical generator lists. Rejects negative entries.
std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens);

/// Monomial ideal of the regular parameters of one frame. Exponents are
/// relative to that frame's parameters.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t frame, std::vector<ExponentVector> generators);

  static MonomialIdeal unit(std::size_t frame, std::size_t d);
  /// The maximal ideal of the frame: all parameters.
  static MonomialIdeal maximal(std::size_t frame, std::size_t d);

  std::size_t frame() const { return frame_; }
  std::size_t dimension() const { return generators_.front().size(); }
  const std::vector<ExponentVector>& generators() const { return generators_; }

  bool is_unit() const;
  bool contains(const ExponentVector& u) const;
  /// Least total degree of a generator: the order of the ideal.
  Integer order() const;

  MonomialIdeal product(const MonomialIdeal& o) const;

  bool operator==(const MonomialIdeal& o) const {
    return frame_ == o.frame_ && generators_ == o.generators_;
  }

  std::string to_string() const;

 private:
  std::size_t frame_;
  std::vector<ExponentVector> generators_;
};

/// Membership of a nonnegative exponent u in I.
bool ideal_member(const ExponentVector& u, const MonomialIdeal& ideal);

}  // namespace shannon
