#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shannon/monomial.hpp"
#include "shannon/ordered_values.hpp"

namespace shannon {

/// Square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, Integer(0)) {}
  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Integer& at(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  ExponentVector column(std::size_t c) const;
  ExponentVector row(std::size_t r) const;
  ExponentVector apply(const ExponentVector& v) const;
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const { return n_ == o.n_ && data_ == o.data_; }

  /// Exact determinant (fraction-free elimination).
  Integer determinant() const;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> data_;
};

/// Monomial presentation of R_i: column j of `params` is the exponent vector
/// (in the original variables) of the regular parameter p_j.
struct Frame {
  std::size_t index = 0;
  IntMatrix params;
  IntMatrix inverse;
  std::vector<WeightValue> weights;
  std::optional<std::size_t> center;  // slot used for the step to index + 1
};

enum class TowerStatus { active, terminated_tie };

struct TieInfo {
  std::size_t frame = 0;
  std::vector<std::size_t> slots;
};

class TowerError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Ideal transforms of a seed ideal along consecutive frames.
struct TransformTrail {
  MonomialIdeal seed;
  std::vector<MonomialIdeal> ideals;  // ideals[k] lives at frame seed.frame() + k + 1
  std::vector<Integer> orders;        // orders[k] = ord of the ideal transformed at step k
};

/// The quadratic sequence {R_i} along a monomial valuation. Frames are
/// memoized and extended on demand; a single writer extends, finished frames
/// are immutable.
class Tower {
 public:
  /// Builds R_0. Requires d >= 2 and d positive weights of a single shape.
  Tower(std::size_t d, std::vector<WeightValue> weights);

  std::size_t dimension() const { return d_; }
  ValueMode mode() const { return frames_.front().weights.front().mode(); }
  TowerStatus status() const { return status_; }
  const std::optional<TieInfo>& tie() const { return tie_; }
  const std::vector<WeightValue>& initial_weights() const { return frames_.front().weights; }

  /// Number of frames built so far (indices 0 .. size()-1).
  std::size_t size() const { return frames_.size(); }

  /// Local quadratic transform along the valuation. On a tied argmin the tower
  /// terminates instead and false is returned. Throws on a terminated tower.
  bool step();

  /// Extends to frame i if possible; false when the tower terminated earlier.
  bool extend_to(std::size_t i);

  /// Frame i, extending lazily. Throws TowerError if frame i cannot exist.
  const Frame& frame(std::size_t i);
  const Frame& built_frame(std::size_t i) const;

  /// Center slot at frame i (extends to frame i+1). Empty if terminated there.
  std::optional<std::size_t> center(std::size_t i);
  /// Centers of steps 0 .. n-1 (fewer if the tower terminated).
  std::vector<std::size_t> center_history(std::size_t n);

  /// u with C_i u = v: the exponents of q in the parameters of R_i.
  ExponentVector frame_exponent(std::size_t i, const LaurentMonomial& q);
  /// ord_{R_i}(q) = sum of frame exponents.
  Integer ord(std::size_t i, const LaurentMonomial& q);
  bool member(std::size_t i, const LaurentMonomial& q);
  /// Parameter p_slot of R_i as a monomial in the original variables.
  LaurentMonomial parameter(std::size_t i, std::size_t slot);

  /// I^{R_{i+1}} = p_j^{-e} I R_{i+1}, e = ord(I), for I at frame i.
  MonomialIdeal transform_step(const MonomialIdeal& ideal);
  /// Iterates transform_step from the seed's frame for `steps` steps.
  TransformTrail transform_trail(const MonomialIdeal& seed, std::size_t steps);

  /// q in R ∩ m_0 m_1 ... m_k R_{k+1}.
  bool frak_member(std::size_t k, const LaurentMonomial& q);
  /// Change of direction between R_i and R_n: m_i ⊆ m_n^2.
  bool direction_change(std::size_t i, std::size_t n);

  /// Recomputes det(C_i) = 1, C_i * Cinv_i = I, integrality and positivity of
  /// weights and their agreement with the original weights. Empty on success.
  std::string integrity_error(std::size_t i) const;

 private:
  void require_dimension(const LaurentMonomial& q) const;

  std::size_t d_;
  std::vector<Frame> frames_;
  // center_product_[k] = original exponents of the product of the centers of
  // steps 0..k, a generator of m_0 ... m_k R_{k+1}.
  std::vector<ExponentVector> center_product_;
  TowerStatus status_ = TowerStatus::active;
  std::optional<TieInfo> tie_;
};

const char* to_string(TowerStatus s);

/// Unique argmin slot of a weight vector, or all tied minimal slots.
std::vector<std::size_t> argmin_slots(const std::vector<WeightValue>& weights);

}  // namespace shannon
