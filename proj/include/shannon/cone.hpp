#pragma once

#include <optional>
#include <vector>

#include "shannon/ordered_values.hpp"

namespace shannon {

using RationalVector = std::vector<Rational>;

/// Nonnegative multipliers lambda with sum_k lambda_k * generators[k] == target,
/// found by an exact phase-one simplex with Bland's rule. Empty if target is
/// outside the cone spanned by the generators.
std::optional<RationalVector> cone_combination(const std::vector<RationalVector>& generators,
                                               const RationalVector& target);

/// Replays sum lambda_k generators[k] == target with every lambda_k >= 0.
bool check_combination(const std::vector<RationalVector>& generators,
                       const RationalVector& target, const RationalVector& lambda);

}  // namespace shannon
