#include "shannon/cone.hpp"

namespace shannon {

std::optional<RationalVector> cone_combination(const std::vector<RationalVector>& generators,
                                               const RationalVector& target) {
  const std::size_t rows = target.size();
  const std::size_t m = generators.size();
  for (const auto& g : generators) {
    if (g.size() != rows) throw ValueError("cone_combination: generator length mismatch");
  }
  // Columns: m structural variables, then one artificial per row, then rhs.
  const std::size_t cols = m + rows;
  std::vector<RationalVector> tab(rows, RationalVector(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    const bool flip = sgn(target[r]) < 0;
    for (std::size_t k = 0; k < m; ++k) tab[r][k] = flip ? -generators[k][r] : generators[k][r];
    tab[r][m + r] = 1;
    tab[r][cols] = flip ? -target[r] : target[r];
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = m + r;

  // Phase-one objective: minimize the sum of artificials. Reduced cost of a
  // column is -(sum of its entries over rows) for structural columns.
  auto reduced_cost = [&](std::size_t c) {
    Rational cost = c >= m ? Rational(1) : Rational(0);
    for (std::size_t r = 0; r < rows; ++r) {
      if (basis[r] >= m) cost -= tab[r][c];
    }
    return cost;
  };

  for (;;) {
    std::size_t entering = cols;
    for (std::size_t c = 0; c < cols; ++c) {
      bool in_basis = false;
      for (auto b : basis) in_basis = in_basis || b == c;
      if (!in_basis && sgn(reduced_cost(c)) < 0) {
        entering = c;
        break;
      }
    }
    if (entering == cols) break;

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (sgn(tab[r][entering]) <= 0) continue;
      Rational ratio = tab[r][cols] / tab[r][entering];
      if (leave == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == rows) break;  // unbounded direction; cannot happen in phase one

    Rational pivot = tab[leave][entering];
    for (auto& x : tab[leave]) x /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || sgn(tab[r][entering]) == 0) continue;
      Rational f = tab[r][entering];
      for (std::size_t c = 0; c <= cols; ++c) tab[r][c] -= f * tab[leave][c];
    }
    basis[leave] = entering;
  }

  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] >= m && sgn(tab[r][cols]) != 0) return std::nullopt;
  }
  RationalVector lambda(m);
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < m) lambda[basis[r]] = tab[r][cols];
  }
  if (!check_combination(generators, target, lambda)) return std::nullopt;
  return lambda;
}

bool check_combination(const std::vector<RationalVector>& generators,
                       const RationalVector& target, const RationalVector& lambda) {
  if (lambda.size() != generators.size()) return false;
  RationalVector sum(target.size());
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (sgn(lambda[k]) < 0) return false;
    if (generators[k].size() != target.size()) return false;
    for (std::size_t r = 0; r < target.size(); ++r) sum[r] += lambda[k] * generators[k][r];
  }
  return sum == target;
}

}  // namespace shannon
