#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "shannon/scenario.hpp"
#include "shannon/tower.hpp"

namespace testing {

using namespace shannon;

inline WeightValue lex(std::initializer_list<long> c) {
  std::vector<Rational> q;
  for (long x : c) q.emplace_back(x);
  return LexTuple(q);
}

inline WeightValue alg(std::vector<std::uint64_t> basis, std::initializer_list<long> c) {
  std::vector<Rational> q;
  for (long x : c) q.emplace_back(x);
  return AlgebraicReal(std::move(basis), q);
}

inline LaurentMonomial mono(std::initializer_list<long> e) { return {make_exponents(e)}; }

/// Lex tower with y, z infinitely larger than x.
inline Tower nonarchimedean_tower() {
  return Tower(3, {lex({0, 1}), lex({1, 0}), lex({1, 1})});
}

/// Weights 1, sqrt 2, 2 + sqrt 3 over basis {1, 2, 3}.
inline Tower archimedean_tower() {
  return Tower(3, {alg({1, 2, 3}, {1, 0, 0}), alg({1, 2, 3}, {0, 1, 0}),
                   alg({1, 2, 3}, {2, 0, 1})});
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Scenario fixture(const std::string& name) {
  return parse_scenario(read_file(std::string(FIXTURE_DIR) + "/" + name + ".json"));
}

}  // namespace testing
