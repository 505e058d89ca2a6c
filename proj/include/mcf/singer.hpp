#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mcf/geometry.hpp"
#include "mcf/rational.hpp"

namespace mcf::singer {

// Orbits of the index-t subgroup <C^t> of the Singer cycle C. Point orbit j
// holds C^k(P) for k = j mod t, where P is point 0; line orbit u holds C^k(l)
// for k = u mod t, where l is line 0. w_j = |l ∩ P_j|.
struct SingerPartition {
  int q = 0;
  int t = 0;
  std::int64_t d = 0;
  std::vector<std::vector<PointIdx>> point_orbits;
  std::vector<std::vector<LineIdx>> line_orbits;
  std::vector<int> point_label;
  std::vector<int> line_label;
  std::vector<int> weights;
};

// throws std::invalid_argument unless the space is a plane and t | q^2+q+1
SingerPartition singer_partition(const Space& plane, int t);
// weight vector only; walks the cycle without building the plane
std::vector<int> singer_weights(const Field& F, int t);

struct BdcEvaluation {
  int t = 0;
  int m = 0;
  int q = 0;  // sum of weights minus one
  std::int64_t d = 0;  // 0 when t does not divide q^2+q+1
  std::int64_t set_size = 0;
  std::int64_t mu = 0;
  std::vector<std::int64_t> N_values;  // N_v for v = m..t-1
  std::optional<Rational> gamma;  // absent when mu = 0
};

// throws std::invalid_argument unless 1 <= m <= t-1
BdcEvaluation bdc_evaluate(std::span<const int> w, int m);

// P_0 ∪ ... ∪ P_{m-1}
PointSet orbit_union_set(const Space& plane, const SingerPartition& part, int m);

// least rotation or reflection of a cyclic weight vector
std::vector<int> weight_class(std::span<const int> w);

// divisors t of q^2+q+1 with 1 < t < q^2+q+1
std::vector<int> orbit_counts(int q);

// largest c >= 1 with gamma <= 1 + 1/(c q); nullopt when gamma = 1 or gamma > 1 + 1/q
std::optional<std::int64_t> density_margin(const Rational& gamma, int q);

}  // namespace mcf::singer
