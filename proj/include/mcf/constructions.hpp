#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcf/geometry.hpp"
#include "mcf/rational.hpp"
#include "mcf/saturate.hpp"

namespace mcf::constructions {

enum class ClaimedKind { OS, MCF };
std::string to_string(ClaimedKind k);

struct ConstructionResult {
  std::string name;
  std::map<std::string, std::int64_t> parameters;
  PointSet point_set;
  std::int64_t claimed_n = 0;
  std::int64_t claimed_mu = 0;
  // false when claimed_mu is only a lower bound on the minimum coverage
  bool mu_exact = true;
  ClaimedKind claimed_kind = ClaimedKind::MCF;
  std::optional<Rational> claimed_gamma;
  std::optional<Rational> gamma_upper_bound;
  std::optional<bool> claimed_minimal;
  std::optional<int> claimed_distance;
  // size bound the construction must respect, as (integer part, sqrt(q) coefficient)
  std::optional<std::pair<std::int64_t, std::int64_t>> size_bound;
  CountingMode mode = CountingMode::weighted;

  SaturationReport report;
  std::optional<int> minimum_distance;
  bool verified = false;
  std::vector<std::string> discrepancies;
};

struct Params {
  std::optional<int> s, L, b, k, copies;
  std::string of;  // inner family for complement
  bool square = false;
  std::vector<PointSet> sets;  // explicit copies for disjoint_copies
};

// runs saturate on the point set and fills report / verified / discrepancies
void verify(const Space& space, ConstructionResult& r);

ConstructionResult oval(const Space& space);
ConstructionResult hyperoval(const Space& space);
ConstructionResult denniston(const Space& space, int s);
ConstructionResult hermitian(const Space& space);
ConstructionResult baer(const Space& space);
ConstructionResult elliptic_quadric(const Space& space);
// inner: hyperoval | oval | denniston | hermitian | baer | elliptic_quadric | cap
ConstructionResult complement(const Space& space, const std::string& inner, const Params& p);
ConstructionResult line_plus_two_points(const Space& space);
ConstructionResult two_chords_config(const Space& space);
ConstructionResult aligned_config(const Space& space);
ConstructionResult concurrent_lines(const Space& space, int L);
ConstructionResult pencil_partial(const Space& space, int b);
ConstructionResult triangle(const Space& space);
ConstructionResult complement_vertexless_triangle(const Space& space);
ConstructionResult disjoint_copies(const Space& space, const std::vector<PointSet>& copies);
// `copies` Singer images of the oval (q odd) or hyperoval (q even), chosen greedily
ConstructionResult disjoint_copies(const Space& space, int copies);
ConstructionResult even_q_set(const Space& space, bool square_variant = false);

// first k points of the oval/hyperoval (N = 2) or elliptic quadric (N = 3)
PointSet cap_points(const Space& space, int k);

ConstructionResult construct(const std::string& family, const Space& space, const Params& p);
std::vector<std::string> family_names();

// per-point i-secant counts x_i (index i = 0..q+1) for points of K, or nullopt if not constant
std::optional<std::vector<std::int64_t>> constant_secant_distribution(const Space& space, const PointSet& K);

}  // namespace mcf::constructions
