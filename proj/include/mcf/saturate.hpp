#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcf/geometry.hpp"
#include "mcf/rational.hpp"

namespace mcf {

// weighted: a k-secant through Q counts C(k,2); distinct: it counts 1
enum class CountingMode { weighted, distinct };

std::string to_string(CountingMode m);
CountingMode parse_counting_mode(const std::string& s);

inline std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }
inline std::int64_t choose3(std::int64_t k) { return k * (k - 1) * (k - 2) / 6; }

struct CoverageVector {
  CountingMode mode = CountingMode::weighted;
  // per point of the space; -1 marks points of S, which are not covered points
  std::vector<std::int64_t> value;

  std::size_t external_count() const;
  std::int64_t min() const;  // 0 when there is no external point
  std::int64_t max() const;
  std::int64_t sum() const;
  // sorted coverage values of external points
  std::vector<std::int64_t> multiset() const;
};

// |l ∩ S| for every line l
std::vector<int> line_counts(const Space& space, const PointSet& S);
// throws std::invalid_argument when |S| < 2
CoverageVector coverage(const Space& space, const PointSet& S, CountingMode mode = CountingMode::weighted);

struct SaturationReport {
  std::string field;
  int q = 0;
  int N = 0;
  std::size_t n = 0;
  std::int64_t mu_required = 0;
  bool m1 = false;
  bool m2 = false;
  bool m3 = false;
  std::int64_t mu = 0;
  std::int64_t coverage_min = 0;
  std::int64_t coverage_max = 0;
  std::int64_t coverage_sum = 0;
  std::int64_t b3 = 0;
  std::optional<Rational> gamma;
  bool minimal = false;
  bool optimal = false;
  CountingMode counting_mode = CountingMode::weighted;

  bool saturating() const { return m1 && m2 && m3; }
};

SaturationReport check_saturating(const Space& space, const PointSet& S, std::int64_t mu,
                                  CountingMode mode = CountingMode::weighted);

// throws std::invalid_argument when S is not (1,mu)-saturating
bool is_minimal(const Space& space, const PointSet& S, std::int64_t mu, CountingMode mode = CountingMode::weighted);
// constant weighted coverage; (false, min coverage) otherwise
std::pair<bool, std::int64_t> is_optimal(const Space& space, const PointSet& S);

std::int64_t b3_count(const Space& space, const PointSet& S);
inline std::int64_t a3_count(const Space& space, const PointSet& S) { return (space.q() - 1) * b3_count(space, S); }

enum class DensityRoute { geometric, formula, coset };
std::string to_string(DensityRoute r);

// exact mu-density of the code with parity-check columns S; S must be (1,mu)-saturating
Rational gamma_density(const Space& space, const PointSet& S, std::int64_t mu,
                       DensityRoute route = DensityRoute::geometric);
// the B3 formula with explicit parameters
Rational gamma_formula(std::int64_t q, std::int64_t n, std::int64_t pg_points, std::int64_t b3, std::int64_t mu);

// Exact covering radius by syndrome search; nullopt when S does not span.
// Oracle scale: |S| <= 24 and q^(N+1) <= 2^24.
std::optional<int> covering_radius(const Space& space, const PointSet& S);
// minimum distance of the code; nullopt when no set of columns is dependent
std::optional<int> minimum_distance(const Space& space, const PointSet& S);

// Serial brute-force versions used as test oracles and benchmark baselines.
namespace reference {
CoverageVector coverage(const Space& space, const PointSet& S, CountingMode mode = CountingMode::weighted);
std::int64_t b3_count(const Space& space, const PointSet& S);
// weight-3 codewords enumerated over supports and nonzero coefficients
std::int64_t a3_codewords(const Space& space, const PointSet& S);
bool is_saturating(const Space& space, const PointSet& S, std::int64_t mu, CountingMode mode = CountingMode::weighted);
bool is_minimal(const Space& space, const PointSet& S, std::int64_t mu, CountingMode mode = CountingMode::weighted);
}  // namespace reference

}  // namespace mcf
