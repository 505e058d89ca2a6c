#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mcf::bounds {

// largest mu for which a minimal (1,mu)-saturating set can exist in PG(2,q)
std::int64_t mu_max(std::int64_t q);
// largest size of a minimal (1,mu)-saturating set; throws when mu > mu_max(q) or mu < 1
std::int64_t size_upper(std::int64_t q, std::int64_t mu);

// ceil(sqrt(2 mu q))
std::int64_t length_lower_trivial(std::int64_t q, std::int64_t mu);

struct ProbabilisticBound {
  bool applies_ln = false;  // mu < 121 q ln q
  bool applies_log2 = false;  // mu < 121 q log2 q
  std::optional<std::int64_t> value;  // largest integer below 66 sqrt(mu q ln q), set when applies_ln
};
ProbabilisticBound length_upper_probabilistic(std::int64_t q, std::int64_t mu);

// mu (3 sqrt(q) - 1) for square q; nullopt otherwise
std::optional<std::int64_t> baer_upper(std::int64_t q, std::int64_t mu);

// smallest size allowed for a (1,mu)-saturating set with an r-secant and an s-secant;
// throws unless 2 <= r <= s
std::int64_t secant_lower(std::int64_t q, std::int64_t mu, std::int64_t r, std::int64_t s);

struct SecantBound {
  std::int64_t r, s, value;
};

struct BoundReport {
  std::int64_t q = 0;
  std::int64_t mu = 0;
  std::int64_t mu_max = 0;
  std::optional<std::int64_t> size_upper;  // absent when mu > mu_max
  std::int64_t length_lower_trivial = 0;
  ProbabilisticBound probabilistic;
  std::optional<std::int64_t> baer_upper;
  std::vector<SecantBound> secant_lower;
  std::vector<std::string> notes;
};

// secant bounds for the requested (r,s), or for every 2 <= r <= s <= q+1 when absent
BoundReport bound_report(std::int64_t q, std::int64_t mu, std::optional<std::int64_t> r = std::nullopt,
                         std::optional<std::int64_t> s = std::nullopt);

// exact integer helpers
std::int64_t isqrt_floor(std::int64_t x);
std::int64_t isqrt_ceil(std::int64_t x);

}  // namespace mcf::bounds
