#include "mcf/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mcf::bounds {

std::int64_t isqrt_floor(std::int64_t x) {
  if (x < 0) throw std::domain_error("square root of a negative number");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::int64_t isqrt_ceil(std::int64_t x) {
  std::int64_t r = isqrt_floor(x);
  return r * r == x ? r : r + 1;
}

std::int64_t mu_max(std::int64_t q) { return (q + 1) * (q * (q - 1) / 2); }

std::int64_t size_upper(std::int64_t q, std::int64_t mu) {
  if (mu < 1 || mu > mu_max(q)) throw std::invalid_argument("mu outside 1..(q+1)C(q,2)");
  if (mu <= q + 2) return q + mu + 1;
  return std::min(q + mu, q * q + q);
}

std::int64_t length_lower_trivial(std::int64_t q, std::int64_t mu) { return isqrt_ceil(2 * mu * q); }

ProbabilisticBound length_upper_probabilistic(std::int64_t q, std::int64_t mu) {
  ProbabilisticBound b;
  const long double lq = std::log(static_cast<long double>(q));
  b.applies_ln = mu < 121.0L * q * lq;
  b.applies_log2 = mu < 121.0L * q * std::log2(static_cast<long double>(q));
  if (b.applies_ln) {
    long double x = 66.0L * std::sqrt(static_cast<long double>(mu) * q * lq);
    b.value = static_cast<std::int64_t>(std::ceil(x)) - 1;
  }
  return b;
}

std::optional<std::int64_t> baer_upper(std::int64_t q, std::int64_t mu) {
  std::int64_t r = isqrt_floor(q);
  if (r * r != q) return std::nullopt;
  return mu * (3 * r - 1);
}

std::int64_t secant_lower(std::int64_t q, std::int64_t mu, std::int64_t r, std::int64_t s) {
  if (r < 2 || s < r) throw std::invalid_argument("secant bound needs 2 <= r <= s");
  // k >= r + 1/2 + sqrt(X)  <=>  2k - 2r - 1 >= sqrt(4X); 2k - 2r - 1 is odd
  // a negative radicand (r = q+1) leaves only k > r
  auto from = [&](std::int64_t fourX) {
    std::int64_t o = isqrt_ceil(std::max<std::int64_t>(fourX, 0));
    if (o % 2 == 0) ++o;
    return (o + 2 * r + 1) / 2;
  };
  std::int64_t x1 = 4 * (s - r) * (s + r - 2) + 8 * mu * (q - r + 1) + 5;
  std::int64_t x2 = 4 * (s - r) * (s + r - 1) + 8 * mu * (q - r) + 1;
  return std::min(from(x1), from(x2));
}

BoundReport bound_report(std::int64_t q, std::int64_t mu, std::optional<std::int64_t> r, std::optional<std::int64_t> s) {
  if (q < 2 || mu < 1) throw std::invalid_argument("bounds need q >= 2 and mu >= 1");
  BoundReport rep;
  rep.q = q;
  rep.mu = mu;
  rep.mu_max = mu_max(q);
  if (mu <= rep.mu_max)
    rep.size_upper = size_upper(q, mu);
  else
    rep.notes.push_back("mu exceeds (q+1)C(q,2): no minimal set exists and size_upper is undefined");
  rep.length_lower_trivial = length_lower_trivial(q, mu);
  rep.probabilistic = length_upper_probabilistic(q, mu);
  if (!rep.probabilistic.applies_ln) rep.notes.push_back("probabilistic bound precondition mu < 121 q ln q fails");
  if (rep.probabilistic.applies_ln != rep.probabilistic.applies_log2)
    rep.notes.push_back("probabilistic precondition differs between natural and base-2 logarithm");
  rep.baer_upper = baer_upper(q, mu);
  if (!rep.baer_upper) rep.notes.push_back("Baer bound needs square q");
  if (r || s) {
    if (!r || !s) throw std::invalid_argument("give both r and s");
    rep.secant_lower.push_back({*r, *s, secant_lower(q, mu, *r, *s)});
  } else {
    for (std::int64_t a = 2; a <= q + 1; ++a)
      for (std::int64_t b = a; b <= q + 1; ++b) rep.secant_lower.push_back({a, b, secant_lower(q, mu, a, b)});
  }
  return rep;
}

}  // namespace mcf::bounds
