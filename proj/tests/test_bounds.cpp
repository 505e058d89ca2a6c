#include <gtest/gtest.h>

#include <cmath>

#include "mcf/bounds.hpp"

using namespace mcf::bounds;

namespace {

// smallest k >= r with (2k - 2r - 1)^2 >= fourX, by scanning
std::int64_t scan(std::int64_t r, std::int64_t fourX) {
  for (std::int64_t k = r;; ++k) {
    std::int64_t o = 2 * k - 2 * r - 1;
    if (o > 0 && o * o >= fourX) return k;
  }
}

}  // namespace

TEST(Bounds, IntegerSquareRoots) {
  for (std::int64_t x = 0; x < 5000; ++x) {
    std::int64_t f = isqrt_floor(x), c = isqrt_ceil(x);
    EXPECT_LE(f * f, x);
    EXPECT_GT((f + 1) * (f + 1), x);
    EXPECT_GE(c * c, x);
    if (c > 0) EXPECT_LT((c - 1) * (c - 1), x);
  }
  EXPECT_EQ(isqrt_floor(std::int64_t{1} << 62), std::int64_t{1} << 31);
  EXPECT_THROW(isqrt_floor(-1), std::domain_error);
}

TEST(Bounds, SecantLowerMatchesScan) {
  for (std::int64_t q : {3, 4, 5, 7, 8, 9, 16})
    for (std::int64_t mu = 1; mu <= 40; ++mu)
      for (std::int64_t r = 2; r <= q + 1; ++r)
        for (std::int64_t s = r; s <= q + 1; ++s) {
          std::int64_t a = scan(r, 4 * (s - r) * (s + r - 2) + 8 * mu * (q - r + 1) + 5);
          std::int64_t b = scan(r, 4 * (s - r) * (s + r - 1) + 8 * mu * (q - r) + 1);
          ASSERT_EQ(secant_lower(q, mu, r, s), std::min(a, b)) << q << " " << mu << " " << r << " " << s;
        }
  EXPECT_THROW(secant_lower(5, 2, 1, 3), std::invalid_argument);
  EXPECT_THROW(secant_lower(5, 2, 4, 3), std::invalid_argument);
}

TEST(Bounds, SizeUpperPiecewise) {
  EXPECT_EQ(mu_max(3), 12);
  EXPECT_EQ(mu_max(5), 60);
  EXPECT_EQ(size_upper(3, 2), 6);
  EXPECT_EQ(size_upper(5, 2), 8);
  EXPECT_EQ(size_upper(5, 7), 13);
  EXPECT_EQ(size_upper(5, 8), 13);
  EXPECT_EQ(size_upper(3, 12), 12);
  EXPECT_THROW(size_upper(3, 13), std::invalid_argument);
  EXPECT_THROW(size_upper(3, 0), std::invalid_argument);
  for (std::int64_t q : {3, 4, 5, 7})
    for (std::int64_t mu = 1; mu < mu_max(q); ++mu) EXPECT_LE(size_upper(q, mu), size_upper(q, mu + 1));
}

TEST(Bounds, TrivialLower) {
  for (std::int64_t q : {2, 3, 7, 13})
    for (std::int64_t mu = 1; mu < 50; ++mu) {
      std::int64_t n = length_lower_trivial(q, mu);
      EXPECT_GE(n * n, 2 * mu * q);
      EXPECT_LT((n - 1) * (n - 1), 2 * mu * q);
    }
  EXPECT_EQ(length_lower_trivial(7, 1), 4);
}

TEST(Bounds, Probabilistic) {
  auto b = length_upper_probabilistic(7, 3);
  EXPECT_TRUE(b.applies_ln);
  ASSERT_TRUE(b.value);
  long double x = 66.0L * std::sqrt(3.0L * 7 * std::log(7.0L));
  EXPECT_LT(*b.value, x);
  EXPECT_GE(*b.value + 1, x);
  // between 121 q ln q and 121 q log2 q only the base-2 reading applies
  auto c = length_upper_probabilistic(4, 700);
  EXPECT_FALSE(c.applies_ln);
  EXPECT_TRUE(c.applies_log2);
  EXPECT_FALSE(c.value);
}

TEST(Bounds, Baer) {
  EXPECT_EQ(baer_upper(9, 2), 16);
  EXPECT_EQ(baer_upper(16, 1), 11);
  EXPECT_FALSE(baer_upper(8, 1));
}

TEST(Bounds, Report) {
  auto rep = bound_report(5, 3);
  EXPECT_EQ(rep.mu_max, 60);
  EXPECT_EQ(rep.size_upper, 9);
  EXPECT_EQ(rep.secant_lower.size(), 15u);
  auto one = bound_report(5, 3, 2, 4);
  ASSERT_EQ(one.secant_lower.size(), 1u);
  EXPECT_EQ(one.secant_lower[0].value, secant_lower(5, 3, 2, 4));
  EXPECT_THROW(bound_report(5, 3, 2, std::nullopt), std::invalid_argument);
  auto big = bound_report(3, 20);
  EXPECT_FALSE(big.size_upper);
  EXPECT_FALSE(big.notes.empty());
}
