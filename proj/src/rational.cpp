#include "mcf/rational.hpp"

#include <limits>

namespace mcf {

namespace {
__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  constexpr __int128 lim = std::numeric_limits<std::int64_t>::max();
  if (n > lim || -n > lim || d > lim) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal(int places) const {
  __int128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  __int128 n = num_;
  bool negative = n < 0;
  if (negative) n = -n;
  // round half up on the magnitude
  __int128 scaled = (n * scale * 2 + den_) / (2 * static_cast<__int128>(den_));
  auto whole = static_cast<std::int64_t>(scaled / scale);
  auto frac = static_cast<std::int64_t>(scaled % scale);
  std::string out = negative && scaled != 0 ? "-" : "";
  out += std::to_string(whole);
  if (places > 0) {
    std::string f = std::to_string(frac);
    out += "." + std::string(places - f.size(), '0') + f;
  }
  return out;
}

}  // namespace mcf
