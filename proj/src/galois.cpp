#include "mcf/galois.hpp"

#include <stdexcept>

namespace mcf {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<int, int> prime_power(std::int64_t q) {
  if (q < 2) return {0, 0};
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  int h = 0;
  std::int64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++h;
  }
  if (r != 1) return {0, 0};
  return {static_cast<int>(p), h};
}

namespace {

// multiply the digit vector `a` (degree < h) by x modulo the monic polynomial
// with low coefficients `c`
void times_x(std::vector<int>& a, const std::vector<int>& c, int p) {
  int h = static_cast<int>(a.size());
  int top = a[h - 1];
  for (int i = h - 1; i > 0; --i) a[i] = a[i - 1];
  a[0] = 0;
  if (top != 0)
    for (int i = 0; i < h; ++i) a[i] = ((a[i] - top * c[i]) % p + p) % p;
}

Elem encode(const std::vector<int>& a, int p) {
  Elem v = 0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) v = v * p + a[i];
  return v;
}

std::vector<int> decode(Elem v, int p, int h) {
  std::vector<int> a(h);
  for (int i = 0; i < h; ++i) {
    a[i] = static_cast<int>(v % p);
    v /= p;
  }
  return a;
}

}  // namespace

Field::Field(int p, int h) : p_(p), h_(h) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (h < 1) throw std::invalid_argument("extension degree must be >= 1");
  std::int64_t q = 1;
  for (int i = 0; i < h; ++i) {
    q *= p;
    if (q > (1 << 16)) throw std::invalid_argument("field order above 2^16");
  }
  q_ = static_cast<int>(q);

  // least monic polynomial (by base-p code of its low coefficients) whose
  // root generates the multiplicative group
  exp_.assign(q_ - 1, 0);
  for (Elem code = 0; code < static_cast<Elem>(q_); ++code) {
    std::vector<int> c = decode(code, p_, h_);
    if (c[0] == 0) continue;
    std::vector<int> a(h_, 0);
    a[0] = 1;
    bool ok = true;
    for (int k = 0; k < q_ - 1; ++k) {
      Elem v = encode(a, p_);
      if (k > 0 && v == 1) {
        ok = false;
        break;
      }
      exp_[k] = v;
      times_x(a, c, p_);
    }
    if (!ok || encode(a, p_) != 1) continue;
    modulus_ = c;
    modulus_.push_back(1);
    break;
  }
  if (modulus_.empty()) throw std::logic_error("no primitive polynomial found");

  log_.assign(q_, -1);
  for (int k = 0; k < q_ - 1; ++k) log_[exp_[k]] = k;

  if (p_ != 2) {
    // zech_[d] = log(1 + g^d), -1 when 1 + g^d = 0
    zech_.assign(q_ - 1, -1);
    for (int d = 0; d < q_ - 1; ++d) {
      std::vector<int> a = decode(exp_[d], p_, h_);
      a[0] = (a[0] + 1) % p_;
      Elem s = encode(a, p_);
      zech_[d] = s == 0 ? -1 : log_[s];
    }
  }
}

std::string Field::descriptor() const {
  std::string s = "GF(" + std::to_string(p_) + "^" + std::to_string(h_) + "); modulus=[";
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(modulus_[i]);
  }
  return s + "]";
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("division by zero in " + descriptor());
  int l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

Elem Field::exp(std::int64_t k) const {
  std::int64_t m = k % (q_ - 1);
  if (m < 0) m += q_ - 1;
  return exp_[m];
}

int Field::log(Elem a) const {
  if (a == 0) throw std::domain_error("log of zero");
  return log_[a];
}

Elem Field::pow(Elem a, std::int64_t k) const {
  if (a == 0) {
    if (k < 0) throw std::domain_error("zero to a negative power");
    return k == 0 ? 1 : 0;
  }
  std::int64_t m = (static_cast<std::int64_t>(log_[a]) * (k % (q_ - 1))) % (q_ - 1);
  return exp(m);
}

Elem Field::frobenius(Elem a, int e) const {
  e %= h_;
  if (e < 0) e += h_;
  if (a == 0 || e == 0) return a;
  std::int64_t pe = 1;
  for (int i = 0; i < e; ++i) pe *= p_;
  return pow(a, pe);
}

Elem Field::trace(Elem a) const {
  Elem t = 0, x = a;
  for (int i = 0; i < h_; ++i) {
    t = add(t, x);
    x = frobenius(x, 1);
  }
  return t;
}

Elem Field::sqrt(Elem a) const {
  if (p_ != 2) throw std::invalid_argument("sqrt is provided for even q only");
  return pow(a, q_ / 2);
}

std::vector<Elem> Field::subfield(int d) const {
  if (d < 1 || h_ % d != 0) throw std::invalid_argument("subfield degree must divide h");
  std::vector<Elem> out;
  for (Elem a = 0; a < static_cast<Elem>(q_); ++a)
    if (in_subfield(a, d)) out.push_back(a);
  return out;
}

FieldPtr make_field(int p, int h) { return std::make_shared<const Field>(p, h); }

FieldPtr make_field(int q) {
  auto [p, h] = prime_power(q);
  if (p == 0) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return make_field(p, h);
}

FieldElement::FieldElement(FieldPtr f, Elem v) : f_(std::move(f)), v_(v) {
  if (!f_) throw std::invalid_argument("null field");
  if (v_ >= static_cast<Elem>(f_->q())) throw std::invalid_argument("element code out of range");
}

bool FieldElement::same_field(const FieldElement& o) const { return f_ == o.f_ || *f_ == *o.f_; }

void FieldElement::check(const FieldElement& o) const {
  if (!same_field(o)) throw std::invalid_argument("field mismatch");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check(o);
  return {f_, f_->add(v_, o.v_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check(o);
  return {f_, f_->sub(v_, o.v_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check(o);
  return {f_, f_->mul(v_, o.v_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check(o);
  return {f_, f_->div(v_, o.v_)};
}
FieldElement FieldElement::inv() const { return {f_, f_->inv(v_)}; }

}  // namespace mcf
