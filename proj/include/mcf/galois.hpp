#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace mcf {

using Elem = std::uint32_t;

// GF(p^h). Elements are coded as base-p digit vectors of polynomials in the
// root of `modulus`, so 0 and 1 keep their usual meaning.
class Field {
 public:
  // throws std::invalid_argument for non-prime p, h < 1 or q > 2^16
  Field(int p, int h);

  int p() const { return p_; }
  int h() const { return h_; }
  int q() const { return q_; }
  // monic modulus coefficients c0..ch (low to high)
  const std::vector<int>& modulus() const { return modulus_; }
  std::string descriptor() const;

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (a == 0) return b;
    if (b == 0) return a;
    int la = log_[a], lb = log_[b];
    int d = lb - la;
    if (d < 0) d += q_ - 1;
    int z = zech_[d];
    if (z < 0) return 0;
    int e = la + z;
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  Elem neg(Elem a) const {
    if (p_ == 2 || a == 0) return a;
    int e = log_[a] + (q_ - 1) / 2;
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    int e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t k) const;
  // a^(p^e)
  Elem frobenius(Elem a, int e = 1) const;
  Elem trace(Elem a) const;
  // unique square root, q even only
  Elem sqrt(Elem a) const;

  Elem generator() const { return exp_[1 % (q_ - 1 > 0 ? q_ - 1 : 1)]; }
  Elem exp(std::int64_t k) const;
  int log(Elem a) const;

  // elements fixed by x -> x^(p^d), i.e. the subfield GF(p^d); d must divide h
  std::vector<Elem> subfield(int d) const;
  bool in_subfield(Elem a, int d) const { return frobenius(a, d) == a; }

  bool operator==(const Field& o) const { return p_ == o.p_ && h_ == o.h_ && modulus_ == o.modulus_; }

 private:
  int p_, h_, q_;
  std::vector<int> modulus_;
  std::vector<Elem> exp_;
  std::vector<int> log_;
  std::vector<int> zech_;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(int p, int h);
// q = p^h with p prime, else throws
FieldPtr make_field(int q);
bool is_prime(std::int64_t n);
// (p, h) with q = p^h, or (0, 0) if q is not a prime power
std::pair<int, int> prime_power(std::int64_t q);

// Value type over a shared field; mixing fields throws.
class FieldElement {
 public:
  FieldElement(FieldPtr f, Elem v);
  const FieldPtr& field() const { return f_; }
  Elem value() const { return v_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {f_, f_->neg(v_)}; }
  FieldElement inv() const;
  FieldElement pow(std::int64_t k) const { return {f_, f_->pow(v_, k)}; }
  FieldElement sqrt() const { return {f_, f_->sqrt(v_)}; }
  FieldElement trace() const { return {f_, f_->trace(v_)}; }
  bool operator==(const FieldElement& o) const { return same_field(o) && v_ == o.v_; }

 private:
  bool same_field(const FieldElement& o) const;
  void check(const FieldElement& o) const;
  FieldPtr f_;
  Elem v_;
};

}  // namespace mcf
