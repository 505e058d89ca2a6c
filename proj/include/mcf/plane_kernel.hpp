#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mcf/geometry.hpp"

namespace mcf {

// Point set of a plane with at most 128 points (q <= 9).
struct Mask128 {
  std::uint64_t lo = 0, hi = 0;

  void set(unsigned i) { (i < 64 ? lo : hi) |= std::uint64_t{1} << (i & 63); }
  void reset(unsigned i) { (i < 64 ? lo : hi) &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(unsigned i) const { return ((i < 64 ? lo : hi) >> (i & 63)) & 1u; }
  int count() const { return std::popcount(lo) + std::popcount(hi); }
  bool any() const { return (lo | hi) != 0; }

  friend Mask128 operator&(Mask128 a, Mask128 b) { return {a.lo & b.lo, a.hi & b.hi}; }
  friend Mask128 operator|(Mask128 a, Mask128 b) { return {a.lo | b.lo, a.hi | b.hi}; }
  friend Mask128 operator^(Mask128 a, Mask128 b) { return {a.lo ^ b.lo, a.hi ^ b.hi}; }
  friend bool operator==(const Mask128&, const Mask128&) = default;
  // numeric order of the 128-bit value
  friend std::strong_ordering operator<=>(const Mask128& a, const Mask128& b) {
    if (auto c = a.hi <=> b.hi; c != 0) return c;
    return a.lo <=> b.lo;
  }

  // highest member, or -1
  int top() const {
    if (hi) return 127 - std::countl_zero(hi);
    if (lo) return 63 - std::countl_zero(lo);
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t w = lo; w; w &= w - 1) f(static_cast<unsigned>(std::countr_zero(w)));
    for (std::uint64_t w = hi; w; w &= w - 1) f(64u + static_cast<unsigned>(std::countr_zero(w)));
  }

  std::string hex() const;
  // throws std::invalid_argument on malformed input
  static Mask128 from_hex(const std::string& s);
};

// Precomputed incidence and field tables of PG(2,q) for bit-parallel kernels.
class PlaneKernel {
 public:
  static constexpr std::size_t kMaxPoints = 128;

  // throws std::invalid_argument unless the space is a plane with at most 128 points
  explicit PlaneKernel(const Space& plane);

  int q() const { return q_; }
  int h() const { return h_; }
  std::size_t num_points() const { return n_; }
  std::size_t num_lines() const { return n_; }
  const Space& space() const { return *space_; }

  const Mask128& full() const { return full_; }
  const Mask128& line(LineIdx l) const { return lines_[l]; }
  LineIdx line_through(PointIdx a, PointIdx b) const { return pair_[a * n_ + b]; }
  std::span<const LineIdx> lines_through(PointIdx p) const { return space_->lines_through(p); }
  const std::array<Elem, 3>& coords(PointIdx p) const { return coords_[p]; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  // point of any nonzero vector
  PointIdx raw_index(Elem a, Elem b, Elem c) const { return raw_[(a * q_ + b) * q_ + c]; }
  // image of p under x -> x^(p^e)
  PointIdx frobenius(int e, PointIdx p) const { return frob_[e][p]; }

  Mask128 mask_of(const PointSet& S) const;
  PointSet set_of(Mask128 m) const;
  Mask128 complement(Mask128 m) const { return m ^ full_; }

  // |l ∩ S| for every line
  void line_counts(Mask128 S, std::uint8_t* out) const;
  // a frame is four points with no three collinear
  bool has_frame(Mask128 S) const;
  bool spans(Mask128 S) const;

 private:
  const Space* space_;
  int q_, h_;
  std::size_t n_;
  Mask128 full_;
  std::vector<Mask128> lines_;
  std::vector<LineIdx> pair_;
  std::vector<std::array<Elem, 3>> coords_;
  std::vector<Elem> add_, mul_, neg_;
  std::vector<PointIdx> raw_;
  std::vector<std::vector<PointIdx>> frob_;
};

}  // namespace mcf
